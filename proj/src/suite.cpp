// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#include "sap/suite.hpp"

#include <array>

namespace sap
{
namespace
{
constexpr std::array<std::pair<CurveId, std::string_view>, 6> names = {{
    {CurveId::BN254, "bn254"},
    {CurveId::BLS12_377, "bls12-377"},
    {CurveId::BLS12_381, "bls12-381"},
    {CurveId::BLS24_315, "bls24-315"},
    {CurveId::BW6_633, "bw6-633"},
    {CurveId::BW6_761, "bw6-761"},
}};
}  // namespace

std::string_view curve_name(CurveId id) noexcept
{
    for (const auto& [k, v] : names)
        if (k == id)
            return v;
    return "unknown";
}

CurveId parse_curve(std::string_view name)
{
    for (const auto& [k, v] : names)
        if (v == name)
            return k;
    throw ConfigError("unknown curve '" + std::string(name) + "'");
}

bool curve_available(CurveId id) noexcept
{
    return id == CurveId::BN254 || id == CurveId::BLS12_381;
}

}  // namespace sap
