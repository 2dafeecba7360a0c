// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include "sap/curves/bls12_381.hpp"
#include "sap/curves/bn254.hpp"
#include "sap/errors.hpp"

#include <string>
#include <string_view>
#include <utility>

namespace sap
{
/// Pairing-friendly curve suites. Only BN254 and BLS12-381 are compiled in;
/// the rest are recognised by name so that configs and files naming them
/// fail with a clear message.
enum class CurveId
{
    BN254,
    BLS12_377,
    BLS12_381,
    BLS24_315,
    BW6_633,
    BW6_761,
};

std::string_view curve_name(CurveId id) noexcept;

/// Throws ConfigError for unknown names.
CurveId parse_curve(std::string_view name);

bool curve_available(CurveId id) noexcept;

template <class S>
constexpr CurveId curve_id_of() noexcept
{
    if constexpr (std::is_same_v<S, bn254::Suite>)
        return CurveId::BN254;
    else
        return CurveId::BLS12_381;
}

/// Calls f(Suite{}) for the compiled-in suite named by id.
template <class Fn>
decltype(auto) visit_suite(CurveId id, Fn&& f)
{
    switch (id)
    {
    case CurveId::BN254:
        return std::forward<Fn>(f)(bn254::Suite{});
    case CurveId::BLS12_381:
        return std::forward<Fn>(f)(bls12_381::Suite{});
    default:
        throw ConfigError("curve " + std::string(curve_name(id)) + " is not compiled into this build");
    }
}

}  // namespace sap
