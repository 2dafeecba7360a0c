// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace sap
{
using Digest32 = std::array<std::uint8_t, 32>;

/// Keccak-256 with the original 0x01 padding (as used by Ethereum), not SHA3-256.
Digest32 keccak256(std::span<const std::uint8_t> data) noexcept;

}  // namespace sap
