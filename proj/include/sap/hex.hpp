// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sap
{
/// Lowercase hex with a "0x" prefix.
std::string to_hex(std::span<const std::uint8_t> bytes);

/// Accepts an optional "0x" prefix and either case; throws DecodeError otherwise.
std::vector<std::uint8_t> from_hex(std::string_view hex);

}  // namespace sap
