// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include "sap/encoding.hpp"
#include "sap/keccak.hpp"
#include "sap/suite.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace sap
{
enum class ProtocolId
{
    P1,
    P2,
    P3,
    SK,
    DKSAP,
};

inline constexpr std::array<ProtocolId, 5> all_protocols = {
    ProtocolId::P1, ProtocolId::P2, ProtocolId::P3, ProtocolId::SK, ProtocolId::DKSAP};

/// "p1", "p2", "p3", "sk", "dksap".
std::string_view protocol_name(ProtocolId p) noexcept;

/// Throws ConfigError for unknown names.
ProtocolId parse_protocol(std::string_view name);

/// Everything except the single-key protocol publishes a viewing point V.
constexpr bool is_dual_key(ProtocolId p) noexcept
{
    return p != ProtocolId::SK;
}

enum class TagVariant
{
    XCOORD,  ///< leading bits of the shared point's x-coordinate
    HASH,    ///< leading bits of keccak256 of the shared secret's encoding
};

std::string_view tag_variant_name(TagVariant v) noexcept;
TagVariant parse_tag_variant(std::string_view name);

struct ViewTagConfig
{
    TagVariant variant = TagVariant::HASH;
    unsigned bits = 8;

    /// Throws ConfigError unless bits is a multiple of 4 in [0, 64].
    void validate() const;

    friend bool operator==(const ViewTagConfig&, const ViewTagConfig&) = default;
};

/// The leading `bits` bits of some byte string, right-aligned in `value`.
struct ViewTag
{
    unsigned bits = 0;
    std::uint64_t value = 0;

    /// Leading bits of `bytes` (which must hold at least bits / 8 rounded up bytes).
    static ViewTag from_leading_bits(std::span<const std::uint8_t> bytes, unsigned bits) noexcept;

    /// "0x" followed by bits / 4 nibbles.
    std::string hex() const;
    static ViewTag from_hex(std::string_view hex, unsigned bits);

    /// The same tag cut down to its leading `narrower` bits.
    ViewTag truncate(unsigned narrower) const noexcept;

    friend bool operator==(const ViewTag&, const ViewTag&) = default;
};

/// Result of the view-tag security policy. Disclosing tag bits that are not
/// a hash of the shared secret costs 4 bits of the 128-bit level per byte.
struct PolicyResult
{
    bool ok = true;
    unsigned effective_security_bits = 128;

    std::string message() const;
};

PolicyResult tag_policy_check(ProtocolId protocol, const ViewTagConfig& cfg);

using StealthAddress = std::array<std::uint8_t, 20>;

/// Last 20 bytes of keccak256(encoding).
StealthAddress address_from_encoding(std::span<const std::uint8_t> encoding) noexcept;

std::string address_hex(const StealthAddress& a);

/// One ephemeral-key registry entry.
struct Announcement
{
    std::uint64_t index = 0;
    ProtocolId protocol = ProtocolId::P1;
    CurveId curve = CurveId::BN254;
    Bytes R;
    ViewTag tag;

    friend bool operator==(const Announcement&, const Announcement&) = default;
};

}  // namespace sap
