// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#include "sap/types.hpp"

#include "sap/hex.hpp"

#include <algorithm>

namespace sap
{
namespace
{
constexpr std::array<std::string_view, 5> protocol_names = {"p1", "p2", "p3", "sk", "dksap"};
}  // namespace

std::string_view protocol_name(ProtocolId p) noexcept
{
    return protocol_names[static_cast<std::size_t>(p)];
}

ProtocolId parse_protocol(std::string_view name)
{
    for (std::size_t i = 0; i < protocol_names.size(); ++i)
        if (protocol_names[i] == name)
            return static_cast<ProtocolId>(i);
    throw ConfigError("unknown protocol '" + std::string(name) + "'");
}

std::string_view tag_variant_name(TagVariant v) noexcept
{
    return v == TagVariant::XCOORD ? "xcoord" : "hash";
}

TagVariant parse_tag_variant(std::string_view name)
{
    if (name == "xcoord")
        return TagVariant::XCOORD;
    if (name == "hash")
        return TagVariant::HASH;
    throw ConfigError("unknown tag variant '" + std::string(name) + "'");
}

void ViewTagConfig::validate() const
{
    if (bits > 64 || bits % 4 != 0)
        throw ConfigError("tag bits must be a multiple of 4 between 0 and 64, got " + std::to_string(bits));
}

ViewTag ViewTag::from_leading_bits(std::span<const std::uint8_t> bytes, unsigned bits) noexcept
{
    std::uint64_t v = 0;
    const unsigned nbytes = (bits + 7) / 8;
    for (unsigned i = 0; i < nbytes; ++i)
        v = v << 8 | bytes[i];
    if (bits % 8 != 0)
        v >>= 8 - bits % 8;
    return {bits, v};
}

std::string ViewTag::hex() const
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string s = "0x";
    for (unsigned i = bits / 4; i-- > 0;)
        s.push_back(digits[(value >> (4 * i)) & 0xf]);
    return s;
}

ViewTag ViewTag::from_hex(std::string_view hex, unsigned bits)
{
    if (!hex.starts_with("0x"))
        throw DecodeError("view tag must be 0x-prefixed");
    hex.remove_prefix(2);
    if (bits > 64 || bits % 4 != 0 || hex.size() != bits / 4)
        throw DecodeError("view tag length does not match tagbits");
    std::uint64_t v = 0;
    for (const char c : hex)
    {
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'f')
            d = c - 'a' + 10;
        else
            throw DecodeError("invalid view tag digit");
        v = v << 4 | static_cast<std::uint64_t>(d);
    }
    return {bits, v};
}

ViewTag ViewTag::truncate(unsigned narrower) const noexcept
{
    if (narrower >= bits)
        return *this;
    return {narrower, narrower == 0 ? 0 : value >> (bits - narrower)};
}

std::string PolicyResult::message() const
{
    if (ok)
        return "ok";
    return "view tag discloses shared-secret bits: effective security " + std::to_string(effective_security_bits) +
           " bits";
}

PolicyResult tag_policy_check(ProtocolId protocol, const ViewTagConfig& cfg)
{
    cfg.validate();
    if (cfg.bits == 0)
        return {};
    // Hashed tags are harmless where the stealth key does not reuse the hash
    // of the shared point.
    if (cfg.variant == TagVariant::HASH && (protocol == ProtocolId::P1 || protocol == ProtocolId::P3))
        return {};
    const unsigned bytes = (cfg.bits + 7) / 8;
    return {false, 128 - 4 * bytes};
}

StealthAddress address_from_encoding(std::span<const std::uint8_t> encoding) noexcept
{
    const auto d = keccak256(encoding);
    StealthAddress a;
    std::copy(d.end() - 20, d.end(), a.begin());
    return a;
}

std::string address_hex(const StealthAddress& a)
{
    return to_hex(a);
}

}  // namespace sap
