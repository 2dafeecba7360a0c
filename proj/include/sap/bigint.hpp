// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <type_traits>

#if defined(__x86_64__)
#include <x86intrin.h>
#endif
#include <span>
#include <stdexcept>
#include <string_view>

namespace sap
{
using u128 = unsigned __int128;

template <std::size_t N>
using Limbs = std::array<std::uint64_t, N>;

/// Little-endian limbs from a big-endian hex literal ("0x" prefix optional).
template <std::size_t N>
constexpr Limbs<N> limbs_from_hex(std::string_view hex)
{
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X'))
        hex.remove_prefix(2);
    Limbs<N> out{};
    std::size_t bit = 0;
    for (std::size_t i = hex.size(); i-- > 0;)
    {
        const char c = hex[i];
        std::uint64_t nib = 0;
        if (c >= '0' && c <= '9')
            nib = static_cast<std::uint64_t>(c - '0');
        else if (c >= 'a' && c <= 'f')
            nib = static_cast<std::uint64_t>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F')
            nib = static_cast<std::uint64_t>(c - 'A' + 10);
        else
            throw std::invalid_argument("bad hex digit");
        if (bit / 64 >= N)
        {
            if (nib != 0)
                throw std::invalid_argument("hex literal too wide");
        }
        else
            out[bit / 64] |= nib << (bit % 64);
        bit += 4;
    }
    return out;
}

template <std::size_t N>
constexpr bool limbs_is_zero(const Limbs<N>& a) noexcept
{
    for (auto w : a)
        if (w != 0)
            return false;
    return true;
}

/// a >= b
template <std::size_t N>
constexpr bool limbs_geq(const Limbs<N>& a, const Limbs<N>& b) noexcept
{
    for (std::size_t i = N; i-- > 0;)
    {
        if (a[i] != b[i])
            return a[i] > b[i];
    }
    return true;
}

/// a += b, returns carry.
template <std::size_t N>
constexpr std::uint64_t limbs_add(Limbs<N>& a, const Limbs<N>& b) noexcept
{
#if defined(__x86_64__)
    if (!std::is_constant_evaluated())
    {
        unsigned char c = 0;
        for (std::size_t i = 0; i < N; ++i)
        {
            unsigned long long r;
            c = _addcarry_u64(c, a[i], b[i], &r);
            a[i] = r;
        }
        return c;
    }
#endif
    u128 c = 0;
    for (std::size_t i = 0; i < N; ++i)
    {
        c += static_cast<u128>(a[i]) + b[i];
        a[i] = static_cast<std::uint64_t>(c);
        c >>= 64;
    }
    return static_cast<std::uint64_t>(c);
}

/// a -= b, returns borrow.
template <std::size_t N>
constexpr std::uint64_t limbs_sub(Limbs<N>& a, const Limbs<N>& b) noexcept
{
#if defined(__x86_64__)
    if (!std::is_constant_evaluated())
    {
        unsigned char c = 0;
        for (std::size_t i = 0; i < N; ++i)
        {
            unsigned long long r;
            c = _subborrow_u64(c, a[i], b[i], &r);
            a[i] = r;
        }
        return c;
    }
#endif
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < N; ++i)
    {
        const std::uint64_t ai = a[i];
        const std::uint64_t d = ai - b[i];
        const std::uint64_t d2 = d - borrow;
        borrow = static_cast<std::uint64_t>((ai < b[i]) | (d < borrow));
        a[i] = d2;
    }
    return borrow;
}

template <std::size_t N>
constexpr bool limbs_bit(const Limbs<N>& a, std::size_t i) noexcept
{
    return i < 64 * N && ((a[i / 64] >> (i % 64)) & 1U) != 0;
}

template <std::size_t N>
constexpr std::size_t limbs_bit_length(const Limbs<N>& a) noexcept
{
    for (std::size_t i = N; i-- > 0;)
    {
        if (a[i] != 0)
        {
            std::size_t n = 64 * i;
            std::uint64_t w = a[i];
            while (w != 0)
            {
                ++n;
                w >>= 1;
            }
            return n;
        }
    }
    return 0;
}

template <std::size_t N>
constexpr void limbs_shr1(Limbs<N>& a) noexcept
{
    for (std::size_t i = 0; i < N; ++i)
    {
        a[i] >>= 1;
        if (i + 1 < N)
            a[i] |= a[i + 1] << 63;
    }
}

/// Division by a small integer; returns the remainder.
template <std::size_t N>
constexpr std::uint64_t limbs_div_small(Limbs<N>& a, std::uint64_t d) noexcept
{
    u128 rem = 0;
    for (std::size_t i = N; i-- > 0;)
    {
        const u128 cur = (rem << 64) | a[i];
        a[i] = static_cast<std::uint64_t>(cur / d);
        rem = cur % d;
    }
    return static_cast<std::uint64_t>(rem);
}

/// Big-endian bytes (exactly out.size() of them) from little-endian limbs.
template <std::size_t N>
constexpr void limbs_to_be(const Limbs<N>& a, std::span<std::uint8_t> out) noexcept
{
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i)
    {
        const std::size_t byte = n - 1 - i;  // little-endian byte index
        out[i] = byte / 8 < N ? static_cast<std::uint8_t>(a[byte / 8] >> (8 * (byte % 8))) : 0;
    }
}

/// Little-endian limbs from big-endian bytes; bytes beyond the limb width must be zero.
template <std::size_t N>
constexpr bool limbs_from_be(std::span<const std::uint8_t> in, Limbs<N>& out) noexcept
{
    out = {};
    const std::size_t n = in.size();
    for (std::size_t i = 0; i < n; ++i)
    {
        const std::size_t byte = n - 1 - i;
        if (byte / 8 >= N)
        {
            if (in[i] != 0)
                return false;
            continue;
        }
        out[byte / 8] |= static_cast<std::uint64_t>(in[i]) << (8 * (byte % 8));
    }
    return true;
}

}  // namespace sap
