// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include "sap/bigint.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>

namespace sap
{
namespace detail
{
template <std::size_t N>
constexpr std::uint64_t mont_inv(const Limbs<N>& p) noexcept
{
    // Newton iteration for p^-1 mod 2^64, then negate.
    std::uint64_t inv = 1;
    for (int i = 0; i < 7; ++i)
        inv *= 2 - p[0] * inv;
    return ~inv + 1;
}

template <std::size_t N>
constexpr Limbs<N> double_mod(Limbs<N> a, const Limbs<N>& p) noexcept
{
    const std::uint64_t carry = limbs_add(a, Limbs<N>(a));
    if (carry != 0 || limbs_geq(a, p))
        limbs_sub(a, p);
    return a;
}

/// 2^(64*N*k) mod p for k = 1 (R) or k = 2 (R^2).
template <std::size_t N>
constexpr Limbs<N> pow2_mod(const Limbs<N>& p, std::size_t bits) noexcept
{
    Limbs<N> a{};
    a[0] = 1;
    for (std::size_t i = 0; i < bits; ++i)
        a = double_mod(a, p);
    return a;
}
}  // namespace detail

/// Prime field element in Montgomery representation.
///
/// `Params` supplies `limbs`, `bytes` (canonical big-endian encoding width) and `modulus`.
template <class Params>
class Field
{
public:
    static constexpr std::size_t N = Params::limbs;
    static constexpr std::size_t byte_size = Params::bytes;
    using Repr = Limbs<N>;
    using Bytes = std::array<std::uint8_t, byte_size>;

    static constexpr Repr modulus = Params::modulus;
    static constexpr std::uint64_t inv = detail::mont_inv(modulus);
    static constexpr Repr r1 = detail::pow2_mod(modulus, 64 * N);
    static constexpr Repr r2 = detail::pow2_mod(modulus, 128 * N);
    static constexpr std::size_t bits = limbs_bit_length(modulus);

    constexpr Field() noexcept = default;

    static constexpr Field zero() noexcept { return {}; }
    static constexpr Field one() noexcept { return Field(r1, raw_tag{}); }

    static constexpr Field from_u64(std::uint64_t x) noexcept
    {
        Repr a{};
        a[0] = x;
        return from_reduced(a);
    }

    /// Any N-limb integer, reduced mod p.
    static constexpr Field from_reduced(const Repr& a) noexcept
    {
        return Field(mont_mul(a, r2), raw_tag{});
    }

    /// Rejects values >= p.
    static constexpr std::optional<Field> from_canonical(const Repr& a) noexcept
    {
        if (limbs_geq(a, modulus))
            return std::nullopt;
        return from_reduced(a);
    }

    /// Big-endian integer of any length; nullopt unless it is below p.
    static std::optional<Field> from_be_bytes(std::span<const std::uint8_t> in) noexcept
    {
        Repr a{};
        if (!limbs_from_be<N>(in, a))
            return std::nullopt;
        return from_canonical(a);
    }

    /// Big-endian integer of any length, reduced mod p.
    static Field from_be_bytes_reduce(std::span<const std::uint8_t> in) noexcept
    {
        constexpr std::size_t chunk = 8 * N;
        const Field shift = Field(r2, raw_tag{});  // value 2^(64N)
        Field acc;
        std::size_t head = in.size() % chunk;
        if (head == 0 && !in.empty())
            head = chunk;
        std::size_t pos = 0;
        while (pos < in.size())
        {
            const std::size_t len = pos == 0 ? head : chunk;
            Repr part{};
            limbs_from_be<N>(in.subspan(pos, len), part);
            acc = acc * shift + from_reduced(part);
            pos += len;
        }
        return acc;
    }

    template <class Rng>
    static Field random(Rng& rng)
    {
        Repr a{};
        for (auto& w : a)
            w = static_cast<std::uint64_t>(rng());
        return from_reduced(a);
    }

    template <class Rng>
    static Field random_nonzero(Rng& rng)
    {
        for (;;)
        {
            const Field f = random(rng);
            if (!f.is_zero())
                return f;
        }
    }

    constexpr Repr to_canonical() const noexcept
    {
        Repr one{};
        one[0] = 1;
        return mont_mul(v_, one);
    }

    Bytes to_be_bytes() const noexcept
    {
        Bytes out{};
        limbs_to_be<N>(to_canonical(), out);
        return out;
    }

    constexpr bool is_zero() const noexcept { return limbs_is_zero(v_); }
    constexpr bool is_one() const noexcept { return v_ == r1; }
    constexpr bool is_odd() const noexcept { return (to_canonical()[0] & 1U) != 0; }

    friend constexpr bool operator==(const Field& a, const Field& b) noexcept = default;

    constexpr Field& operator+=(const Field& b) noexcept
    {
        const std::uint64_t carry = limbs_add(v_, b.v_);
        v_ = reduce_once(v_, carry);
        return *this;
    }

    constexpr Field& operator-=(const Field& b) noexcept
    {
        if (limbs_sub(v_, b.v_) != 0)
            limbs_add(v_, modulus);
        return *this;
    }

    constexpr Field& operator*=(const Field& b) noexcept
    {
        v_ = mont_mul(v_, b.v_);
        return *this;
    }

    friend constexpr Field operator+(Field a, const Field& b) noexcept { return a += b; }
    friend constexpr Field operator-(Field a, const Field& b) noexcept { return a -= b; }
    friend constexpr Field operator*(Field a, const Field& b) noexcept { return a *= b; }

    constexpr Field operator-() const noexcept
    {
        if (is_zero())
            return *this;
        Repr r = modulus;
        limbs_sub(r, v_);
        return Field(r, raw_tag{});
    }

    constexpr Field dbl() const noexcept { return *this + *this; }
    constexpr Field square() const noexcept { return *this * *this; }

    /// Multiplication by a small non-negative integer via double-and-add.
    constexpr Field mul_small(std::uint64_t k) const noexcept
    {
        Field acc;
        Field base = *this;
        while (k != 0)
        {
            if ((k & 1U) != 0)
                acc += base;
            base = base.dbl();
            k >>= 1;
        }
        return acc;
    }

    template <std::size_t M>
    constexpr Field pow(const Limbs<M>& e) const noexcept
    {
        Field acc = one();
        for (std::size_t i = limbs_bit_length(e); i-- > 0;)
        {
            acc = acc.square();
            if (limbs_bit(e, i))
                acc *= *this;
        }
        return acc;
    }

    /// Zero maps to zero.
    constexpr Field inverse() const noexcept
    {
        Repr e = modulus;
        Repr two{};
        two[0] = 2;
        limbs_sub(e, two);
        return pow(e);
    }

    /// Square root for p = 3 mod 4; nullopt when a is a non-residue.
    constexpr std::optional<Field> sqrt() const noexcept
    {
        static_assert((modulus[0] & 3U) == 3U, "sqrt implemented for p = 3 mod 4");
        Repr e = modulus;
        Repr one{};
        one[0] = 1;
        limbs_add(e, one);
        limbs_shr1(e);
        limbs_shr1(e);
        const Field s = pow(e);
        if (s.square() != *this)
            return std::nullopt;
        return s;
    }

    /// Raw Montgomery limbs; only for hashing/containers.
    constexpr const Repr& raw() const noexcept { return v_; }

private:
    struct raw_tag
    {};
    constexpr Field(const Repr& v, raw_tag) noexcept : v_(v) {}

    static constexpr Repr mont_mul(const Repr& a, const Repr& b) noexcept
    {
        if constexpr (modulus[N - 1] < 0x7fffffffffffffffULL)
            return mont_mul_spare_bit(a, b);
        else
            return mont_mul_full(a, b);
    }

    /// CIOS without the extra carry word; needs a spare top bit in the modulus.
    static constexpr Repr mont_mul_spare_bit(const Repr& a, const Repr& b) noexcept
    {
        Repr t{};
        for (std::size_t i = 0; i < N; ++i)
        {
            u128 c = static_cast<u128>(a[0]) * b[i] + t[0];
            t[0] = static_cast<std::uint64_t>(c);
            std::uint64_t hi_a = static_cast<std::uint64_t>(c >> 64);
            const std::uint64_t m = t[0] * inv;
            c = static_cast<u128>(m) * modulus[0] + t[0];
            std::uint64_t hi_m = static_cast<std::uint64_t>(c >> 64);
            for (std::size_t j = 1; j < N; ++j)
            {
                c = static_cast<u128>(a[j]) * b[i] + t[j] + hi_a;
                hi_a = static_cast<std::uint64_t>(c >> 64);
                c = static_cast<u128>(m) * modulus[j] + static_cast<std::uint64_t>(c) + hi_m;
                hi_m = static_cast<std::uint64_t>(c >> 64);
                t[j - 1] = static_cast<std::uint64_t>(c);
            }
            t[N - 1] = hi_m + hi_a;
        }
        return reduce_once(t, 0);
    }

    static constexpr Repr mont_mul_full(const Repr& a, const Repr& b) noexcept
    {
        std::uint64_t t[N + 2] = {};
        for (std::size_t i = 0; i < N; ++i)
        {
            u128 c = 0;
            for (std::size_t j = 0; j < N; ++j)
            {
                c += static_cast<u128>(a[j]) * b[i] + t[j];
                t[j] = static_cast<std::uint64_t>(c);
                c >>= 64;
            }
            c += t[N];
            t[N] = static_cast<std::uint64_t>(c);
            t[N + 1] = static_cast<std::uint64_t>(c >> 64);

            const std::uint64_t m = t[0] * inv;
            c = static_cast<u128>(m) * modulus[0] + t[0];
            c >>= 64;
            for (std::size_t j = 1; j < N; ++j)
            {
                c += static_cast<u128>(m) * modulus[j] + t[j];
                t[j - 1] = static_cast<std::uint64_t>(c);
                c >>= 64;
            }
            c += t[N];
            t[N - 1] = static_cast<std::uint64_t>(c);
            t[N] = t[N + 1] + static_cast<std::uint64_t>(c >> 64);
        }
        Repr r{};
        for (std::size_t i = 0; i < N; ++i)
            r[i] = t[i];
        return reduce_once(r, t[N]);
    }

    /// (carry:a) - p if that is non-negative, else a.
    static constexpr Repr reduce_once(const Repr& a, std::uint64_t carry) noexcept
    {
        Repr r = a;
        const std::uint64_t borrow = limbs_sub(r, modulus);
        return (carry != 0 || borrow == 0) ? r : a;
    }

    Repr v_{};
};

}  // namespace sap
