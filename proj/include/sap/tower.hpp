// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include "sap/field.hpp"

#include <array>
#include <optional>

namespace sap
{
/// Sextic twist embedding of G2: D-type untwists (x, y) -> (x w^2, y w^3),
/// M-type untwists (x, y) -> (x w^-2, y w^-3).
enum class TwistType
{
    D,
    M,
};

/// Fp2 = Fp[u] / (u^2 + 1).
///
/// `Cfg` supplies the base field `Fp` and `xi_re`, the real part of the sextic
/// non-residue xi = xi_re + u used by the upper tower levels.
template <class Cfg>
struct Fp2
{
    using Fp = typename Cfg::Fp;
    Fp c0;
    Fp c1;

    static constexpr Fp2 zero() noexcept { return {}; }
    static constexpr Fp2 one() noexcept { return {Fp::one(), Fp::zero()}; }

    constexpr bool is_zero() const noexcept { return c0.is_zero() && c1.is_zero(); }
    friend constexpr bool operator==(const Fp2&, const Fp2&) noexcept = default;

    friend constexpr Fp2 operator+(const Fp2& a, const Fp2& b) noexcept { return {a.c0 + b.c0, a.c1 + b.c1}; }
    friend constexpr Fp2 operator-(const Fp2& a, const Fp2& b) noexcept { return {a.c0 - b.c0, a.c1 - b.c1}; }
    constexpr Fp2 operator-() const noexcept { return {-c0, -c1}; }
    constexpr Fp2& operator+=(const Fp2& b) noexcept { return *this = *this + b; }
    constexpr Fp2& operator-=(const Fp2& b) noexcept { return *this = *this - b; }

    friend constexpr Fp2 operator*(const Fp2& a, const Fp2& b) noexcept
    {
        const Fp t0 = a.c0 * b.c0;
        const Fp t1 = a.c1 * b.c1;
        return {t0 - t1, (a.c0 + a.c1) * (b.c0 + b.c1) - t0 - t1};
    }
    constexpr Fp2& operator*=(const Fp2& b) noexcept { return *this = *this * b; }

    friend constexpr Fp2 operator*(const Fp2& a, const Fp& s) noexcept { return {a.c0 * s, a.c1 * s}; }

    constexpr Fp2 square() const noexcept
    {
        const Fp t = c0 * c1;
        return {(c0 + c1) * (c0 - c1), t + t};
    }

    constexpr Fp2 dbl() const noexcept { return {c0.dbl(), c1.dbl()}; }
    constexpr Fp2 conjugate() const noexcept { return {c0, -c1}; }

    /// Multiplication by xi = xi_re + u.
    constexpr Fp2 mul_by_xi() const noexcept
    {
        if constexpr (Cfg::xi_re == 1)
            return {c0 - c1, c0 + c1};
        else
            return {c0.mul_small(Cfg::xi_re) - c1, c0 + c1.mul_small(Cfg::xi_re)};
    }

    constexpr Fp2 inverse() const noexcept
    {
        const Fp t = (c0.square() + c1.square()).inverse();
        return {c0 * t, -(c1 * t)};
    }

    template <std::size_t M>
    constexpr Fp2 pow(const Limbs<M>& e) const noexcept
    {
        Fp2 acc = one();
        for (std::size_t i = limbs_bit_length(e); i-- > 0;)
        {
            acc = acc.square();
            if (limbs_bit(e, i))
                acc *= *this;
        }
        return acc;
    }

    /// sgn0 as used for point compression: parity of c0, or of c1 when c0 is zero.
    constexpr bool sign() const noexcept { return c0.is_zero() ? c1.is_odd() : c0.is_odd(); }

    /// Square root for p = 3 mod 4 (complex method); nullopt for non-squares.
    constexpr std::optional<Fp2> sqrt() const noexcept
    {
        if (is_zero())
            return Fp2{};
        auto e1 = Fp::modulus;  // (p - 3) / 4
        Limbs<Fp::N> three{};
        three[0] = 3;
        limbs_sub(e1, three);
        limbs_shr1(e1);
        limbs_shr1(e1);
        const Fp2 a1 = pow(e1);
        const Fp2 alpha = a1.square() * *this;
        const Fp2 x0 = a1 * *this;
        Fp2 x;
        if (alpha == -one())
            x = Fp2{-x0.c1, x0.c0};  // u * x0
        else
        {
            auto e2 = Fp::modulus;  // (p - 1) / 2
            Limbs<Fp::N> one_l{};
            one_l[0] = 1;
            limbs_sub(e2, one_l);
            limbs_shr1(e2);
            const Fp2 b = (one() + alpha).pow(e2);
            x = b * x0;
        }
        if (x.square() != *this)
            return std::nullopt;
        return x;
    }
};

/// Fp6 = Fp2[v] / (v^3 - xi).
template <class Cfg>
struct Fp6
{
    using F2 = Fp2<Cfg>;
    F2 c0;
    F2 c1;
    F2 c2;

    static constexpr Fp6 zero() noexcept { return {}; }
    static constexpr Fp6 one() noexcept { return {F2::one(), F2{}, F2{}}; }

    constexpr bool is_zero() const noexcept { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
    friend constexpr bool operator==(const Fp6&, const Fp6&) noexcept = default;

    friend constexpr Fp6 operator+(const Fp6& a, const Fp6& b) noexcept
    {
        return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
    }
    friend constexpr Fp6 operator-(const Fp6& a, const Fp6& b) noexcept
    {
        return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
    }
    constexpr Fp6 operator-() const noexcept { return {-c0, -c1, -c2}; }

    friend constexpr Fp6 operator*(const Fp6& a, const Fp6& b) noexcept
    {
        const F2 t0 = a.c0 * b.c0;
        const F2 t1 = a.c1 * b.c1;
        const F2 t2 = a.c2 * b.c2;
        return {
            t0 + ((a.c1 + a.c2) * (b.c1 + b.c2) - t1 - t2).mul_by_xi(),
            (a.c0 + a.c1) * (b.c0 + b.c1) - t0 - t1 + t2.mul_by_xi(),
            (a.c0 + a.c2) * (b.c0 + b.c2) - t0 - t2 + t1,
        };
    }

    friend constexpr Fp6 operator*(const Fp6& a, const F2& s) noexcept { return {a.c0 * s, a.c1 * s, a.c2 * s}; }

    constexpr Fp6 square() const noexcept
    {
        // CH-SQR2
        const F2 s0 = c0.square();
        const F2 ab = c0 * c1;
        const F2 s1 = ab.dbl();
        const F2 s2 = (c0 - c1 + c2).square();
        const F2 bc = c1 * c2;
        const F2 s3 = bc.dbl();
        const F2 s4 = c2.square();
        return {s0 + s3.mul_by_xi(), s1 + s4.mul_by_xi(), s1 + s2 + s3 - s0 - s4};
    }

    /// (c0 + c1 v + c2 v^2) * v
    constexpr Fp6 mul_by_v() const noexcept { return {c2.mul_by_xi(), c0, c1}; }

    /// Multiply by b0 + b1 v.
    constexpr Fp6 mul_by_01(const F2& b0, const F2& b1) const noexcept
    {
        const F2 t0 = c0 * b0;
        const F2 t1 = c1 * b1;
        return {
            t0 + (c2 * b1).mul_by_xi(),
            (c0 + c1) * (b0 + b1) - t0 - t1,
            t1 + c2 * b0,
        };
    }

    /// Multiply by b1 v.
    constexpr Fp6 mul_by_1(const F2& b1) const noexcept
    {
        return {(c2 * b1).mul_by_xi(), c0 * b1, c1 * b1};
    }

    constexpr Fp6 inverse() const noexcept
    {
        const F2 a = c0.square() - (c1 * c2).mul_by_xi();
        const F2 b = c2.square().mul_by_xi() - c0 * c1;
        const F2 c = c1.square() - c0 * c2;
        const F2 f = c0 * a + (c2 * b + c1 * c).mul_by_xi();
        const F2 fi = f.inverse();
        return {a * fi, b * fi, c * fi};
    }
};

/// Fp12 = Fp6[w] / (w^2 - v), so w^6 = xi.
///
/// Coefficient of w^i (i = 0..5) lives at: c0.c0, c1.c0, c0.c1, c1.c1, c0.c2, c1.c2.
template <class Cfg>
struct Fp12
{
    using F2 = Fp2<Cfg>;
    using F6 = Fp6<Cfg>;
    using Fp = typename Cfg::Fp;
    F6 c0;
    F6 c1;

    static constexpr Fp12 one() noexcept { return {F6::one(), F6{}}; }

    constexpr bool is_one() const noexcept { return *this == one(); }
    constexpr bool is_zero() const noexcept { return c0.is_zero() && c1.is_zero(); }
    friend constexpr bool operator==(const Fp12&, const Fp12&) noexcept = default;

    friend constexpr Fp12 operator*(const Fp12& a, const Fp12& b) noexcept
    {
        const F6 t0 = a.c0 * b.c0;
        const F6 t1 = a.c1 * b.c1;
        return {t0 + t1.mul_by_v(), (a.c0 + a.c1) * (b.c0 + b.c1) - t0 - t1};
    }
    constexpr Fp12& operator*=(const Fp12& b) noexcept { return *this = *this * b; }

    constexpr Fp12 square() const noexcept
    {
        const F6 ab = c0 * c1;
        const F6 s = (c0 + c1) * (c0 + c1.mul_by_v());
        return {s - ab - ab.mul_by_v(), ab + ab};
    }

    constexpr Fp12 conjugate() const noexcept { return {c0, -c1}; }

    constexpr Fp12 inverse() const noexcept
    {
        const F6 t = (c0.square() - c1.square().mul_by_v()).inverse();
        return {c0 * t, -(c1 * t)};
    }

    /// Sparse product with l0 + l1 w + l3 w^3 (lines on a D-type twist).
    constexpr Fp12 mul_by_013(const F2& l0, const F2& l1, const F2& l3) const noexcept
    {
        const F6 a = c0 * l0;
        const F6 b = c1.mul_by_01(l1, l3);
        const F6 s = (c0 + c1).mul_by_01(l0 + l1, l3);
        return {a + b.mul_by_v(), s - a - b};
    }

    /// Sparse product with l0 + l2 w^2 + l3 w^3 (lines on an M-type twist).
    constexpr Fp12 mul_by_023(const F2& l0, const F2& l2, const F2& l3) const noexcept
    {
        const F6 a = c0.mul_by_01(l0, l2);
        const F6 b = c1.mul_by_1(l3);
        const F6 s = (c0 + c1).mul_by_01(l0, l2 + l3);
        return {a + b.mul_by_v(), s - a - b};
    }

    /// Raises to p. Constants are xi^(i(p-1)/6).
    Fp12 frobenius() const noexcept
    {
        const auto& g = frobenius_coeffs();
        return {
            F6{c0.c0.conjugate(), c0.c1.conjugate() * g[2], c0.c2.conjugate() * g[4]},
            F6{c1.c0.conjugate() * g[1], c1.c1.conjugate() * g[3], c1.c2.conjugate() * g[5]},
        };
    }

    Fp12 frobenius(int times) const noexcept
    {
        Fp12 r = *this;
        for (int i = 0; i < times; ++i)
            r = r.frobenius();
        return r;
    }

    /// Granger-Scott squaring, valid only in the cyclotomic subgroup.
    constexpr Fp12 cyclotomic_square() const noexcept
    {
        // Over Fp4 = Fp2[s]/(s^2 - xi), s = w^3: f = A0 + A1 w + A2 w^2 with
        // A0 = (w^0, w^3), A1 = (w^1, w^4), A2 = (w^2, w^5).
        // f^2 = (3 A0^2 - 2 conj A0) + (3 s A2^2 + 2 conj A1) w + (3 A1^2 - 2 conj A2) w^2.
        const F2& a0 = c0.c0;
        const F2& b0 = c1.c1;
        const F2& a1 = c1.c0;
        const F2& b1 = c0.c2;
        const F2& a2 = c0.c1;
        const F2& b2 = c1.c2;

        auto fp4_square = [](const F2& a, const F2& b, F2& lo, F2& hi) {
            const F2 sa = a.square();
            const F2 sb = b.square();
            lo = sb.mul_by_xi() + sa;
            hi = (a + b).square() - sa - sb;
        };

        F2 t0, t1, t2, t3, t4, t5;
        fp4_square(a0, b0, t0, t1);
        fp4_square(a1, b1, t2, t3);
        fp4_square(a2, b2, t4, t5);

        const F2 w0 = (t0 - a0).dbl() + t0;
        const F2 w3 = (t1 + b0).dbl() + t1;
        const F2 x5 = t5.mul_by_xi();
        const F2 w1 = (x5 + a1).dbl() + x5;
        const F2 w4 = (t4 - b1).dbl() + t4;
        const F2 w2 = (t2 - a2).dbl() + t2;
        const F2 w5 = (t3 + b2).dbl() + t3;

        return {F6{w0, w2, w4}, F6{w1, w3, w5}};
    }

    /// Exponentiation in the cyclotomic subgroup by a non-negative exponent.
    template <std::size_t M>
    constexpr Fp12 cyclotomic_pow(const Limbs<M>& e) const noexcept
    {
        Fp12 acc = one();
        const std::size_t n = limbs_bit_length(e);
        if (n == 0)
            return acc;
        acc = *this;
        for (std::size_t i = n - 1; i-- > 0;)
        {
            acc = acc.cyclotomic_square();
            if (limbs_bit(e, i))
                acc *= *this;
        }
        return acc;
    }

    constexpr Fp12 cyclotomic_pow(std::uint64_t e) const noexcept
    {
        return cyclotomic_pow(Limbs<1>{e});
    }

    template <std::size_t M>
    constexpr Fp12 pow(const Limbs<M>& e) const noexcept
    {
        Fp12 acc = one();
        for (std::size_t i = limbs_bit_length(e); i-- > 0;)
        {
            acc = acc.square();
            if (limbs_bit(e, i))
                acc *= *this;
        }
        return acc;
    }

    /// Base-field coefficients in serialization order.
    std::array<Fp, 12> coefficients() const noexcept
    {
        return {c0.c0.c0, c0.c0.c1, c0.c1.c0, c0.c1.c1, c0.c2.c0, c0.c2.c1,
            c1.c0.c0, c1.c0.c1, c1.c1.c0, c1.c1.c1, c1.c2.c0, c1.c2.c1};
    }

    static Fp12 from_coefficients(const std::array<Fp, 12>& c) noexcept
    {
        return {F6{F2{c[0], c[1]}, F2{c[2], c[3]}, F2{c[4], c[5]}},
            F6{F2{c[6], c[7]}, F2{c[8], c[9]}, F2{c[10], c[11]}}};
    }

    static const std::array<F2, 6>& frobenius_coeffs() noexcept
    {
        static const std::array<F2, 6> coeffs = [] {
            auto e = Fp::modulus;
            Limbs<Fp::N> one_l{};
            one_l[0] = 1;
            limbs_sub(e, one_l);
            limbs_div_small(e, 6);
            const F2 xi = F2::one().mul_by_xi();
            const F2 g1 = xi.pow(e);
            std::array<F2, 6> out{};
            out[0] = F2::one();
            for (std::size_t i = 1; i < 6; ++i)
                out[i] = out[i - 1] * g1;
            return out;
        }();
        return coeffs;
    }
};

}  // namespace sap
