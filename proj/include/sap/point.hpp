// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include "sap/bigint.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace sap
{
/// Width-w non-adjacent form, little-endian digits. Nonzero digits are odd and
/// bounded by 2^(w-1) in magnitude.
template <std::size_t M>
std::vector<std::int8_t> wnaf(const Limbs<M>& k, unsigned w)
{
    Limbs<M + 1> n{};
    for (std::size_t i = 0; i < M; ++i)
        n[i] = k[i];
    const std::uint64_t mask = (std::uint64_t{1} << w) - 1;
    const std::int64_t half = std::int64_t{1} << (w - 1);
    std::vector<std::int8_t> out;
    out.reserve(64 * M + 1);
    while (!limbs_is_zero(n))
    {
        std::int64_t d = 0;
        if ((n[0] & 1U) != 0)
        {
            d = static_cast<std::int64_t>(n[0] & mask);
            if (d >= half)
                d -= std::int64_t{1} << w;
            Limbs<M + 1> t{};
            if (d > 0)
            {
                t[0] = static_cast<std::uint64_t>(d);
                limbs_sub(n, t);
            }
            else
            {
                t[0] = static_cast<std::uint64_t>(-d);
                limbs_add(n, t);
            }
        }
        out.push_back(static_cast<std::int8_t>(d));
        limbs_shr1(n);
    }
    return out;
}

template <class F>
struct Affine
{
    F x;
    F y;
    bool infinity = true;

    friend bool operator==(const Affine&, const Affine&) = default;
};

/// Short Weierstrass point y^2 = x^3 + b in Jacobian coordinates (x = X/Z^2, y = Y/Z^3).
///
/// `Curve` supplies `Field`, `b()`, `Scalar` (the prime-order scalar field),
/// `generator()` and `subgroup_check_needed`.
template <class Curve>
class Point
{
public:
    using F = typename Curve::Field;
    using AffinePoint = Affine<F>;
    using CurveType = Curve;

    constexpr Point() noexcept : x_(F::one()), y_(F::one()), z_(F::zero()) {}
    constexpr Point(const F& x, const F& y, const F& z) noexcept : x_(x), y_(y), z_(z) {}

    static constexpr Point infinity() noexcept { return {}; }

    static Point from_affine(const AffinePoint& a) noexcept
    {
        if (a.infinity)
            return {};
        return {a.x, a.y, F::one()};
    }

    static Point generator() { return from_affine(Curve::generator()); }

    bool is_infinity() const noexcept { return z_.is_zero(); }

    const F& x() const noexcept { return x_; }
    const F& y() const noexcept { return y_; }
    const F& z() const noexcept { return z_; }

    AffinePoint to_affine() const noexcept
    {
        if (is_infinity())
            return {};
        if (z_ == F::one())
            return {x_, y_, false};
        const F zi = z_.inverse();
        const F zi2 = zi.square();
        return {x_ * zi2, y_ * zi2 * zi, false};
    }

    static bool on_curve(const AffinePoint& a) noexcept
    {
        if (a.infinity)
            return true;
        return a.y.square() == a.x.square() * a.x + Curve::b();
    }

    /// On the curve and, for curves with a cofactor, annihilated by the group order.
    bool in_subgroup() const
    {
        if (!on_curve(to_affine()))
            return false;
        if constexpr (requires { Curve::in_prime_subgroup(*this); })
            return Curve::in_prime_subgroup(*this);
        else if constexpr (Curve::subgroup_check_needed)
            return mul(Curve::Scalar::modulus).is_infinity();
        else
            return true;
    }

    friend bool operator==(const Point& p, const Point& q) noexcept
    {
        if (p.is_infinity() || q.is_infinity())
            return p.is_infinity() && q.is_infinity();
        const F z1z1 = p.z_.square();
        const F z2z2 = q.z_.square();
        if (p.x_ * z2z2 != q.x_ * z1z1)
            return false;
        return p.y_ * z2z2 * q.z_ == q.y_ * z1z1 * p.z_;
    }

    Point operator-() const noexcept { return {x_, -y_, z_}; }

    Point dbl() const noexcept
    {
        if (is_infinity())
            return *this;
        const F a = x_.square();
        const F b = y_.square();
        const F c = b.square();
        const F d = ((x_ + b).square() - a - c).dbl();
        const F e = a.dbl() + a;
        const F f = e.square();
        const F x3 = f - d.dbl();
        const F y3 = e * (d - x3) - c.dbl().dbl().dbl();
        const F z3 = (y_ * z_).dbl();
        return {x3, y3, z3};
    }

    friend Point operator+(const Point& p, const Point& q) noexcept
    {
        if (p.is_infinity())
            return q;
        if (q.is_infinity())
            return p;
        const F z1z1 = p.z_.square();
        const F z2z2 = q.z_.square();
        const F u1 = p.x_ * z2z2;
        const F u2 = q.x_ * z1z1;
        const F s1 = p.y_ * q.z_ * z2z2;
        const F s2 = q.y_ * p.z_ * z1z1;
        const F h = u2 - u1;
        const F r = (s2 - s1).dbl();
        if (h.is_zero())
            return r.is_zero() ? p.dbl() : Point{};
        const F i = h.dbl().square();
        const F j = h * i;
        const F v = u1 * i;
        const F x3 = r.square() - j - v.dbl();
        const F y3 = r * (v - x3) - (s1 * j).dbl();
        const F z3 = ((p.z_ + q.z_).square() - z1z1 - z2z2) * h;
        return {x3, y3, z3};
    }

    Point add_mixed(const AffinePoint& q) const noexcept
    {
        if (q.infinity)
            return *this;
        if (is_infinity())
            return from_affine(q);
        const F z1z1 = z_.square();
        const F u2 = q.x * z1z1;
        const F s2 = q.y * z_ * z1z1;
        const F h = u2 - x_;
        const F r = (s2 - y_).dbl();
        if (h.is_zero())
            return r.is_zero() ? dbl() : Point{};
        const F hh = h.square();
        const F i = hh.dbl().dbl();
        const F j = h * i;
        const F v = x_ * i;
        const F x3 = r.square() - j - v.dbl();
        const F y3 = r * (v - x3) - (y_ * j).dbl();
        const F z3 = (z_ + h).square() - z1z1 - hh;
        return {x3, y3, z3};
    }

    Point& operator+=(const Point& q) noexcept { return *this = *this + q; }
    friend Point operator-(const Point& p, const Point& q) noexcept { return p + (-q); }

    /// Variable-base multiplication by a non-negative integer (width-4 NAF).
    template <std::size_t M>
    Point mul(const Limbs<M>& k) const
    {
        return mul_wnaf(wnaf(k, 4));
    }

    Point mul(const typename Curve::Scalar& s) const { return mul(s.to_canonical()); }

    /// Multiplication by a pre-recoded width-4 NAF digit string.
    Point mul_wnaf(const std::vector<std::int8_t>& digits) const
    {
        if (is_infinity() || digits.empty())
            return {};
        std::array<Point, 4> table;  // P, 3P, 5P, 7P
        table[0] = *this;
        const Point twice = dbl();
        for (std::size_t i = 1; i < table.size(); ++i)
            table[i] = table[i - 1] + twice;
        Point acc;
        for (std::size_t i = digits.size(); i-- > 0;)
        {
            acc = acc.dbl();
            const int d = digits[i];
            if (d > 0)
                acc += table[static_cast<std::size_t>(d / 2)];
            else if (d < 0)
                acc += -table[static_cast<std::size_t>(-d / 2)];
        }
        return acc;
    }

private:
    F x_;
    F y_;
    F z_;
};

template <class Curve>
Point<Curve> operator*(const typename Curve::Scalar& s, const Point<Curve>& p)
{
    return p.mul(s);
}

/// Rescales every finite point to Z = 1 with one shared field inversion.
template <class Curve>
void normalize_batch(std::span<Point<Curve>> pts)
{
    using F = typename Curve::Field;
    std::vector<F> prefix(pts.size());
    F acc = F::one();
    for (std::size_t i = 0; i < pts.size(); ++i)
    {
        prefix[i] = acc;
        if (!pts[i].is_infinity())
            acc *= pts[i].z();
    }
    F inv = acc.inverse();
    for (std::size_t i = pts.size(); i-- > 0;)
    {
        const Point<Curve>& p = pts[i];
        if (p.is_infinity())
            continue;
        const F zi = inv * prefix[i];
        inv *= p.z();
        const F zi2 = zi.square();
        pts[i] = Point<Curve>(p.x() * zi2, p.y() * zi2 * zi, F::one());
    }
}

}  // namespace sap
