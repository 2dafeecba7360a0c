// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include "sap/point.hpp"
#include "sap/tower.hpp"

#include <cstdint>
#include <vector>

namespace sap
{
/// Element of the order-r target group (a cyclotomic-subgroup element of Fp12).
template <class S>
class Gt
{
public:
    using Fp12 = typename S::Fp12;

    constexpr Gt() noexcept : v_(Fp12::one()) {}
    explicit constexpr Gt(const Fp12& v) noexcept : v_(v) {}

    static constexpr Gt identity() noexcept { return {}; }

    const Fp12& value() const noexcept { return v_; }
    bool is_identity() const noexcept { return v_.is_one(); }

    friend bool operator==(const Gt&, const Gt&) noexcept = default;
    friend Gt operator*(const Gt& a, const Gt& b) noexcept { return Gt(a.v_ * b.v_); }
    Gt& operator*=(const Gt& b) noexcept { return *this = *this * b; }

    /// Inverse is conjugation in the cyclotomic subgroup.
    Gt inverse() const noexcept { return Gt(v_.conjugate()); }

    Gt pow(const typename S::Fr& e) const noexcept { return Gt(v_.cyclotomic_pow(e.to_canonical())); }

    template <std::size_t M>
    Gt pow(const Limbs<M>& e) const noexcept
    {
        return Gt(v_.cyclotomic_pow(e));
    }

private:
    Fp12 v_;
};

template <class S>
struct LineCoeffs
{
    typename S::Fp2 y;  ///< multiplied by the G1 point's y
    typename S::Fp2 x;  ///< multiplied by the G1 point's x
    typename S::Fp2 c;  ///< constant term
};

namespace detail
{
/// NAF digits (most significant first) of the optimal Ate loop count.
template <class S>
const std::vector<std::int8_t>& ate_naf()
{
    static const std::vector<std::int8_t> digits = [] {
        auto d = wnaf(S::ate_loop, 2);
        return std::vector<std::int8_t>(d.rbegin(), d.rend());
    }();
    return digits;
}

/// Produces Miller-loop line coefficients on the fly from the running point T.
template <class S>
class LineStepper
{
public:
    using Fp2 = typename S::Fp2;
    using G2 = typename S::G2;
    using G2Affine = typename G2::AffinePoint;

    explicit LineStepper(const G2Affine& q) noexcept : q_(q), x_(q.x), y_(q.y), z_(Fp2::one()) {}

    LineCoeffs<S> dbl() noexcept
    {
        const Fp2 zz = z_.square();
        const Fp2 a = x_.square();
        const Fp2 b = y_.square();
        const Fp2 c = b.square();
        const Fp2 d = ((x_ + b).square() - a - c).dbl();
        const Fp2 e = a.dbl() + a;
        const Fp2 f = e.square();
        const Fp2 x3 = f - d.dbl();
        const Fp2 y3 = e * (d - x3) - c.dbl().dbl().dbl();
        const Fp2 z3 = (y_ * z_).dbl();
        LineCoeffs<S> l{z3 * zz, -(e * zz), e * x_ - b.dbl()};
        x_ = x3;
        y_ = y3;
        z_ = z3;
        return l;
    }

    /// T += (xq, yq) for an affine point on the twist.
    LineCoeffs<S> add(const Fp2& xq, const Fp2& yq) noexcept
    {
        const Fp2 zz = z_.square();
        const Fp2 u2 = xq * zz;
        const Fp2 s2 = yq * z_ * zz;
        const Fp2 h = u2 - x_;
        const Fp2 r = s2 - y_;
        const Fp2 hh = h.square();
        const Fp2 hhh = h * hh;
        const Fp2 v = x_ * hh;
        const Fp2 x3 = r.square() - hhh - v.dbl();
        const Fp2 y3 = r * (v - x3) - y_ * hhh;
        const Fp2 z3 = z_ * h;
        LineCoeffs<S> l{z3, -r, r * xq - z3 * yq};
        x_ = x3;
        y_ = y3;
        z_ = z3;
        return l;
    }

    LineCoeffs<S> add_q(bool negate) noexcept { return add(q_.x, negate ? -q_.y : q_.y); }

    const G2Affine& base() const noexcept { return q_; }

private:
    G2Affine q_;
    Fp2 x_;
    Fp2 y_;
    Fp2 z_;
};

/// Frobenius endomorphism on the twist: (x, y) -> (x^p gx, y^p gy).
template <class S>
typename S::G2::AffinePoint twist_frobenius(const typename S::G2::AffinePoint& q) noexcept
{
    const auto& g = S::Fp12::frobenius_coeffs();
    if constexpr (S::twist == TwistType::D)
        return {q.x.conjugate() * g[2], q.y.conjugate() * g[3], false};
    else
        return {q.x.conjugate() * g[2].inverse(), q.y.conjugate() * g[3].inverse(), false};
}

template <class S>
typename S::Fp12 eval_line(const typename S::Fp12& f, const LineCoeffs<S>& l,
    const typename S::G1::AffinePoint& p) noexcept
{
    const auto ly = l.y * p.y;
    const auto lx = l.x * p.x;
    if constexpr (S::twist == TwistType::D)
        return f.mul_by_013(ly, lx, l.c);
    else
        return f.mul_by_023(l.c, lx, ly);
}

/// Runs the optimal Ate Miller loop; `lines` yields coefficients in loop order.
template <class S, class Lines>
typename S::Fp12 miller_loop(Lines& lines, const typename S::G1::AffinePoint& p)
{
    using Fp12 = typename S::Fp12;
    const auto& naf = ate_naf<S>();
    Fp12 f = Fp12::one();
    for (std::size_t i = 1; i < naf.size(); ++i)
    {
        if (i != 1)
            f = f.square();
        f = eval_line<S>(f, lines.dbl(), p);
        if (naf[i] != 0)
            f = eval_line<S>(f, lines.add_q(naf[i] < 0), p);
    }
    if constexpr (S::bn_family)
    {
        f = eval_line<S>(f, lines.add_frobenius1(), p);
        f = eval_line<S>(f, lines.add_frobenius2(), p);
    }
    if constexpr (S::ate_negative)
        f = f.conjugate();
    return f;
}

/// Adapter giving LineStepper the BN-specific Frobenius additions.
template <class S>
class OnTheFlyLines : public LineStepper<S>
{
public:
    using LineStepper<S>::LineStepper;

    LineCoeffs<S> add_frobenius1() noexcept
    {
        const auto q1 = twist_frobenius<S>(this->base());
        return this->add(q1.x, q1.y);
    }

    LineCoeffs<S> add_frobenius2() noexcept
    {
        const auto q2 = twist_frobenius<S>(twist_frobenius<S>(this->base()));
        return this->add(q2.x, -q2.y);
    }
};

template <class S>
class RecordedLines
{
public:
    explicit RecordedLines(const std::vector<LineCoeffs<S>>& lines) noexcept : it_(lines.begin()) {}
    const LineCoeffs<S>& dbl() noexcept { return *it_++; }
    const LineCoeffs<S>& add_q(bool) noexcept { return *it_++; }
    const LineCoeffs<S>& add_frobenius1() noexcept { return *it_++; }
    const LineCoeffs<S>& add_frobenius2() noexcept { return *it_++; }

private:
    typename std::vector<LineCoeffs<S>>::const_iterator it_;
};

template <class S>
class RecordingLines : public OnTheFlyLines<S>
{
public:
    RecordingLines(const typename S::G2::AffinePoint& q, std::vector<LineCoeffs<S>>& out) noexcept
      : OnTheFlyLines<S>(q), out_(out)
    {}
    LineCoeffs<S> dbl() noexcept { return keep(OnTheFlyLines<S>::dbl()); }
    LineCoeffs<S> add_q(bool neg) noexcept { return keep(OnTheFlyLines<S>::add_q(neg)); }
    LineCoeffs<S> add_frobenius1() noexcept { return keep(OnTheFlyLines<S>::add_frobenius1()); }
    LineCoeffs<S> add_frobenius2() noexcept { return keep(OnTheFlyLines<S>::add_frobenius2()); }

private:
    LineCoeffs<S> keep(const LineCoeffs<S>& l)
    {
        out_.push_back(l);
        return l;
    }
    std::vector<LineCoeffs<S>>& out_;
};
}  // namespace detail

/// Fixed-argument precomputation: the Miller-loop line coefficients of a G2 point.
template <class S>
class G2Prepared
{
public:
    G2Prepared() = default;

    explicit G2Prepared(const typename S::G2& q)
    {
        const auto qa = q.to_affine();
        infinity_ = qa.infinity;
        if (infinity_)
            return;
        // Drive the loop against a dummy G1 point purely to record the lines.
        detail::RecordingLines<S> rec(qa, lines_);
        typename S::G1::AffinePoint dummy{S::Fp::one(), S::Fp::one(), false};
        detail::miller_loop<S>(rec, dummy);
    }

    bool is_infinity() const noexcept { return infinity_; }
    const std::vector<LineCoeffs<S>>& lines() const noexcept { return lines_; }

private:
    bool infinity_ = true;
    std::vector<LineCoeffs<S>> lines_;
};

/// f^((p^12 - 1) / r).
template <class S>
typename S::Fp12 final_exponentiation(const typename S::Fp12& f)
{
    // Easy part: f^((p^6 - 1)(p^2 + 1)).
    auto t = f.conjugate() * f.inverse();
    t = t.frobenius(2) * t;
    return S::final_exp_hard(t);
}

template <class S>
typename S::Fp12 miller_loop(const typename S::G1& p, const typename S::G2& q)
{
    const auto pa = p.to_affine();
    const auto qa = q.to_affine();
    if (pa.infinity || qa.infinity)
        return S::Fp12::one();
    detail::OnTheFlyLines<S> lines(qa);
    return detail::miller_loop<S>(lines, pa);
}

template <class S>
typename S::Fp12 miller_loop(const typename S::G1& p, const G2Prepared<S>& q)
{
    const auto pa = p.to_affine();
    if (pa.infinity || q.is_infinity())
        return S::Fp12::one();
    detail::RecordedLines<S> lines(q.lines());
    return detail::miller_loop<S>(lines, pa);
}

/// Optimal Ate pairing e: G1 x G2 -> GT.
template <class S>
Gt<S> pair(const typename S::G1& p, const typename S::G2& q)
{
    return Gt<S>(final_exponentiation<S>(miller_loop<S>(p, q)));
}

/// Optimal Ate pairing with the G2 argument's line data precomputed.
template <class S>
Gt<S> pair(const typename S::G1& p, const G2Prepared<S>& q)
{
    return Gt<S>(final_exponentiation<S>(miller_loop<S>(p, q)));
}

/// Reference final exponentiation: the easy part, then plain square-and-multiply
/// by a caller-supplied hard exponent (p^4 - p^2 + 1) / r. Test oracle only.
template <class S, std::size_t M>
typename S::Fp12 final_exponentiation_reference(const typename S::Fp12& f, const Limbs<M>& hard_exponent)
{
    auto t = f.conjugate() * f.inverse();
    t = t.frobenius(2) * t;
    return t.pow(hard_exponent);
}

}  // namespace sap
