// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include "sap/point.hpp"

#include <algorithm>
#include <string_view>

namespace sap
{
/// Endomorphism (x, y) -> (beta x, y) acting as multiplication by lambda,
/// with a reduced lattice basis {(a1, b1), (a2, b2)} of the kernel of
/// (i, j) -> i + j lambda mod n. Integers are hex, optionally with a leading '-'.
struct GlvParams
{
    std::string_view beta;
    std::string_view lambda;
    std::string_view a1;
    std::string_view b1;
    std::string_view a2;
    std::string_view b2;
};

/// k = k1 + k2 lambda (mod n) with |k1|, |k2| around sqrt(n).
struct GlvSplit
{
    Limbs<4> k1;
    Limbs<4> k2;
    bool k1_negative;
    bool k2_negative;
};

GlvSplit glv_split(const Limbs<4>& k, const Limbs<4>& order, const GlvParams& params);

/// Multiplication by a scalar fixed once and applied to many points.
///
/// The scalar is split along the curve endomorphism and both halves are
/// recoded up front, so each application costs roughly half the doublings of
/// a plain variable-base multiplication.
template <class Curve>
class FixedScalarMul
{
public:
    using P = Point<Curve>;
    using F = typename Curve::Field;
    static constexpr unsigned window = 5;

    FixedScalarMul() = default;

    explicit FixedScalarMul(const typename Curve::Scalar& k)
    {
        const auto s = glv_split(k.to_canonical(), Curve::Scalar::modulus, Curve::glv);
        d1_ = wnaf(s.k1, window);
        d2_ = wnaf(s.k2, window);
        neg1_ = s.k1_negative;
        neg2_ = s.k2_negative;
    }

    P operator()(const P& p) const
    {
        constexpr std::size_t table_size = std::size_t{1} << (window - 2);
        if (p.is_infinity())
            return {};
        std::array<P, table_size> t1;
        std::array<P, table_size> t2;
        t1[0] = neg1_ ? -p : p;
        const P twice = t1[0].dbl();
        for (std::size_t i = 1; i < table_size; ++i)
            t1[i] = t1[i - 1] + twice;
        const F& beta = Curve::glv_beta();
        for (std::size_t i = 0; i < table_size; ++i)
        {
            const P& q = t1[i];
            // phi(-Q) = -phi(Q), so flip back first when the signs differ.
            t2[i] = P{q.x() * beta, neg1_ != neg2_ ? -q.y() : q.y(), q.z()};
        }

        P acc;
        for (std::size_t i = std::max(d1_.size(), d2_.size()); i-- > 0;)
        {
            acc = acc.dbl();
            if (i < d1_.size())
                add_digit(acc, t1, d1_[i]);
            if (i < d2_.size())
                add_digit(acc, t2, d2_[i]);
        }
        return acc;
    }

private:
    template <class Table>
    static void add_digit(P& acc, const Table& t, int d) noexcept
    {
        if (d > 0)
            acc += t[static_cast<std::size_t>(d / 2)];
        else if (d < 0)
            acc += -t[static_cast<std::size_t>(-d / 2)];
    }

    std::vector<std::int8_t> d1_;
    std::vector<std::int8_t> d2_;
    bool neg1_ = false;
    bool neg2_ = false;
};

}  // namespace sap
