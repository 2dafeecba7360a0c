// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include "sap/point.hpp"

#include <vector>

namespace sap
{
/// Multiples j 16^i B (j = 1..15) of a fixed base B, stored affine, so that
/// k B costs one mixed addition per nonzero 4-bit window of k.
template <class Curve>
class FixedBaseTable
{
public:
    using P = Point<Curve>;
    using F = typename Curve::Field;
    using Scalar = typename Curve::Scalar;
    static constexpr std::size_t windows = (Scalar::bits + 3) / 4;

    FixedBaseTable() = default;

    explicit FixedBaseTable(const P& base)
    {
        std::vector<P> jac;
        jac.reserve(windows * 15);
        P row = base;
        for (std::size_t i = 0; i < windows; ++i)
        {
            P acc = row;
            for (int j = 1; j <= 15; ++j)
            {
                jac.push_back(acc);
                acc += row;
            }
            row = acc;  // 16 * row
        }
        table_ = normalize(jac);
    }

    P mul(const typename Scalar::Repr& k) const
    {
        P acc;
        for (std::size_t i = 0; i < windows; ++i)
        {
            const unsigned d = static_cast<unsigned>(k[i / 16] >> (4 * (i % 16))) & 0xf;
            if (d != 0)
                acc = acc.add_mixed(table_[15 * i + d - 1]);
        }
        return acc;
    }

    P mul(const Scalar& s) const { return mul(s.to_canonical()); }

    bool empty() const noexcept { return table_.empty(); }

private:
    /// Affine forms with one shared inversion.
    static std::vector<Affine<F>> normalize(const std::vector<P>& pts)
    {
        std::vector<F> prefix(pts.size());
        F acc = F::one();
        for (std::size_t i = 0; i < pts.size(); ++i)
        {
            prefix[i] = acc;
            if (!pts[i].is_infinity())
                acc *= pts[i].z();
        }
        F inv = acc.inverse();
        std::vector<Affine<F>> out(pts.size());
        for (std::size_t i = pts.size(); i-- > 0;)
        {
            if (pts[i].is_infinity())
                continue;
            const F zi = inv * prefix[i];
            inv *= pts[i].z();
            const F zi2 = zi.square();
            out[i] = {pts[i].x() * zi2, pts[i].y() * zi2 * zi, false};
        }
        return out;
    }

    std::vector<Affine<F>> table_;
};

}  // namespace sap
