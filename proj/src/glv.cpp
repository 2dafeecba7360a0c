// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#include "sap/glv.hpp"

#include "sap/errors.hpp"

#include <gmpxx.h>

#include <string>

namespace sap
{
namespace
{
mpz_class signed_hex(std::string_view s)
{
    const bool neg = s.starts_with('-');
    if (neg)
        s.remove_prefix(1);
    if (s.starts_with("0x"))
        s.remove_prefix(2);
    mpz_class v(std::string(s), 16);
    return neg ? mpz_class(-v) : v;
}

template <std::size_t N>
mpz_class to_mpz(const Limbs<N>& a)
{
    mpz_class v;
    mpz_import(v.get_mpz_t(), N, -1, sizeof(std::uint64_t), 0, 0, a.data());
    return v;
}

Limbs<4> to_limbs(const mpz_class& v)
{
    Limbs<4> out{};
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 256)
        throw Error("glv: component does not fit in 256 bits");
    std::size_t count = 0;
    mpz_export(out.data(), &count, -1, sizeof(std::uint64_t), 0, 0, v.get_mpz_t());
    return out;
}

/// round(num / den) for den > 0.
mpz_class div_round(const mpz_class& num, const mpz_class& den)
{
    mpz_class q;
    const mpz_class twice = 2 * num + den;
    const mpz_class den2 = 2 * den;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
    return q;
}
}  // namespace

GlvSplit glv_split(const Limbs<4>& k, const Limbs<4>& order, const GlvParams& params)
{
    const mpz_class n = to_mpz(order);
    const mpz_class kk = to_mpz(k);
    const mpz_class a1 = signed_hex(params.a1);
    const mpz_class b1 = signed_hex(params.b1);
    const mpz_class a2 = signed_hex(params.a2);
    const mpz_class b2 = signed_hex(params.b2);

    const mpz_class c1 = div_round(b2 * kk, n);
    const mpz_class c2 = div_round(-b1 * kk, n);
    const mpz_class k1 = kk - c1 * a1 - c2 * a2;
    const mpz_class k2 = -c1 * b1 - c2 * b2;

    return {to_limbs(abs(k1)), to_limbs(abs(k2)), sgn(k1) < 0, sgn(k2) < 0};
}

}  // namespace sap
