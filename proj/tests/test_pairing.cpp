// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#include "sap/curves/bls12_381.hpp"
#include "sap/curves/bn254.hpp"
#include "sap/encoding.hpp"
#include "sap/keccak.hpp"
#include "sap/pairing.hpp"
#include "support.hpp"

#include <doctest.h>
#include <gmpxx.h>

using namespace sap;

namespace
{
template <class S>
void check_properties(int samples)
{
    using Fr = typename S::Fr;
    const auto g1 = S::G1::generator();
    const auto g2 = S::G2::generator();
    const auto base = pair<S>(g1, g2);
    CHECK_FALSE(base.is_identity());
    CHECK(base.pow(Fr::modulus).is_identity());
    for (int i = 0; i < samples; ++i)
    {
        const Fr a = Fr::random_nonzero(test::rng());
        const Fr b = Fr::random_nonzero(test::rng());
        const auto P = g1.mul(a);
        const auto Q = g2.mul(b);
        const auto e = pair<S>(P, Q);
        CHECK(e == base.pow(a * b));
        CHECK(pair<S>(P + P, Q) == e * e);
        CHECK(pair<S>(P, Q + Q) == e * e);
        CHECK(pair<S>(-P, Q) == e.inverse());
        CHECK(pair<S>(P, -Q) == e.inverse());
        CHECK(pair<S>(P.mul(b), g2) == pair<S>(g1, Q.mul(a)));
        CHECK(pair<S>(P, G2Prepared<S>(Q)) == e);
    }
    CHECK(pair<S>(S::G1::infinity(), g2).is_identity());
    CHECK(pair<S>(g1, S::G2::infinity()).is_identity());
    CHECK(pair<S>(g1, G2Prepared<S>(S::G2::infinity())).is_identity());
}

template <class S>
void check_final_exponentiation()
{
    // Hard part against plain exponentiation by (p^4 - p^2 + 1) / r.
    mpz_class p, r;
    mpz_import(p.get_mpz_t(), S::Fp::N, -1, 8, 0, 0, S::Fp::modulus.data());
    mpz_import(r.get_mpz_t(), S::Fr::N, -1, 8, 0, 0, S::Fr::modulus.data());
    const mpz_class h = (p * p * p * p - p * p + 1) / r;
    Limbs<S::Fp::N * 4> hard{};
    mpz_export(hard.data(), nullptr, -1, 8, 0, 0, h.get_mpz_t());
    const auto f = miller_loop<S>(S::G1::generator().mul(S::Fr::from_u64(11)), S::G2::generator());
    CHECK(final_exponentiation<S>(f) == final_exponentiation_reference<S>(f, hard));
}

template <class S>
std::string gt_keccak(std::uint64_t a, std::uint64_t b)
{
    const auto e = pair<S>(S::G1::generator().mul(S::Fr::from_u64(a)), S::G2::generator().mul(S::Fr::from_u64(b)));
    return to_hex(keccak256(serialize(e)));
}
}  // namespace

TEST_CASE("pairing properties on BN254")
{
    check_properties<bn254::Suite>(15);
}

TEST_CASE("pairing properties on BLS12-381")
{
    check_properties<bls12_381::Suite>(8);
}

TEST_CASE("final exponentiation matches the reference exponent")
{
    check_final_exponentiation<bn254::Suite>();
    check_final_exponentiation<bls12_381::Suite>();
}

TEST_CASE("pairing values match an independent implementation")
{
    // keccak256 of the GT encoding of e(5 g1, 7 g2), from tests/oracles/protocol_vectors.py.
    CHECK(gt_keccak<bn254::Suite>(5, 7) == "0xae0fdf5e732982411fbb7bfddcf5d847d97bd7b7ee2974fce928e58963cc921e");
    CHECK(gt_keccak<bls12_381::Suite>(5, 7) == "0x20836c90f4a3b80bcb262c1ed6ba4e60655d4aaf2b831ee7895546f8484024f7");
}
