// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#include "sap/protocols.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace sap;

namespace
{
template <class S>
void round_trip(ProtocolId p, const ViewTagConfig& cfg, int trials)
{
    for (int i = 0; i < trials; ++i)
    {
        const auto kb = gen_keys<S>(p, test::rng());
        const auto out = send<S>(kb.meta, cfg, test::rng());
        const auto view = viewer_derive_pub<S>(kb.viewing, kb.meta, out.announcement);
        const auto priv = recipient_derive_priv<S>(kb.spending, kb.viewing, out.announcement);
        const auto from_priv = priv_to_pub<S>(p, priv, out.announcement);
        CHECK(view.pub == out.pub);
        CHECK(from_priv == out.pub);
        CHECK(view.address == out.address);
        CHECK(stealth_address<S>(from_priv) == out.address);
        CHECK(compute_view_tag<S>(p, recipient_shared<S>(kb.viewing, out.announcement), cfg) == out.announcement.tag);
    }
}

template <class S>
void all_round_trips(int trials)
{
    for (const auto p : all_protocols)
    {
        CAPTURE(protocol_name(p));
        round_trip<S>(p, {TagVariant::HASH, 8}, trials);
        if (p != ProtocolId::SK)
            round_trip<S>(p, {TagVariant::XCOORD, 16}, 1);
    }
}
}  // namespace

TEST_CASE("sender, viewer and recipient agree on BN254")
{
    all_round_trips<bn254::Suite>(5);
}

TEST_CASE("sender, viewer and recipient agree on BLS12-381")
{
    all_round_trips<bls12_381::Suite>(2);
}

TEST_CASE("stealth private keys per protocol")
{
    using S = bn254::Suite;
    for (const auto p : all_protocols)
    {
        CAPTURE(protocol_name(p));
        const auto kb = gen_keys<S>(p, test::rng());
        const ViewTagConfig cfg;
        const auto a = send<S>(kb.meta, cfg, test::rng());
        const auto b = send<S>(kb.meta, cfg, test::rng());
        const auto pa = recipient_derive_priv<S>(kb.spending, kb.viewing, a.announcement);
        const auto pb = recipient_derive_priv<S>(kb.spending, kb.viewing, b.announcement);
        // P1's stealth key k v is shared by every address of the meta-address.
        CHECK((pa == pb) == (p == ProtocolId::P1));
        CHECK(a.address != b.address);
    }
}

TEST_CASE("mismatched inputs are rejected")
{
    using S = bn254::Suite;
    const auto p1 = gen_keys<S>(ProtocolId::P1, test::rng());
    const auto p2 = gen_keys<S>(ProtocolId::P2, test::rng());
    const auto ann = send<S>(p1.meta, {}, test::rng()).announcement;
    CHECK_THROWS_AS(viewer_derive_pub<S>(p2.viewing, p2.meta, ann), ProtocolError);
    CHECK_THROWS_AS(viewer_derive_pub<S>(p1.viewing, p2.meta, ann), ProtocolError);
    CHECK_THROWS_AS(recipient_derive_priv<S>(p2.spending, p1.viewing, ann), ProtocolError);
    CHECK_THROWS_AS(viewer_derive_pub<bls12_381::Suite>(gen_keys<bls12_381::Suite>(ProtocolId::P1, test::rng()).viewing,
                        gen_keys<bls12_381::Suite>(ProtocolId::P1, test::rng()).meta, ann),
        ProtocolError);
    const auto sk = gen_keys<S>(ProtocolId::SK, test::rng());
    CHECK_THROWS_AS(send<S>(sk.meta, {TagVariant::XCOORD, 8}, test::rng()), UnsupportedVariant);
    CHECK_THROWS_AS(send<S>(p1.meta, {TagVariant::HASH, 12 + 1}, test::rng()), ConfigError);
}

TEST_CASE("P3 rejects a zero shared scalar")
{
    using S = bn254::Suite;
    std::array<S::Fp, 12> c{};
    c[0] = S::Fp::from_be_bytes_reduce(SecpScalar::zero().to_be_bytes());
    c[1] = S::Fp::one();
    CHECK_THROWS_AS(p3_scalar<S>(Gt<S>(S::Fp12::from_coefficients(c))), DegenerateEphemeral);
    // BLS12-381's base field is wider than the secp256k1 order, so the
    // coefficient n itself also reduces to zero.
    using B = bls12_381::Suite;
    std::array<std::uint8_t, 32> n{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            n[31 - 8 * i - j] = static_cast<std::uint8_t>(SecpScalar::modulus[i] >> (8 * j));
    std::array<B::Fp, 12> d{};
    d[0] = B::Fp::from_be_bytes_reduce(n);
    d[1] = B::Fp::one();
    CHECK_THROWS_AS(p3_scalar<B>(Gt<B>(B::Fp12::from_coefficients(d))), DegenerateEphemeral);
}

TEST_CASE("view tag policy")
{
    CHECK(tag_policy_check(ProtocolId::P3, {TagVariant::HASH, 64}).ok);
    CHECK(tag_policy_check(ProtocolId::P1, {TagVariant::HASH, 8}).ok);
    CHECK(tag_policy_check(ProtocolId::P2, {TagVariant::HASH, 0}).ok);
    const auto p2 = tag_policy_check(ProtocolId::P2, {TagVariant::HASH, 16});
    CHECK_FALSE(p2.ok);
    CHECK(p2.effective_security_bits == 120);
    CHECK(p2.message().find("effective security 120 bits") != std::string::npos);
    CHECK(tag_policy_check(ProtocolId::P1, {TagVariant::XCOORD, 8}).effective_security_bits == 124);
    CHECK(tag_policy_check(ProtocolId::P2, {TagVariant::HASH, 8}).effective_security_bits == 124);
    CHECK(tag_policy_check(ProtocolId::P1, {TagVariant::XCOORD, 16}).effective_security_bits == 120);
    CHECK(tag_policy_check(ProtocolId::DKSAP, {TagVariant::HASH, 44}).effective_security_bits == 104);
    CHECK(tag_policy_check(ProtocolId::SK, {TagVariant::HASH, 4}).effective_security_bits == 124);
}

TEST_CASE("view tags")
{
    const std::array<std::uint8_t, 9> bytes{0xab, 0xcd, 0xef, 0x01, 0x23, 0x45, 0x67, 0x89, 0xff};
    CHECK(ViewTag::from_leading_bits(bytes, 8).hex() == "0xab");
    CHECK(ViewTag::from_leading_bits(bytes, 12).hex() == "0xabc");
    CHECK(ViewTag::from_leading_bits(bytes, 64).hex() == "0xabcdef0123456789");
    CHECK(ViewTag::from_leading_bits(bytes, 0).hex() == "0x");
    const auto wide = ViewTag::from_leading_bits(bytes, 44);
    CHECK(wide.truncate(16) == ViewTag::from_leading_bits(bytes, 16));
    CHECK(ViewTag::from_hex(wide.hex(), 44) == wide);
    CHECK_THROWS(ViewTag::from_hex("0xabc", 8));
    CHECK_THROWS_AS((ViewTagConfig{TagVariant::HASH, 65}).validate(), ConfigError);
    CHECK_THROWS_AS((ViewTagConfig{TagVariant::HASH, 6}).validate(), ConfigError);
}

TEST_CASE("meta-address encoding")
{
    using S = bls12_381::Suite;
    for (const auto p : all_protocols)
    {
        const auto kb = gen_keys<S>(p, test::rng());
        const auto text = encode_meta<S>(kb.meta);
        CHECK(text.rfind(std::string("sma:") + std::string(protocol_name(p)) + ":bls12-381:", 0) == 0);
        const auto back = decode_meta<S>(text);
        CHECK(back.protocol == p);
        CHECK(back.K == kb.meta.K);
        CHECK(back.V == kb.meta.V);
        CHECK(parse_meta_header(text).curve == CurveId::BLS12_381);
    }
    const auto p1 = encode_meta<S>(gen_keys<S>(ProtocolId::P1, test::rng()).meta);
    CHECK_THROWS_AS(decode_meta<bn254::Suite>(p1), DecodeError);
    CHECK_THROWS_AS(decode_meta<S>(p1.substr(0, p1.rfind(':'))), DecodeError);
    CHECK_THROWS_AS(decode_meta<S>("sma:p9:bls12-381:0x00"), Error);
    CHECK_THROWS_AS(decode_meta<S>("xyz:p1:bls12-381:0x00:0x00"), DecodeError);
    // The point at infinity is not a usable key.
    std::string inf = "sma:sk:bls12-381:0xc0";
    inf += std::string(94, '0');
    CHECK_THROWS_AS(decode_meta<S>(inf), DecodeError);
}

TEST_CASE("earlier schemes leak the stealth key")
{
    using S = bn254::Suite;
    using Fr = S::Fr;
    for (int i = 0; i < 5; ++i)
    {
        const Fr k = Fr::random_nonzero(test::rng());
        const Fr v = Fr::random_nonzero(test::rng());
        const Fr r = Fr::random_nonzero(test::rng());
        const auto [a, b] = demo_attack_ref3<S>(k, v, r);
        CHECK(a == b);
        const auto [c, d] = demo_attack_ref4<S>(k, r);
        CHECK(c == d);
    }

    const auto g = Generators<S>::g1();
    const auto [a1, b1] = demo_attack_ref3<S>(Fr::one(), Fr::one(), Fr::one());
    CHECK(a1 == g);
    CHECK(b1 == g);
    const Fr r = Fr::random_nonzero(test::rng());
    const auto [c1, d1] = demo_attack_ref4<S>(Fr::one(), r);
    const auto expected = pair<S>(g.mul(r), Generators<S>::g2());
    CHECK(c1 == expected);
    CHECK(d1 == expected);
}

TEST_CASE("HASH tags reuse the shared-secret digest")
{
    using S = bn254::Suite;
    const auto kb = gen_keys<S>(ProtocolId::P2, test::rng());
    const auto out = send<S>(kb.meta, {}, test::rng());
    Digest32 d{};
    compute_view_tag<S>(ProtocolId::P2, out.shared, {}, &d);
    CHECK(digest_to_scalar<S::Fr>(d) == hash_to_fr<S>(expect<S::G1>(out.shared, "shared")));
}
