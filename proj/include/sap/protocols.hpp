// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include "sap/hash.hpp"
#include "sap/keys.hpp"

#include <utility>

namespace sap
{
/// Sender's single-use key pair (r, R).
template <class S>
struct EphemeralKey
{
    ProtocolId protocol;
    ScalarValue<S> r;
    GroupElement<S> R;  ///< r g1, or r g_e for DKSAP
};

template <class S, class Rng>
EphemeralKey<S> make_ephemeral(ProtocolId protocol, Rng& rng)
{
    using G = Generators<S>;
    if (protocol == ProtocolId::DKSAP)
    {
        const auto r = SecpScalar::random_nonzero(rng);
        return {protocol, r, G::ge_table().mul(r)};
    }
    const auto r = S::Fr::random_nonzero(rng);
    return {protocol, r, G::g1_table().mul(r)};
}

/// Group of the ephemeral public key R in announcements of this protocol.
template <class S>
GroupElement<S> decode_ephemeral(ProtocolId protocol, std::span<const std::uint8_t> bytes)
{
    if (protocol == ProtocolId::DKSAP)
        return deserialize_point<secp256k1::Curve>(bytes);
    return deserialize_point<typename S::G1Curve>(bytes);
}

/// P3's b: the first base-field coefficient of the GT encoding of e(r V, g2),
/// read big-endian and reduced mod the secp256k1 order. Zero is rejected so
/// that the stealth key b K is never the identity.
template <class S>
SecpScalar p3_scalar(const Gt<S>& e)
{
    const auto first = e.value().coefficients()[0].to_be_bytes();
    const auto b = SecpScalar::from_be_bytes_reduce(first);
    if (b.is_zero())
        throw DegenerateEphemeral("P3 shared scalar is zero; draw a new ephemeral key");
    return b;
}

/// Tag of a shared secret. `digest`, when given, receives keccak256 of the
/// encoding for HASH tags so callers can reuse it as hash(shared).
template <class S>
ViewTag compute_view_tag(ProtocolId protocol, const GroupElement<S>& shared, const ViewTagConfig& cfg,
    Digest32* digest = nullptr)
{
    cfg.validate();
    if (cfg.variant == TagVariant::XCOORD)
    {
        if (protocol == ProtocolId::SK)
            throw UnsupportedVariant("the single-key protocol has no point-valued shared secret; use hash tags");
        const Bytes x = std::visit(
            [](const auto& p) -> Bytes {
                if constexpr (requires { p.to_affine(); })
                    return x_coordinate(p);
                else
                    throw UnsupportedVariant("x-coordinate tag needs a curve point");
            },
            shared);
        return ViewTag::from_leading_bits(x, cfg.bits);
    }
    const Digest32 d = keccak256(serialize_element<S>(shared));
    if (digest != nullptr)
        *digest = d;
    return ViewTag::from_leading_bits(d, cfg.bits);
}

/// Last 20 bytes of keccak256 of the public key: uncompressed x || y for
/// secp256k1 points, the canonical encoding otherwise.
template <class S>
StealthAddress stealth_address(const GroupElement<S>& pub)
{
    if (const auto* p = std::get_if<SecpPoint>(&pub))
        return address_from_encoding(serialize_uncompressed_xy(*p));
    return address_from_encoding(serialize_element<S>(pub));
}

template <class S>
struct SenderOutput
{
    Announcement announcement;
    GroupElement<S> pub;
    StealthAddress address;
    GroupElement<S> shared;
    PolicyResult policy;
};

namespace detail
{
inline void check_protocol(ProtocolId expected, ProtocolId got, const char* what)
{
    if (expected != got)
        throw ProtocolError(std::string(what) + " is for protocol " + std::string(protocol_name(got)) +
                            ", expected " + std::string(protocol_name(expected)));
}

template <class S>
void check_announcement(ProtocolId protocol, const Announcement& ann)
{
    check_protocol(protocol, ann.protocol, "announcement");
    if (ann.curve != curve_id_of<S>())
        throw ProtocolError("announcement is for curve " + std::string(curve_name(ann.curve)));
}
}  // namespace detail

/// Derives the stealth public key, its address and the announcement (R, tag).
///
/// The tag policy is advisory: the result carries it and the caller decides.
/// Throws DegenerateEphemeral (P3 only, negligible probability) when r must be redrawn.
template <class S>
SenderOutput<S> sender_derive(const MetaAddress<S>& meta, const EphemeralKey<S>& eph, const ViewTagConfig& cfg)
{
    using G = Generators<S>;
    using Fr = typename S::Fr;
    using G1 = typename S::G1;
    using G2 = typename S::G2;
    const ProtocolId protocol = meta.protocol;
    detail::check_protocol(protocol, eph.protocol, "ephemeral key");
    const PolicyResult policy = tag_policy_check(protocol, cfg);
    if (cfg.variant == TagVariant::XCOORD && protocol == ProtocolId::SK)
        throw UnsupportedVariant("the single-key protocol supports hash tags only");

    GroupElement<S> shared;
    GroupElement<S> pub;
    switch (protocol)
    {
    case ProtocolId::P1:
    {
        const G1 rv = expect<G1>(*meta.V, "V").mul(expect<Fr>(eph.r, "r"));
        shared = rv;
        pub = pair<S>(rv, expect<G2>(meta.K, "K"));
        break;
    }
    case ProtocolId::P2:
    {
        const G1 rv = expect<G1>(*meta.V, "V").mul(expect<Fr>(eph.r, "r"));
        shared = rv;
        pub = pair<S>(G::g1_table().mul(hash_to_fr<S>(rv)), expect<G2>(meta.K, "K"));
        break;
    }
    case ProtocolId::P3:
    {
        const G1 rv = expect<G1>(*meta.V, "V").mul(expect<Fr>(eph.r, "r"));
        shared = rv;
        pub = expect<SecpPoint>(meta.K, "K").mul(p3_scalar<S>(pair<S>(rv, G::g2_prepared())));
        break;
    }
    case ProtocolId::SK:
    {
        const G1& K = expect<G1>(meta.K, "K");
        const Gt<S> s = pair<S>(K, G::g2_prepared()).pow(expect<Fr>(eph.r, "r"));
        shared = s;
        pub = K + G::g1_table().mul(hash_to_fr<S>(s));
        break;
    }
    case ProtocolId::DKSAP:
    {
        const SecpPoint rv = expect<SecpPoint>(*meta.V, "V").mul(expect<SecpScalar>(eph.r, "r"));
        shared = rv;
        pub = expect<SecpPoint>(meta.K, "K") + G::ge_table().mul(hash_to_secp_scalar(rv));
        break;
    }
    }

    Announcement ann{0, protocol, curve_id_of<S>(), serialize_element<S>(eph.R), compute_view_tag<S>(protocol, shared, cfg)};
    return {std::move(ann), pub, stealth_address<S>(pub), shared, policy};
}

/// Draws ephemeral keys until sender_derive accepts one.
template <class S, class Rng>
SenderOutput<S> send(const MetaAddress<S>& meta, const ViewTagConfig& cfg, Rng& rng)
{
    for (;;)
    {
        try
        {
            return sender_derive<S>(meta, make_ephemeral<S>(meta.protocol, rng), cfg);
        }
        catch (const DegenerateEphemeral&)
        {}
    }
}

/// Recipient or viewer side shared secret: v R (P1-P3, DKSAP) or e(R, V) (SK).
template <class S>
GroupElement<S> recipient_shared(const ViewingKey<S>& vk, const Announcement& ann)
{
    detail::check_announcement<S>(vk.protocol, ann);
    const auto R = decode_ephemeral<S>(ann.protocol, ann.R);
    switch (vk.protocol)
    {
    case ProtocolId::SK:
        return pair<S>(expect<typename S::G1>(R, "R"), expect<typename S::G2>(vk.v, "V"));
    case ProtocolId::DKSAP:
        return expect<SecpPoint>(R, "R").mul(expect<SecpScalar>(vk.v, "v"));
    default:
        return expect<typename S::G1>(R, "R").mul(expect<typename S::Fr>(vk.v, "v"));
    }
}

template <class S>
struct ViewOutput
{
    GroupElement<S> pub;
    StealthAddress address;
};

/// Stealth public key and address from the viewing key and public data only.
template <class S>
ViewOutput<S> viewer_derive_pub(const ViewingKey<S>& vk, const MetaAddress<S>& meta, const Announcement& ann)
{
    using G = Generators<S>;
    using G1 = typename S::G1;
    using G2 = typename S::G2;
    detail::check_protocol(vk.protocol, meta.protocol, "meta-address");
    const auto shared = recipient_shared<S>(vk, ann);
    GroupElement<S> pub;
    switch (vk.protocol)
    {
    case ProtocolId::P1:
        pub = pair<S>(expect<G1>(shared, "vR"), expect<G2>(meta.K, "K"));
        break;
    case ProtocolId::P2:
        pub = pair<S>(G::g1_table().mul(hash_to_fr<S>(expect<G1>(shared, "vR"))), expect<G2>(meta.K, "K"));
        break;
    case ProtocolId::P3:
        pub = expect<SecpPoint>(meta.K, "K").mul(p3_scalar<S>(pair<S>(expect<G1>(shared, "vR"), G::g2_prepared())));
        break;
    case ProtocolId::SK:
        pub = expect<G1>(meta.K, "K") + G::g1_table().mul(hash_to_fr<S>(expect<Gt<S>>(shared, "S")));
        break;
    case ProtocolId::DKSAP:
        pub = expect<SecpPoint>(meta.K, "K") + G::ge_table().mul(hash_to_secp_scalar(expect<SecpPoint>(shared, "vR")));
        break;
    }
    return {pub, stealth_address<S>(pub)};
}

/// Stealth private key. Requires the spending key by construction.
template <class S>
ScalarValue<S> recipient_derive_priv(const SpendingKey<S>& sk, const ViewingKey<S>& vk, const Announcement& ann)
{
    using Fr = typename S::Fr;
    using G1 = typename S::G1;
    using G = Generators<S>;
    detail::check_protocol(sk.protocol, vk.protocol, "viewing key");
    detail::check_announcement<S>(sk.protocol, ann);
    switch (sk.protocol)
    {
    case ProtocolId::P1:
        return expect<Fr>(sk.k, "k") * expect<Fr>(vk.v, "v");
    case ProtocolId::P2:
        return expect<Fr>(sk.k, "k") * hash_to_fr<S>(expect<G1>(recipient_shared<S>(vk, ann), "vR"));
    case ProtocolId::P3:
    {
        const auto vr = expect<G1>(recipient_shared<S>(vk, ann), "vR");
        return p3_scalar<S>(pair<S>(vr, G::g2_prepared())) * expect<SecpScalar>(sk.k, "k");
    }
    case ProtocolId::SK:
        return expect<Fr>(sk.k, "k") + hash_to_fr<S>(expect<Gt<S>>(recipient_shared<S>(vk, ann), "S"));
    case ProtocolId::DKSAP:
        return expect<SecpScalar>(sk.k, "k") +
               hash_to_secp_scalar(expect<SecpPoint>(recipient_shared<S>(vk, ann), "vR"));
    }
    throw ProtocolError("unknown protocol");
}

/// Public key implied by a stealth private key; P1 also needs R from the announcement.
template <class S>
GroupElement<S> priv_to_pub(ProtocolId protocol, const ScalarValue<S>& priv, const Announcement& ann)
{
    using Fr = typename S::Fr;
    using G = Generators<S>;
    switch (protocol)
    {
    case ProtocolId::P1:
    {
        detail::check_announcement<S>(protocol, ann);
        const auto R = expect<typename S::G1>(decode_ephemeral<S>(protocol, ann.R), "R");
        return pair<S>(R, G::g2_prepared()).pow(expect<Fr>(priv, "private key"));
    }
    case ProtocolId::P2:
        return G::gt().pow(expect<Fr>(priv, "private key"));
    case ProtocolId::P3:
    case ProtocolId::DKSAP:
        return G::ge_table().mul(expect<SecpScalar>(priv, "private key"));
    case ProtocolId::SK:
        return G::g1_table().mul(expect<Fr>(priv, "private key"));
    }
    throw ProtocolError("unknown protocol");
}

/// Earlier dual-key scheme whose stealth private key is (k v) R. Modelled in
/// G1 as if the pairing were symmetric: it equals (r v) K, which the sender
/// and the viewer can compute together without k.
template <class S>
std::pair<typename S::G1, typename S::G1> demo_attack_ref3(
    const typename S::Fr& k, const typename S::Fr& v, const typename S::Fr& r)
{
    const auto& g = Generators<S>::g1();
    const auto K = g.mul(k);
    const auto R = g.mul(r);
    return {R.mul(k * v), K.mul(r * v)};
}

/// Earlier pairing scheme whose stealth private key is e(R, k g2). It equals
/// e(r K, g2), which the sender computes from public K and its own r.
template <class S>
std::pair<Gt<S>, Gt<S>> demo_attack_ref4(const typename S::Fr& k, const typename S::Fr& r)
{
    using G = Generators<S>;
    const auto K = G::g1_table().mul(k);
    const auto R = G::g1_table().mul(r);
    return {pair<S>(R, G::g2().mul(k)), pair<S>(K.mul(r), G::g2())};
}

}  // namespace sap
