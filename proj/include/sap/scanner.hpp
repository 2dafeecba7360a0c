// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include "sap/glv.hpp"
#include "sap/protocols.hpp"
#include "sap/registry.hpp"

#include <optional>
#include <vector>

namespace sap
{
/// Recipient state for scanning, read-only once built.
///
/// With precomputation the viewing scalar v is split and recoded once
/// (FixedScalarMul) and the Miller-loop lines of the constant G2 argument are
/// cached: K for P1 and P2, g2 for P3, V for the single-key protocol.
/// Without it every announcement pays for plain multiplications and pairings.
template <class S>
class ScanContext
{
public:
    using Fr = typename S::Fr;
    using G1 = typename S::G1;
    using G2 = typename S::G2;

    static ScanContext precompute(const ViewingKey<S>& vk, const MetaAddress<S>& meta,
        std::optional<SpendingKey<S>> sk, const ViewTagConfig& cfg, bool use_precomputation = true)
    {
        detail::check_protocol(vk.protocol, meta.protocol, "meta-address");
        if (sk)
            detail::check_protocol(vk.protocol, sk->protocol, "spending key");
        cfg.validate();
        if (vk.protocol == ProtocolId::SK && cfg.variant == TagVariant::XCOORD)
            throw UnsupportedVariant("the single-key protocol supports hash tags only");

        ScanContext c;
        c.vk_ = vk;
        c.meta_ = meta;
        c.sk_ = std::move(sk);
        c.cfg_ = cfg;
        c.precomputed_ = use_precomputation;
        if (!use_precomputation)
            return c;
        switch (vk.protocol)
        {
        case ProtocolId::P1:
        case ProtocolId::P2:
            c.v_g1_ = FixedScalarMul<typename S::G1Curve>(expect<Fr>(vk.v, "v"));
            c.prepared_ = G2Prepared<S>(expect<G2>(meta.K, "K"));
            break;
        case ProtocolId::P3:
            c.v_g1_ = FixedScalarMul<typename S::G1Curve>(expect<Fr>(vk.v, "v"));
            c.prepared_ = Generators<S>::g2_prepared();
            c.k_table_ = FixedBaseTable<secp256k1::Curve>(expect<SecpPoint>(meta.K, "K"));
            break;
        case ProtocolId::SK:
            c.prepared_ = G2Prepared<S>(expect<G2>(vk.v, "V"));
            break;
        case ProtocolId::DKSAP:
            c.v_secp_ = FixedScalarMul<secp256k1::Curve>(expect<SecpScalar>(vk.v, "v"));
            break;
        }
        return c;
    }

    ProtocolId protocol() const noexcept { return vk_.protocol; }
    const ViewTagConfig& tag_config() const noexcept { return cfg_; }
    bool precomputed() const noexcept { return precomputed_; }
    bool has_spending_key() const noexcept { return sk_.has_value(); }
    const ViewingKey<S>& viewing_key() const noexcept { return vk_; }
    const MetaAddress<S>& meta() const noexcept { return meta_; }
    const std::optional<SpendingKey<S>>& spending_key() const noexcept { return sk_; }

    /// v R in G1.
    G1 mul_v(const G1& R) const
    {
        return v_g1_ ? (*v_g1_)(R) : R.mul(expect<Fr>(vk_.v, "v"));
    }

    /// v R on secp256k1.
    SecpPoint mul_v(const SecpPoint& R) const
    {
        return v_secp_ ? (*v_secp_)(R) : R.mul(expect<SecpScalar>(vk_.v, "v"));
    }

    /// b K for P3's secp256k1 spending point K.
    SecpPoint mul_K(const SecpScalar& b) const
    {
        return k_table_.empty() ? expect<SecpPoint>(meta_.K, "K").mul(b) : k_table_.mul(b);
    }

    /// e(P, Q) where Q is the protocol's constant G2 argument.
    Gt<S> pair_fixed(const G1& P) const
    {
        if (precomputed_)
            return pair<S>(P, prepared_);
        switch (vk_.protocol)
        {
        case ProtocolId::P3:
            return pair<S>(P, Generators<S>::g2());
        case ProtocolId::SK:
            return pair<S>(P, expect<G2>(vk_.v, "V"));
        default:
            return pair<S>(P, expect<G2>(meta_.K, "K"));
        }
    }

private:
    ScanContext() = default;

    ViewingKey<S> vk_{};
    MetaAddress<S> meta_{};
    std::optional<SpendingKey<S>> sk_;
    ViewTagConfig cfg_;
    bool precomputed_ = false;
    std::optional<FixedScalarMul<typename S::G1Curve>> v_g1_;
    std::optional<FixedScalarMul<secp256k1::Curve>> v_secp_;
    G2Prepared<S> prepared_;
    FixedBaseTable<secp256k1::Curve> k_table_;
};

template <class S>
struct ScanResult
{
    std::uint64_t index;
    GroupElement<S> pub;
    StealthAddress address;
    std::optional<ScalarValue<S>> priv;
};

struct ScanStats
{
    std::uint64_t inspected = 0;    ///< announcements of the context's protocol and curve
    std::uint64_t skipped = 0;      ///< other protocols or curves
    std::uint64_t tag_matches = 0;  ///< candidates that reached the post-match path
};

template <class S>
struct ScanReport
{
    std::vector<ScanResult<S>> results;
    ScanStats stats;
};

namespace detail
{
/// Post-match work for announcements whose tag matched.
template <class S>
ScanResult<S> complete_match(const ScanContext<S>& ctx, const Announcement& ann, const GroupElement<S>& shared,
    const Digest32* digest)
{
    using Fr = typename S::Fr;
    using G1 = typename S::G1;
    using G = Generators<S>;
    const auto& meta = ctx.meta();
    const auto& sk = ctx.spending_key();
    // The HASH tag already computed keccak256 of the shared secret; reuse it as hash(shared).
    auto hashed = [&]<class Scalar>() {
        return digest != nullptr ? digest_to_scalar<Scalar>(*digest)
                                 : digest_to_scalar<Scalar>(keccak256(serialize_element<S>(shared)));
    };

    ScanResult<S> res{ann.index, {}, {}, std::nullopt};
    switch (ctx.protocol())
    {
    case ProtocolId::P1:
        res.pub = ctx.pair_fixed(expect<G1>(shared, "vR"));
        if (sk)
            res.priv = expect<Fr>(sk->k, "k") * expect<Fr>(ctx.viewing_key().v, "v");
        break;
    case ProtocolId::P2:
    {
        const Fr h = hashed.template operator()<Fr>();
        res.pub = ctx.pair_fixed(G::g1_table().mul(h));
        if (sk)
            res.priv = expect<Fr>(sk->k, "k") * h;
        break;
    }
    case ProtocolId::P3:
    {
        const SecpScalar b = p3_scalar<S>(ctx.pair_fixed(expect<G1>(shared, "vR")));
        res.pub = ctx.mul_K(b);
        if (sk)
            res.priv = b * expect<SecpScalar>(sk->k, "k");
        break;
    }
    case ProtocolId::SK:
    {
        const Fr h = hashed.template operator()<Fr>();
        res.pub = expect<G1>(meta.K, "K") + G::g1_table().mul(h);
        if (sk)
            res.priv = expect<Fr>(sk->k, "k") + h;
        break;
    }
    case ProtocolId::DKSAP:
    {
        const SecpScalar h = hashed.template operator()<SecpScalar>();
        res.pub = expect<SecpPoint>(meta.K, "K") + G::ge_table().mul(h);
        if (sk)
            res.priv = expect<SecpScalar>(sk->k, "k") + h;
        break;
    }
    }
    res.address = stealth_address<S>(res.pub);
    return res;
}

template <class S>
ViewTag tag_of(const ScanContext<S>& ctx, const GroupElement<S>& shared, unsigned bits, Digest32& digest)
{
    return compute_view_tag<S>(ctx.protocol(), shared, ViewTagConfig{ctx.tag_config().variant, bits}, &digest);
}

/// Brings the points of a chunk to Z = 1 with one inversion, so the tag
/// encodings that follow need none of their own.
template <class Curve, class S>
void normalize_shared(std::vector<GroupElement<S>>& shared)
{
    using P = Point<Curve>;
    std::vector<P> pts;
    pts.reserve(shared.size());
    for (const auto& e : shared)
        pts.push_back(std::get<P>(e));
    normalize_batch<Curve>(pts);
    for (std::size_t i = 0; i < pts.size(); ++i)
        shared[i] = pts[i];
}
}  // namespace detail

/// Filters announcements by view tag and completes the derivation on matches.
///
/// Each announcement costs one v R (or, for the single-key protocol, one
/// pairing) plus one keccak256 for hash tags. Announcements are taken in
/// chunks so the points can share one inversion before encoding. Tags are
/// compared at the width the announcement carries, using the context's tag
/// variant. Every tag match is returned, so with short tags a few results
/// belong to other recipients; telling them apart needs data outside the
/// registry.
template <class S>
ScanReport<S> scan(const ScanContext<S>& ctx, std::span<const Announcement> anns)
{
    constexpr std::size_t chunk = 64;
    ScanReport<S> report;
    const bool hashed = ctx.tag_config().variant == TagVariant::HASH;
    std::vector<const Announcement*> batch;
    std::vector<GroupElement<S>> shared;
    batch.reserve(chunk);
    shared.reserve(chunk);

    auto flush = [&] {
        switch (ctx.protocol())
        {
        case ProtocolId::SK:
            break;
        case ProtocolId::DKSAP:
            detail::normalize_shared<secp256k1::Curve, S>(shared);
            break;
        default:
            detail::normalize_shared<typename S::G1Curve, S>(shared);
            break;
        }
        for (std::size_t i = 0; i < batch.size(); ++i)
        {
            Digest32 digest;
            if (detail::tag_of(ctx, shared[i], batch[i]->tag.bits, digest) != batch[i]->tag)
                continue;
            ++report.stats.tag_matches;
            report.results.push_back(detail::complete_match(ctx, *batch[i], shared[i], hashed ? &digest : nullptr));
        }
        batch.clear();
        shared.clear();
    };

    for (const auto& ann : anns)
    {
        if (ann.protocol != ctx.protocol() || ann.curve != curve_id_of<S>())
        {
            ++report.stats.skipped;
            continue;
        }
        ++report.stats.inspected;

        switch (ctx.protocol())
        {
        case ProtocolId::SK:
            shared.emplace_back(ctx.pair_fixed(deserialize_point<typename S::G1Curve>(ann.R)));
            break;
        case ProtocolId::DKSAP:
            shared.emplace_back(ctx.mul_v(deserialize_point<secp256k1::Curve>(ann.R)));
            break;
        default:
            shared.emplace_back(ctx.mul_v(deserialize_point<typename S::G1Curve>(ann.R)));
            break;
        }
        batch.push_back(&ann);
        if (batch.size() == chunk)
            flush();
    }
    flush();
    return report;
}

template <class S>
ScanReport<S> scan(const ScanContext<S>& ctx, const AnnouncementRegistry& registry, std::uint64_t from = 0)
{
    return scan(ctx, registry.iterate(from));
}

}  // namespace sap
