// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include "sap/curves/secp256k1.hpp"
#include "sap/fixed_base.hpp"
#include "sap/hex.hpp"
#include "sap/pairing.hpp"
#include "sap/types.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sap
{
template <class S>
using GroupElement = std::variant<typename S::G1, typename S::G2, Gt<S>, SecpPoint>;

template <class S>
using ScalarValue = std::variant<typename S::Fr, SecpScalar>;

/// Alternative held by a variant, or ProtocolError naming what was expected.
template <class T, class V>
const T& expect(const V& v, const char* what)
{
    if (const T* p = std::get_if<T>(&v))
        return *p;
    throw ProtocolError(std::string("wrong group or field for ") + what);
}

template <class S>
Bytes serialize_element(const GroupElement<S>& e)
{
    return std::visit([](const auto& x) { return serialize(x); }, e);
}

template <class S>
struct SpendingKey
{
    ProtocolId protocol;
    ScalarValue<S> k;  ///< Fr for P1, P2, SK; secp256k1 scalar for P3, DKSAP
};

template <class S>
struct ViewingKey
{
    ProtocolId protocol;
    std::variant<typename S::Fr, SecpScalar, typename S::G2> v;  ///< SK: the point V = k g2
};

template <class S>
struct MetaAddress
{
    ProtocolId protocol;
    GroupElement<S> K;
    std::optional<GroupElement<S>> V;

    friend bool operator==(const MetaAddress& a, const MetaAddress& b)
    {
        return a.protocol == b.protocol && a.K == b.K && a.V == b.V;
    }
};

template <class S>
struct KeyBundle
{
    SpendingKey<S> spending;
    ViewingKey<S> viewing;
    MetaAddress<S> meta;
};

/// Group generators and g_e, cached per suite.
template <class S>
struct Generators
{
    static const typename S::G1& g1()
    {
        static const auto g = S::G1::generator();
        return g;
    }
    static const typename S::G2& g2()
    {
        static const auto g = S::G2::generator();
        return g;
    }
    static const SecpPoint& ge()
    {
        static const auto g = SecpPoint::generator();
        return g;
    }
    static const FixedBaseTable<typename S::G1Curve>& g1_table()
    {
        static const FixedBaseTable<typename S::G1Curve> t(g1());
        return t;
    }
    static const FixedBaseTable<secp256k1::Curve>& ge_table()
    {
        static const FixedBaseTable<secp256k1::Curve> t(ge());
        return t;
    }
    static const G2Prepared<S>& g2_prepared()
    {
        static const G2Prepared<S> p(g2());
        return p;
    }
    /// e(g1, g2).
    static const Gt<S>& gt()
    {
        static const auto g = pair<S>(g1(), g2());
        return g;
    }
};

template <class S, class Rng>
KeyBundle<S> gen_keys(ProtocolId protocol, Rng& rng)
{
    using Fr = typename S::Fr;
    using G = Generators<S>;
    switch (protocol)
    {
    case ProtocolId::P1:
    case ProtocolId::P2:
    {
        const Fr k = Fr::random_nonzero(rng);
        const Fr v = Fr::random_nonzero(rng);
        return {{protocol, k}, {protocol, v}, {protocol, G::g2().mul(k), G::g1_table().mul(v)}};
    }
    case ProtocolId::P3:
    {
        const SecpScalar k = SecpScalar::random_nonzero(rng);
        const Fr v = Fr::random_nonzero(rng);
        return {{protocol, k}, {protocol, v}, {protocol, G::ge_table().mul(k), G::g1_table().mul(v)}};
    }
    case ProtocolId::SK:
    {
        const Fr k = Fr::random_nonzero(rng);
        return {{protocol, k}, {protocol, G::g2().mul(k)}, {protocol, G::g1_table().mul(k), std::nullopt}};
    }
    case ProtocolId::DKSAP:
    {
        const SecpScalar k = SecpScalar::random_nonzero(rng);
        const SecpScalar v = SecpScalar::random_nonzero(rng);
        return {{protocol, k}, {protocol, v}, {protocol, G::ge_table().mul(k), G::ge_table().mul(v)}};
    }
    }
    throw ProtocolError("unknown protocol");
}

namespace detail
{
template <class Point>
Point decode_key_point(std::string_view hex, const char* what)
{
    const auto p = deserialize_point<typename Point::CurveType>(from_hex(hex));
    if (p.is_infinity())
        throw DecodeError(std::string(what) + " must not be the point at infinity");
    return p;
}

template <class S>
GroupElement<S> decode_K(ProtocolId protocol, std::string_view hex)
{
    switch (protocol)
    {
    case ProtocolId::P1:
    case ProtocolId::P2:
        return decode_key_point<typename S::G2>(hex, "K");
    case ProtocolId::SK:
        return decode_key_point<typename S::G1>(hex, "K");
    default:
        return decode_key_point<SecpPoint>(hex, "K");
    }
}

template <class S>
GroupElement<S> decode_V(ProtocolId protocol, std::string_view hex)
{
    if (protocol == ProtocolId::DKSAP)
        return decode_key_point<SecpPoint>(hex, "V");
    return decode_key_point<typename S::G1>(hex, "V");
}

std::vector<std::string_view> split(std::string_view s, char sep);
}  // namespace detail

/// "sma:<proto>:<curve>:<hexK>[:<hexV>]".
template <class S>
std::string encode_meta(const MetaAddress<S>& m)
{
    std::string s = "sma:";
    s += protocol_name(m.protocol);
    s += ':';
    s += curve_name(curve_id_of<S>());
    s += ':';
    s += to_hex(serialize_element<S>(m.K));
    if (m.V)
    {
        s += ':';
        s += to_hex(serialize_element<S>(*m.V));
    }
    return s;
}

/// Protocol and curve named by an encoded meta-address, for dispatch before decode_meta.
struct MetaHeader
{
    ProtocolId protocol;
    CurveId curve;
};

MetaHeader parse_meta_header(std::string_view s);

template <class S>
MetaAddress<S> decode_meta(std::string_view s)
{
    const auto parts = detail::split(s, ':');
    const auto header = parse_meta_header(s);
    if (header.curve != curve_id_of<S>())
        throw DecodeError("meta-address is for curve " + std::string(curve_name(header.curve)));
    const bool dual = is_dual_key(header.protocol);
    if (parts.size() != (dual ? 5U : 4U))
        throw DecodeError(dual ? "dual-key meta-address needs both K and V" : "single-key meta-address takes only K");
    MetaAddress<S> m{header.protocol, detail::decode_K<S>(header.protocol, parts[3]), std::nullopt};
    if (dual)
        m.V = detail::decode_V<S>(header.protocol, parts[4]);
    return m;
}

}  // namespace sap
