// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include "sap/errors.hpp"
#include "sap/field.hpp"
#include "sap/pairing.hpp"
#include "sap/point.hpp"
#include "sap/tower.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace sap
{
using Bytes = std::vector<std::uint8_t>;

/// Big-endian fixed-width encoding of base and quadratic-extension field elements.
template <class F>
struct FieldCodec;

template <class P>
struct FieldCodec<Field<P>>
{
    using F = Field<P>;
    static constexpr std::size_t size = F::byte_size;

    static void write(const F& a, std::uint8_t* out) noexcept
    {
        const auto b = a.to_be_bytes();
        std::copy(b.begin(), b.end(), out);
    }

    static std::optional<F> read(std::span<const std::uint8_t> in) noexcept { return F::from_be_bytes(in); }

    static bool sign(const F& a) noexcept { return a.is_odd(); }
};

/// c1 || c0, the usual order for Fp2 in pairing-library encodings.
template <class Cfg>
struct FieldCodec<Fp2<Cfg>>
{
    using F = Fp2<Cfg>;
    using Base = FieldCodec<typename Cfg::Fp>;
    static constexpr std::size_t size = 2 * Base::size;

    static void write(const F& a, std::uint8_t* out) noexcept
    {
        Base::write(a.c1, out);
        Base::write(a.c0, out + Base::size);
    }

    static std::optional<F> read(std::span<const std::uint8_t> in) noexcept
    {
        const auto c1 = Base::read(in.first(Base::size));
        const auto c0 = Base::read(in.subspan(Base::size, Base::size));
        if (!c0 || !c1)
            return std::nullopt;
        return F{*c0, *c1};
    }

    static bool sign(const F& a) noexcept { return a.sign(); }
};

namespace detail
{
template <class Curve>
concept Sec1Curve = Curve::sec1_encoding;

inline constexpr std::uint8_t flag_infinity = 0x80;
inline constexpr std::uint8_t flag_sign = 0x40;

template <class Curve>
Point<Curve> decompress(const typename Curve::Field& x, bool sign)
{
    using F = typename Curve::Field;
    const F y2 = x.square() * x + Curve::b();
    const auto y = y2.sqrt();
    if (!y)
        throw DecodeError("point is not on the curve");
    const F yy = FieldCodec<F>::sign(*y) == sign ? *y : -*y;
    if (yy.is_zero() && sign)
        throw DecodeError("non-canonical sign flag");
    return Point<Curve>::from_affine({x, yy, false});
}
}  // namespace detail

/// Size in bytes of a compressed point encoding.
template <class Curve>
constexpr std::size_t compressed_size() noexcept
{
    if constexpr (detail::Sec1Curve<Curve>)
        return 33;
    else
        return FieldCodec<typename Curve::Field>::size;
}

/// Compressed canonical encoding.
///
/// Pairing-curve points are the big-endian x-coordinate with two flag bits in
/// the first byte: 0x80 marks infinity (all other bits zero) and 0x40 marks
/// the odd (sgn0 for Fp2) choice of y. secp256k1 points use SEC1 (02/03 || x),
/// with infinity as the single byte 00.
template <class Curve>
Bytes serialize(const Point<Curve>& p)
{
    using Codec = FieldCodec<typename Curve::Field>;
    const auto a = p.to_affine();
    if constexpr (detail::Sec1Curve<Curve>)
    {
        if (a.infinity)
            return Bytes{0x00};
        Bytes out(33);
        out[0] = Codec::sign(a.y) ? 0x03 : 0x02;
        Codec::write(a.x, out.data() + 1);
        return out;
    }
    else
    {
        Bytes out(Codec::size);
        if (a.infinity)
        {
            out[0] = detail::flag_infinity;
            return out;
        }
        Codec::write(a.x, out.data());
        if (Codec::sign(a.y))
            out[0] |= detail::flag_sign;
        return out;
    }
}

/// Inverse of serialize(); rejects non-canonical, off-curve and off-subgroup input.
template <class Curve>
Point<Curve> deserialize_point(std::span<const std::uint8_t> in)
{
    using F = typename Curve::Field;
    using Codec = FieldCodec<F>;
    Point<Curve> p;
    if constexpr (detail::Sec1Curve<Curve>)
    {
        if (in.size() == 1 && in[0] == 0x00)
            return {};
        if (in.size() != 33 || (in[0] != 0x02 && in[0] != 0x03))
            throw DecodeError("bad SEC1 point encoding");
        const auto x = Codec::read(in.subspan(1));
        if (!x)
            throw DecodeError("x-coordinate not canonical");
        p = detail::decompress<Curve>(*x, in[0] == 0x03);
    }
    else
    {
        if (in.size() != Codec::size)
            throw DecodeError("bad point encoding length");
        const std::uint8_t flags = in[0] & (detail::flag_infinity | detail::flag_sign);
        Bytes body(in.begin(), in.end());
        body[0] &= static_cast<std::uint8_t>(~flags);
        if ((flags & detail::flag_infinity) != 0)
        {
            if (flags != detail::flag_infinity || std::any_of(body.begin(), body.end(), [](auto b) { return b != 0; }))
                throw DecodeError("non-canonical infinity encoding");
            return {};
        }
        const auto x = Codec::read(body);
        if (!x)
            throw DecodeError("x-coordinate not canonical");
        p = detail::decompress<Curve>(*x, (flags & detail::flag_sign) != 0);
    }
    if (!p.in_subgroup())
        throw DecodeError("point is not in the prime-order subgroup");
    return p;
}

/// 64-byte x || y, used for Ethereum-style addresses.
template <class Curve>
Bytes serialize_uncompressed_xy(const Point<Curve>& p)
{
    using Codec = FieldCodec<typename Curve::Field>;
    const auto a = p.to_affine();
    Bytes out(2 * Codec::size);
    if (!a.infinity)
    {
        Codec::write(a.x, out.data());
        Codec::write(a.y, out.data() + Codec::size);
    }
    return out;
}

/// Big-endian affine x-coordinate (zeros for infinity).
template <class Curve>
Bytes x_coordinate(const Point<Curve>& p)
{
    using Codec = FieldCodec<typename Curve::Field>;
    const auto a = p.to_affine();
    Bytes out(Codec::size);
    if (!a.infinity)
        Codec::write(a.x, out.data());
    return out;
}

/// The twelve base-field coefficients of the Fp12 value, each big-endian, in
/// the order c0.c0.c0, c0.c0.c1, c0.c1.c0, ..., c1.c2.c1.
template <class S>
Bytes serialize(const Gt<S>& g)
{
    using Codec = FieldCodec<typename S::Fp>;
    Bytes out(12 * Codec::size);
    const auto coeffs = g.value().coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        Codec::write(coeffs[i], out.data() + i * Codec::size);
    return out;
}

template <class S>
Gt<S> deserialize_gt(std::span<const std::uint8_t> in)
{
    using Codec = FieldCodec<typename S::Fp>;
    if (in.size() != 12 * Codec::size)
        throw DecodeError("bad GT encoding length");
    std::array<typename S::Fp, 12> coeffs;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
    {
        const auto c = Codec::read(in.subspan(i * Codec::size, Codec::size));
        if (!c)
            throw DecodeError("GT coefficient not canonical");
        coeffs[i] = *c;
    }
    const auto f = S::Fp12::from_coefficients(coeffs);
    if (f.is_zero() || !f.pow(S::Fr::modulus).is_one())
        throw DecodeError("value is not in the order-r subgroup of GT");
    return Gt<S>(f);
}

}  // namespace sap
