// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include "sap/field.hpp"
#include "sap/glv.hpp"
#include "sap/point.hpp"

namespace sap::secp256k1
{
struct FpParams
{
    static constexpr std::size_t limbs = 4;
    static constexpr std::size_t bytes = 32;
    static constexpr Limbs<4> modulus =
        limbs_from_hex<4>("fffffffffffffffffffffffffffffffffffffffffffffffffffffffefffffc2f");
};

struct FnParams
{
    static constexpr std::size_t limbs = 4;
    static constexpr std::size_t bytes = 32;
    static constexpr Limbs<4> modulus =
        limbs_from_hex<4>("fffffffffffffffffffffffffffffffebaaedce6af48a03bbfd25e8cd0364141");
};

using Fp = Field<FpParams>;
using Fn = Field<FnParams>;

struct Curve
{
    using Field = Fp;
    using Scalar = Fn;
    static constexpr bool subgroup_check_needed = false;
    static constexpr bool sec1_encoding = true;
    static const Fp& b()
    {
        static const Fp v = Fp::from_u64(7);
        return v;
    }
    static Affine<Fp> generator()
    {
        return {
            Fp::from_reduced(limbs_from_hex<4>("79be667ef9dcbbac55a06295ce870b07029bfcdb2dce28d959f2815b16f81798")),
            Fp::from_reduced(limbs_from_hex<4>("483ada7726a3c4655da4fbfc0e1108a8fd17b448a68554199c47d08ffb10d4b8")),
            false,
        };
    }

    static constexpr GlvParams glv{
        "7ae96a2b657c07106e64479eac3434e99cf0497512f58995c1396c28719501ee",
        "5363ad4cc05c30e0a5261c028812645a122e22ea20816678df02967c1b23bd72",
        "3086d221a7d46bcde86c90e49284eb15",
        "-e4437ed6010e88286f547fa90abfe4c3",
        "114ca50f7a8e2f3f657c1108d9d44cfd8",
        "3086d221a7d46bcde86c90e49284eb15",
    };
    static const Fp& glv_beta()
    {
        static const Fp v = Fp::from_reduced(limbs_from_hex<4>(glv.beta));
        return v;
    }
};

using Point = sap::Point<Curve>;

}  // namespace sap::secp256k1

namespace sap
{
using SecpScalar = secp256k1::Fn;
using SecpPoint = secp256k1::Point;
}  // namespace sap
