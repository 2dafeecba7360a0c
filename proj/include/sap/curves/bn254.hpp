// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include "sap/field.hpp"
#include "sap/glv.hpp"
#include "sap/point.hpp"
#include "sap/tower.hpp"

#include <string_view>

namespace sap
{
namespace bn254
{
struct FpParams
{
    static constexpr std::size_t limbs = 4;
    static constexpr std::size_t bytes = 32;
    static constexpr Limbs<4> modulus =
        limbs_from_hex<4>("30644e72e131a029b85045b68181585d97816a916871ca8d3c208c16d87cfd47");
};

struct FrParams
{
    static constexpr std::size_t limbs = 4;
    static constexpr std::size_t bytes = 32;
    static constexpr Limbs<4> modulus =
        limbs_from_hex<4>("30644e72e131a029b85045b68181585d2833e84879b9709143e1f593f0000001");
};

using Fp = Field<FpParams>;
using Fr = Field<FrParams>;

struct TowerCfg
{
    using Fp = bn254::Fp;
    static constexpr std::uint64_t xi_re = 9;
};

using Fp2 = sap::Fp2<TowerCfg>;
using Fp6 = sap::Fp6<TowerCfg>;
using Fp12 = sap::Fp12<TowerCfg>;

struct G1Curve
{
    using Field = Fp;
    using Scalar = Fr;
    static constexpr bool subgroup_check_needed = false;
    static const Fp& b()
    {
        static const Fp v = Fp::from_u64(3);
        return v;
    }
    static Affine<Fp> generator() { return {Fp::from_u64(1), Fp::from_u64(2), false}; }

    static constexpr GlvParams glv{
        "59e26bcea0d48bacd4f263f1acdb5c4f5763473177fffffe",
        "b3c4d79d41a917585bfc41088d8daaa78b17ea66b99c90dd",
        "89d3256894d213e3",
        "-6f4d8248eeb859fc8211bbeb7d4f1128",
        "6f4d8248eeb859fd0be4e1541221250b",
        "89d3256894d213e3",
    };
    static const Fp& glv_beta()
    {
        static const Fp v = Fp::from_reduced(limbs_from_hex<4>(glv.beta));
        return v;
    }
};

struct G2Curve
{
    using Field = Fp2;
    using Scalar = Fr;
    static constexpr bool subgroup_check_needed = true;
    /// b' = 3 / xi (D-type twist).
    static const Fp2& b()
    {
        static const Fp2 v = Fp2{Fp::from_u64(3), Fp::zero()} * Fp2::one().mul_by_xi().inverse();
        return v;
    }
    static Affine<Fp2> generator()
    {
        auto fp = [](std::string_view h) { return Fp::from_reduced(limbs_from_hex<4>(h)); };
        return {
            Fp2{fp("1800deef121f1e76426a00665e5c4479674322d4f75edadd46debd5cd992f6ed"),
                fp("198e9393920d483a7260bfb731fb5d25f1aa493335a9e71297e485b7aef312c2")},
            Fp2{fp("12c85ea5db8c6deb4aab71808dcb408fe3d1e7690c43d37b4ce6cc0166fa7daa"),
                fp("090689d0585ff075ec9e99ad690c3395bc4b313370b38ef355acdadcd122975b")},
            false,
        };
    }
};

using G1 = Point<G1Curve>;
using G2 = Point<G2Curve>;

/// BN254 (alt_bn128): curve parameter x = 4965661367192848881, optimal Ate loop 6x + 2.
struct Suite
{
    static constexpr std::string_view name = "bn254";
    static constexpr TwistType twist = TwistType::D;
    static constexpr bool bn_family = true;
    static constexpr std::uint64_t x = 4965661367192848881ULL;
    static constexpr bool x_negative = false;
    /// 6x + 2 (65 bits).
    static constexpr Limbs<2> ate_loop = {0x9d797039be763ba8ULL, 0x1ULL};
    static constexpr bool ate_negative = false;

    using Fp = bn254::Fp;
    using Fr = bn254::Fr;
    using Fp2 = bn254::Fp2;
    using Fp12 = bn254::Fp12;
    using G1Curve = bn254::G1Curve;
    using G2Curve = bn254::G2Curve;
    using G1 = bn254::G1;
    using G2 = bn254::G2;

    /// f^((p^4 - p^2 + 1) / r) for f in the cyclotomic subgroup, using
    /// the base-p expansion with coefficients in x:
    ///   l0 = -2 - 18x - 30x^2 - 36x^3, l1 = 1 - 12x - 18x^2 - 36x^3,
    ///   l2 = 1 + 6x^2, l3 = 1.
    static Fp12 final_exp_hard(const Fp12& f)
    {
        const Fp12 fx = f.cyclotomic_pow(x);
        const Fp12 fx2 = fx.cyclotomic_pow(x);
        const Fp12 fx3 = fx2.cyclotomic_pow(x);

        const Fp12 fx3_36 = fx3.cyclotomic_pow(36);
        const Fp12 fx2_6 = fx2.cyclotomic_pow(6);
        const Fp12 fx2_18 = fx2_6.cyclotomic_pow(3);
        const Fp12 fx2_30 = fx2_6.cyclotomic_pow(5);
        const Fp12 fx_6 = fx.cyclotomic_pow(6);
        const Fp12 fx_12 = fx_6.cyclotomic_square();
        const Fp12 fx_18 = fx_12 * fx_6;

        const Fp12 y0 = (f.cyclotomic_square() * fx_18 * fx2_30 * fx3_36).conjugate();
        const Fp12 y1 = f * (fx_12 * fx2_18 * fx3_36).conjugate();
        const Fp12 y2 = f * fx2_6;
        return y0 * y1.frobenius() * y2.frobenius(2) * f.frobenius(3);
    }
};

}  // namespace bn254
}  // namespace sap
