// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include "sap/field.hpp"
#include "sap/glv.hpp"
#include "sap/point.hpp"
#include "sap/tower.hpp"

#include <string_view>

namespace sap::bls12_381
{
struct FpParams
{
    static constexpr std::size_t limbs = 6;
    static constexpr std::size_t bytes = 48;
    static constexpr Limbs<6> modulus = limbs_from_hex<6>(
        "1a0111ea397fe69a4b1ba7b6434bacd764774b84f38512bf6730d2a0f6b0f6241eabfffeb153ffffb9feffffffffaaab");
};

struct FrParams
{
    static constexpr std::size_t limbs = 4;
    static constexpr std::size_t bytes = 32;
    static constexpr Limbs<4> modulus =
        limbs_from_hex<4>("73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001");
};

using Fp = Field<FpParams>;
using Fr = Field<FrParams>;

struct TowerCfg
{
    using Fp = bls12_381::Fp;
    static constexpr std::uint64_t xi_re = 1;
};

using Fp2 = sap::Fp2<TowerCfg>;
using Fp6 = sap::Fp6<TowerCfg>;
using Fp12 = sap::Fp12<TowerCfg>;

inline Fp fp_hex(std::string_view h)
{
    return Fp::from_reduced(limbs_from_hex<6>(h));
}

struct G1Curve
{
    using Field = Fp;
    using Scalar = Fr;
    static constexpr bool subgroup_check_needed = true;
    static const Fp& b()
    {
        static const Fp v = Fp::from_u64(4);
        return v;
    }
    static Affine<Fp> generator()
    {
        return {
            fp_hex("17f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac586c55e83ff97a1aeffb3af00adb22c6bb"),
            fp_hex("08b3f481e3aaa0f1a09e30ed741d8ae4fcf5e095d5d00af600db18cb2c04b3edd03cc744a2888ae40caa232946c5e7e1"),
            false,
        };
    }

    /// lambda = x^2 - 1.
    static constexpr GlvParams glv{
        "1a0111ea397fe699ec02408663d4de85aa0d857d89759ad4897d29650fb85f9b409427eb4f49fffd8bfd00000000aaac",
        "ac45a4010001a40200000000ffffffff",
        "ac45a4010001a40200000000ffffffff",
        "-1",
        "1",
        "ac45a4010001a4020000000100000000",
    };
    static const Fp& glv_beta()
    {
        static const Fp v = fp_hex(glv.beta);
        return v;
    }

    /// Scott's test: P is in G1 iff (beta^2 x, y) = -x^2 P. Two 64-bit
    /// multiplications instead of one by the 255-bit group order.
    static bool in_prime_subgroup(const Point<G1Curve>& p)
    {
        constexpr Limbs<1> abs_x = {0xd201000000010000ULL};
        static const Fp beta2 = glv_beta().square();
        const Point<G1Curve> sigma{p.x() * beta2, p.y(), p.z()};
        return sigma == -p.mul(abs_x).mul(abs_x);
    }
};

struct G2Curve
{
    using Field = Fp2;
    using Scalar = Fr;
    static constexpr bool subgroup_check_needed = true;
    /// b' = 4 xi (M-type twist).
    static const Fp2& b()
    {
        static const Fp2 v = Fp2{Fp::from_u64(4), Fp::zero()}.mul_by_xi();
        return v;
    }
    static Affine<Fp2> generator()
    {
        return {
            Fp2{fp_hex("024aa2b2f08f0a91260805272dc51051c6e47ad4fa403b02b4510b647ae3d1770bac0326a805bbefd48056c8c121bdb8"),
                fp_hex("13e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bbdc7f5049334cf11213945d57e5ac7d055d042b7e")},
            Fp2{fp_hex("0ce5d527727d6e118cc9cdc6da2e351aadfd9baa8cbdd3a76d429a695160d12c923ac9cc3baca289e193548608b82801"),
                fp_hex("0606c4a02ea734cc32acd2b02bc28b99cb3e287e85a763af267492ab572e99ab3f370d275cec1da1aaa9075ff05f79be")},
            false,
        };
    }
};

using G1 = Point<G1Curve>;
using G2 = Point<G2Curve>;

/// BLS12-381: curve parameter x = -0xd201000000010000, optimal Ate loop |x|.
struct Suite
{
    static constexpr std::string_view name = "bls12-381";
    static constexpr TwistType twist = TwistType::M;
    static constexpr bool bn_family = false;
    static constexpr std::uint64_t x = 0xd201000000010000ULL;  // |x|
    static constexpr bool x_negative = true;
    static constexpr Limbs<2> ate_loop = {0xd201000000010000ULL, 0};
    static constexpr bool ate_negative = true;

    using Fp = bls12_381::Fp;
    using Fr = bls12_381::Fr;
    using Fp2 = bls12_381::Fp2;
    using Fp12 = bls12_381::Fp12;
    using G1Curve = bls12_381::G1Curve;
    using G2Curve = bls12_381::G2Curve;
    using G1 = bls12_381::G1;
    using G2 = bls12_381::G2;

    static Fp12 pow_x(const Fp12& f) { return f.cyclotomic_pow(x).conjugate(); }

    /// f^((p^4 - p^2 + 1) / r) = f^(((x-1)^2 / 3) (x + p) (x^2 + p^2 - 1) + 1).
    static Fp12 final_exp_hard(const Fp12& f)
    {
        constexpr Limbs<2> third_sq = {0x8c00aaab0000aaabULL, 0x396c8c005555e156ULL};  // (x-1)^2 / 3
        Fp12 t = f.cyclotomic_pow(third_sq);
        t = pow_x(t) * t.frobenius();
        t = pow_x(pow_x(t)) * t.frobenius(2) * t.conjugate();
        return t * f;
    }
};

}  // namespace sap::bls12_381
