// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include "sap/protocols.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sap
{
struct BenchConfig
{
    std::vector<ProtocolId> protocols = {ProtocolId::P1, ProtocolId::P2, ProtocolId::P3, ProtocolId::SK};
    std::vector<std::uint64_t> counts = {5000, 10000, 20000, 40000, 80000};
    std::vector<ViewTagConfig> tags = {ViewTagConfig{}};
    std::vector<CurveId> curves = {CurveId::BN254};
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    unsigned repetitions = 1000;
    bool precompute = true;

    /// Keys absent from the JSON object keep their defaults. Throws ConfigError.
    static BenchConfig from_json(std::string_view text);

    void validate() const;
};

/// One timed scan, or (seed == nullopt) the mean over all seeds of a configuration.
struct ScanRow
{
    ProtocolId protocol;
    CurveId curve;
    std::uint64_t count;
    ViewTagConfig tag;
    std::optional<std::uint64_t> seed;
    double scan_ms;
    double tag_matches;
    double true_matches;
};

struct OpRow
{
    CurveId curve;
    std::string op;
    unsigned repetitions;
    double mean_us;
};

/// Progress callback; receives one line per finished scan.
using BenchLog = std::function<void(const std::string&)>;

/// For each configuration and seed: recipient keys, count - 1 foreign
/// announcements to random meta-addresses and one owned announcement at a
/// random position; only the scan itself is timed.
std::vector<ScanRow> bench_scan(const BenchConfig& cfg, const BenchLog& log = {});

/// Mean time per operation over cfg.repetitions for each curve.
std::vector<OpRow> bench_ops(const BenchConfig& cfg);

/// proto,curve,A,tag_variant,tag_bits,seed,scan_ms,tag_matches,true_matches
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

/// curve,op,repetitions,mean_us
void write_ops_csv(std::ostream& out, const std::vector<OpRow>& rows);

/// Aligned text tables for terminals.
void write_scan_table(std::ostream& out, const std::vector<ScanRow>& rows);
void write_ops_table(std::ostream& out, const std::vector<OpRow>& rows);

/// Announcement as sender_derive would produce it for an ephemeral scalar r
/// and a recipient whose shared-secret key is `key` (v for dual-key
/// protocols, k for the single-key one), using only fixed-base arithmetic.
/// Tags are computed at `cfg.bits`.
template <class S>
Announcement synthetic_announcement(
    ProtocolId protocol, const ScalarValue<S>& r, const ScalarValue<S>& key, const ViewTagConfig& cfg)
{
    using G = Generators<S>;
    using Fr = typename S::Fr;
    GroupElement<S> R;
    GroupElement<S> shared;
    switch (protocol)
    {
    case ProtocolId::SK:
    {
        const Fr rr = expect<Fr>(r, "r");
        R = G::g1_table().mul(rr);
        shared = G::gt().pow(rr * expect<Fr>(key, "k"));  // e(k g1, g2)^r
        break;
    }
    case ProtocolId::DKSAP:
    {
        const SecpScalar rr = expect<SecpScalar>(r, "r");
        R = G::ge_table().mul(rr);
        shared = G::ge_table().mul(rr * expect<SecpScalar>(key, "v"));
        break;
    }
    default:
    {
        const Fr rr = expect<Fr>(r, "r");
        R = G::g1_table().mul(rr);
        shared = G::g1_table().mul(rr * expect<Fr>(key, "v"));
        break;
    }
    }
    return {0, protocol, curve_id_of<S>(), serialize_element<S>(R), compute_view_tag<S>(protocol, shared, cfg)};
}

}  // namespace sap
