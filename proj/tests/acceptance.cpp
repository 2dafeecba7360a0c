// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

// Acceptance suite: one PASS/FAIL line per criterion. Pass criterion numbers
// as arguments to run a subset.

#include "sap/bench.hpp"
#include "sap/cli.hpp"
#include "sap/registry.hpp"
#include "sap/scanner.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace sap;

namespace
{
using Clock = std::chrono::steady_clock;
using BN = bn254::Suite;
using BLS = bls12_381::Suite;

struct Outcome
{
    bool pass;
    std::string detail;
};

std::mt19937_64 rng(0xacce97);

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x, int digits = 2)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << x;
    return s.str();
}

// 1. End-to-end agreement of sender, viewer and recipient.
Outcome correctness()
{
    const auto t0 = Clock::now();
    std::size_t failures = 0;
    constexpr int trials = 1000;
    for (const auto p : all_protocols)
    {
        const auto kb = gen_keys<BN>(p, rng);
        for (int i = 0; i < trials; ++i)
        {
            const auto out = send<BN>(kb.meta, {}, rng);
            const auto view = viewer_derive_pub<BN>(kb.viewing, kb.meta, out.announcement);
            const auto priv = recipient_derive_priv<BN>(kb.spending, kb.viewing, out.announcement);
            const auto pub = priv_to_pub<BN>(p, priv, out.announcement);
            const bool ok = view.pub == out.pub && pub == out.pub && view.address == out.address &&
                            stealth_address<BN>(pub) == out.address;
            failures += ok ? 0 : 1;
        }
    }
    const double secs = seconds_since(t0);
    return {failures == 0 && secs < 60.0,
        std::to_string(5 * trials) + " trials, " + std::to_string(failures) + " mismatches, " + fmt(secs, 1) + " s"};
}

// 2. Bilinearity, inversion, exponent shuffle and non-degeneracy.
template <class S>
std::size_t pairing_failures(int samples)
{
    using Fr = typename S::Fr;
    const auto g1 = S::G1::generator();
    const auto g2 = S::G2::generator();
    std::size_t bad = 0;
    for (int i = 0; i < samples; ++i)
    {
        const Fr a = Fr::random_nonzero(rng), b = Fr::random_nonzero(rng);
        const auto P = g1.mul(Fr::random_nonzero(rng));
        const auto Q = g2.mul(Fr::random_nonzero(rng));
        const auto e = pair<S>(P, Q);
        bad += pair<S>(P.mul(a), Q) == e.pow(a) ? 0 : 1;            // left slot
        bad += pair<S>(P, Q.mul(b)) == e.pow(b) ? 0 : 1;            // right slot
        bad += pair<S>(-P, Q) == e.inverse() ? 0 : 1;               // inversion
        bad += pair<S>(P, -Q) * e == Gt<S>::identity() ? 0 : 1;
        const auto ab = pair<S>(P.mul(a), Q.mul(b));
        bad += ab == pair<S>(P.mul(b), Q.mul(a)) ? 0 : 1;           // exponent shuffle
        bad += ab == pair<S>(P.mul(a * b), Q) ? 0 : 1;
        bad += ab == pair<S>(P, Q.mul(a * b)) ? 0 : 1;
        bad += e.is_identity() ? 1 : 0;                              // non-degeneracy
    }
    return bad;
}

Outcome pairing_properties()
{
    const auto bn = pairing_failures<BN>(100);
    const auto bls = pairing_failures<BLS>(100);
    return {bn == 0 && bls == 0, "100 samples x 8 identities; failures bn254=" + std::to_string(bn) +
                                     " bls12-381=" + std::to_string(bls)};
}

// 3. The two earlier schemes leak the stealth key.
Outcome attacks()
{
    std::size_t ok3 = 0, ok4 = 0;
    for (int i = 0; i < 100; ++i)
    {
        const auto k = BN::Fr::random_nonzero(rng), v = BN::Fr::random_nonzero(rng), r = BN::Fr::random_nonzero(rng);
        const auto [a, b] = demo_attack_ref3<BN>(k, v, r);
        ok3 += a == b ? 1 : 0;
        const auto [c, d] = demo_attack_ref4<BN>(k, r);
        ok4 += c == d ? 1 : 0;
    }
    return {ok3 == 100 && ok4 == 100,
        "dual-key leak " + std::to_string(ok3) + "/100, pairing single-key leak " + std::to_string(ok4) + "/100"};
}

// Random foreign announcements (fresh recipient each) around one owned one.
std::vector<Announcement> foreign_pool(ProtocolId p, std::size_t n, const ViewTagConfig& cfg)
{
    std::vector<Announcement> out;
    out.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i)
    {
        const auto eph = make_ephemeral<BN>(p, rng);
        out.push_back(synthetic_announcement<BN>(p, eph.r, BN::Fr::random_nonzero(rng), cfg));
    }
    return out;
}

void reindex(std::vector<Announcement>& anns)
{
    for (std::size_t i = 0; i < anns.size(); ++i)
        anns[i].index = i;
}

// 4. Tag statistics, the 0-bit filter and completeness at every width.
Outcome tag_statistics()
{
    const auto p = ProtocolId::P3;
    const ViewTagConfig cfg{TagVariant::HASH, 8};
    const auto kb = gen_keys<BN>(p, rng);
    const auto ctx = ScanContext<BN>::precompute(kb.viewing, kb.meta, kb.spending, cfg);

    constexpr std::size_t A = 51200;
    auto anns = foreign_pool(p, A, cfg);
    const auto owned = send<BN>(kb.meta, cfg, rng);
    anns.insert(anns.begin() + static_cast<std::ptrdiff_t>(rng() % A), owned.announcement);
    reindex(anns);
    const auto report = scan(ctx, anns);
    const double foreign = static_cast<double>(report.stats.tag_matches) - 1.0;
    const double mean = A / 256.0, sigma = std::sqrt(A * (1.0 / 256) * (255.0 / 256));
    bool found = false;
    for (const auto& r : report.results)
        found = found || r.address == owned.address;
    const bool stats_ok = found && std::abs(foreign - mean) <= 3 * sigma;

    // Zero-bit tags send everything down the post-match path.
    const ViewTagConfig none{TagVariant::HASH, 0};
    std::vector<Announcement> small(anns.begin(), anns.begin() + 2000);
    for (auto& a : small)
        a.tag = a.tag.truncate(0);
    const auto ctx0 = ScanContext<BN>::precompute(kb.viewing, kb.meta, kb.spending, none);
    const auto r0 = scan(ctx0, small);
    const bool zero_ok = r0.stats.tag_matches == small.size() && r0.results.size() == small.size();

    // No false negatives: 1000 owned announcements per protocol and variant, tags cut to each width.
    std::size_t missed = 0, checked = 0;
    for (const auto proto : all_protocols)
        for (const auto variant : {TagVariant::HASH, TagVariant::XCOORD})
        {
            if (proto == ProtocolId::SK && variant == TagVariant::XCOORD)
                continue;
            const auto keys = gen_keys<BN>(proto, rng);
            std::vector<Announcement> mine;
            for (int i = 0; i < 1000; ++i)
                mine.push_back(send<BN>(keys.meta, {variant, 64}, rng).announcement);
            reindex(mine);
            for (const unsigned bits : {4U, 16U, 64U})
            {
                auto cut = mine;
                for (auto& a : cut)
                    a.tag = a.tag.truncate(bits);
                const auto c = ScanContext<BN>::precompute(keys.viewing, keys.meta, std::nullopt, {variant, bits});
                const auto found_all = scan(c, cut).results.size();
                missed += cut.size() - found_all;
                checked += cut.size();
            }
        }
    return {stats_ok && zero_ok && missed == 0,
        "foreign 8-bit matches " + fmt(foreign, 0) + " (expected " + fmt(mean, 0) + " +/- " + fmt(3 * sigma, 1) +
            "), 0-bit path " + std::to_string(r0.stats.tag_matches) + "/" + std::to_string(small.size()) +
            ", missed " + std::to_string(missed) + "/" + std::to_string(checked) + " owned"};
}

// 5. P1 reuses one stealth private key; the other protocols never do.
Outcome key_semantics()
{
    bool p1_same = true;
    std::string worst;
    bool others_distinct = true;
    for (const auto p : all_protocols)
    {
        const auto kb = gen_keys<BN>(p, rng);
        std::set<std::string> seen;
        for (int i = 0; i < 100; ++i)
        {
            const auto a = send<BN>(kb.meta, {}, rng).announcement;
            const auto b = send<BN>(kb.meta, {}, rng).announcement;
            const auto pa = recipient_derive_priv<BN>(kb.spending, kb.viewing, a);
            const auto pb = recipient_derive_priv<BN>(kb.spending, kb.viewing, b);
            const auto hex = [](const ScalarValue<BN>& s) {
                return std::visit([](const auto& x) { return to_hex(x.to_be_bytes()); }, s);
            };
            if (p == ProtocolId::P1)
                p1_same = p1_same && pa == pb;
            else
            {
                seen.insert(hex(pa));
                seen.insert(hex(pb));
            }
        }
        if (p != ProtocolId::P1 && seen.size() != 200)
        {
            others_distinct = false;
            worst += std::string(protocol_name(p)) + " ";
        }
    }
    return {p1_same && others_distinct, std::string("p1 identical over 100 pairs: ") + (p1_same ? "yes" : "no") +
                                            "; p2/p3/sk/dksap 200 distinct keys each: " +
                                            (others_distinct ? "yes" : "no (" + worst + ")")};
}

double op_mean(const std::vector<OpRow>& rows, const std::string& op)
{
    for (const auto& r : rows)
        if (r.op == op)
            return r.mean_us;
    throw std::runtime_error("missing op " + op);
}

std::vector<OpRow> ops_rows()
{
    static const std::vector<OpRow> rows = [] {
        BenchConfig cfg;
        cfg.repetitions = 1000;
        return bench_ops(cfg);
    }();
    return rows;
}

// 6. Precomputation changes nothing but speed.
Outcome precomputation()
{
    std::size_t differing = 0, total = 0;
    for (const auto p : all_protocols)
    {
        const auto kb = gen_keys<BN>(p, rng);
        const ViewTagConfig cfg{TagVariant::HASH, 4};
        std::vector<Announcement> anns;
        for (int i = 0; i < 200; ++i)
        {
            const bool mine = i % 10 == 0;
            const auto meta = mine ? kb.meta : gen_keys<BN>(p, rng).meta;
            anns.push_back(send<BN>(meta, cfg, rng).announcement);
        }
        reindex(anns);
        const auto fast = scan(ScanContext<BN>::precompute(kb.viewing, kb.meta, kb.spending, cfg, true), anns);
        const auto slow = scan(ScanContext<BN>::precompute(kb.viewing, kb.meta, kb.spending, cfg, false), anns);
        total += fast.results.size();
        if (fast.results.size() != slow.results.size())
        {
            differing += 1;
            continue;
        }
        for (std::size_t i = 0; i < fast.results.size(); ++i)
        {
            const auto& a = fast.results[i];
            const auto& b = slow.results[i];
            const bool same = a.index == b.index && serialize_element<BN>(a.pub) == serialize_element<BN>(b.pub) &&
                              a.address == b.address && a.priv == b.priv;
            differing += same ? 0 : 1;
        }
    }
    const auto rows = ops_rows();
    const double mul = op_mean(rows, "ecmul"), mul_naive = op_mean(rows, "ecmul_naive");
    const double pr = op_mean(rows, "pairing"), pr_naive = op_mean(rows, "pairing_naive");
    return {differing == 0 && mul <= mul_naive && pr <= pr_naive,
        std::to_string(total) + " results identical" + (differing ? " except " + std::to_string(differing) : "") +
            "; ecMUL " + fmt(mul, 1) + " vs " + fmt(mul_naive, 1) + " us naive (" +
            fmt(100 * (1 - mul / mul_naive), 1) + "% faster); pairing " + fmt(pr, 1) + " vs " + fmt(pr_naive, 1) +
            " us (" + fmt(100 * (1 - pr / pr_naive), 1) + "% faster)"};
}

double mean_ms(const std::vector<ScanRow>& rows, ProtocolId p, CurveId c, std::uint64_t count, unsigned bits = 8)
{
    for (const auto& r : rows)
        if (!r.seed && r.protocol == p && r.curve == c && r.count == count && r.tag.bits == bits)
            return r.scan_ms;
    throw std::runtime_error("missing bench row");
}

void progress(const std::string& line)
{
    std::cerr << "  " << line << '\n';
}

// 7. Protocol ordering at A = 20000.
Outcome protocol_ordering()
{
    BenchConfig cfg;
    cfg.counts = {20000};
    cfg.seeds = {1, 2, 3};
    const auto rows = bench_scan(cfg, progress);
    const auto t = [&](ProtocolId p) { return mean_ms(rows, p, CurveId::BN254, 20000); };
    const double p1 = t(ProtocolId::P1), p2 = t(ProtocolId::P2), p3 = t(ProtocolId::P3), sk = t(ProtocolId::SK);
    const double lo = std::min({p1, p2, p3}), hi = std::max({p1, p2, p3});
    const bool ok = sk >= 2 * p3 && hi <= 1.35 * lo && p3 < hi;
    return {ok, "mean ms: p1 " + fmt(p1, 0) + ", p2 " + fmt(p2, 0) + ", p3 " + fmt(p3, 0) + ", sk " + fmt(sk, 0) +
                    " (sk/p3 " + fmt(sk / p3) + ", spread " + fmt(100 * (hi / lo - 1), 1) + "%)"};
}

// 8. Wider tags at A = 1,000,000.
Outcome tag_scaling()
{
    BenchConfig cfg;
    cfg.protocols = {ProtocolId::P3};
    cfg.counts = {1000000};
    cfg.tags = {{TagVariant::HASH, 8}, {TagVariant::HASH, 16}};
    cfg.seeds = {1};
    const auto rows = bench_scan(cfg, progress);
    const double t8 = mean_ms(rows, ProtocolId::P3, CurveId::BN254, 1000000, 8);
    const double t16 = mean_ms(rows, ProtocolId::P3, CurveId::BN254, 1000000, 16);
    const double gain = 1 - t16 / t8;
    return {gain >= 0.10, "p3 scan 8-bit " + fmt(t8 / 1000, 1) + " s, 16-bit " + fmt(t16 / 1000, 1) + " s (" +
                              fmt(100 * gain, 1) + "% faster)"};
}

// 9. Curve ordering at A = 20000.
Outcome curve_ordering()
{
    BenchConfig cfg;
    cfg.protocols = {ProtocolId::P3};
    cfg.counts = {20000};
    cfg.seeds = {1, 2, 3};
    cfg.curves = {CurveId::BN254, CurveId::BLS12_381};
    const auto rows = bench_scan(cfg, progress);
    const double bn = mean_ms(rows, ProtocolId::P3, CurveId::BN254, 20000);
    const double bls = mean_ms(rows, ProtocolId::P3, CurveId::BLS12_381, 20000);
    return {bn < bls, "p3 mean ms: bn254 " + fmt(bn, 0) + " < bls12-381 " + fmt(bls, 0) +
                          " (no BW6 curve is compiled in)"};
}

// 10. Operation cost ratios.
Outcome microbench()
{
    const auto rows = ops_rows();
    const double mul = op_mean(rows, "ecmul"), pr = op_mean(rows, "pairing"), kk = op_mean(rows, "keccak256");
    return {pr / mul >= 3 && kk < mul, "pairing " + fmt(pr, 1) + " us / ecMUL " + fmt(mul, 1) + " us = " +
                                           fmt(pr / mul) + "; keccak " + fmt(kk, 2) + " us"};
}

// 11. Scan time grows linearly with the registry.
Outcome linearity()
{
    BenchConfig cfg;
    cfg.protocols = {ProtocolId::P3};
    cfg.counts = {20000, 40000};
    cfg.seeds = {1, 2, 3};
    const auto rows = bench_scan(cfg, progress);
    const double a = mean_ms(rows, ProtocolId::P3, CurveId::BN254, 20000);
    const double b = mean_ms(rows, ProtocolId::P3, CurveId::BN254, 40000);
    const double ratio = b / a;
    return {ratio >= 1.5 && ratio <= 2.5,
        "p3 mean ms: A=20000 " + fmt(a, 0) + ", A=40000 " + fmt(b, 0) + " (ratio " + fmt(ratio) + ")"};
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// 12. CLI round trip and byte-identical registry reload.
Outcome cli_round_trip()
{
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("sap-acceptance-" + std::to_string(rng()));
    fs::create_directories(dir);
    const auto run = [](std::vector<std::string> args, std::string& out) {
        std::ostringstream o, e;
        const int code = run_cli(args, o, e);
        out = o.str();
        return code;
    };
    std::string out, meta, address, scanned;
    const auto keys = (dir / "keys.json").string();
    const auto reg = (dir / "registry").string();
    bool ok = run({"keygen", "--proto", "p3", "--seed", "42", "--out", keys}, meta) == 0;
    meta.erase(meta.find_last_not_of('\n') + 1);
    ok = ok && run({"register", "--name", "alice", "--meta", meta, "--registry", reg}, out) == 0;
    ok = ok && run({"send", "--name", "alice", "--proto", "p3", "--tag-variant", "hash", "--tag-bits", "8",
                       "--registry", reg},
                   address) == 0;
    address.erase(address.find_last_not_of('\n') + 1);
    ok = ok && run({"scan", "--keys", keys, "--registry", reg, "--from", "0"}, scanned) == 0;
    const auto lines = std::count(scanned.begin(), scanned.end(), '\n');
    const bool one = lines == 1 && scanned.find("\"address\":\"" + address + "\"") != std::string::npos;

    // Reload both registries and write their contents afresh elsewhere.
    const fs::path copy = dir / "copy";
    const MetaRegistry metas(reg);
    MetaRegistry metas_copy(copy);
    for (const auto& m : metas.lookup("alice"))
        metas_copy.register_meta("alice", m);
    const AnnouncementRegistry anns(reg);
    AnnouncementRegistry anns_copy(copy);
    for (const auto& a : anns.iterate())
        anns_copy.append(a);
    const bool identical = slurp(fs::path(reg) / "metas.json") == slurp(copy / "metas.json") &&
                           slurp(fs::path(reg) / "announcements.jsonl") == slurp(copy / "announcements.jsonl");
    fs::remove_all(dir);
    return {ok && one && identical, std::string("commands ") + (ok ? "ok" : "failed") + ", " +
                                        std::to_string(lines) + " scan result(s)" +
                                        (one ? " matching the sent address" : "") + ", registry reload " +
                                        (identical ? "byte-identical" : "differs")};
}
}  // namespace

int main(int argc, char** argv)
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"correctness suite", correctness},
        {"pairing properties", pairing_properties},
        {"attack demonstrations", attacks},
        {"view-tag statistics", tag_statistics},
        {"stealth key reuse", key_semantics},
        {"precomputation transparency and gain", precomputation},
        {"protocol ordering", protocol_ordering},
        {"tag-width scaling", tag_scaling},
        {"curve ordering", curve_ordering},
        {"microbench ratios", microbench},
        {"scan linearity", linearity},
        {"cli round trip", cli_round_trip},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i)
        only.insert(std::atoi(argv[i]));

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        const int n = static_cast<int>(i + 1);
        if (!only.empty() && !only.contains(n))
            continue;
        const auto t0 = Clock::now();
        Outcome o;
        try
        {
            o = criteria[i].second();
        }
        catch (const std::exception& e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << std::setw(2) << n << ' ' << criteria[i].first << ": "
                  << o.detail << " [" << fmt(seconds_since(t0), 1) << " s]" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
