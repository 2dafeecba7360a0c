// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#include "sap/bench.hpp"

#include "sap/scanner.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <tuple>

namespace sap
{
namespace
{
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <class T, class F>
std::vector<T> parse_list(const nlohmann::json& j, F f)
{
    std::vector<T> out;
    for (const auto& e : j)
        out.push_back(f(e));
    return out;
}

/// Per-protocol data for one seed: the recipient, its own announcement and
/// a pool of foreign announcements tagged at the widest configured width.
template <class S>
struct Workload
{
    ProtocolId protocol;
    KeyBundle<S> keys;
    Announcement owned;
    StealthAddress owned_address;
    std::vector<Announcement> foreign;
};

template <class S>
Workload<S> make_workload(ProtocolId protocol, const ViewTagConfig& widest, std::uint64_t pool, std::mt19937_64& rng)
{
    Workload<S> w{protocol, gen_keys<S>(protocol, rng), {}, {}, {}};
    const auto out = send<S>(w.keys.meta, widest, rng);
    w.owned = out.announcement;
    w.owned_address = out.address;
    w.foreign.reserve(pool);
    for (std::uint64_t i = 0; i < pool; ++i)
    {
        const auto eph = make_ephemeral<S>(protocol, rng);
        // A fresh random recipient for every foreign announcement.
        const ScalarValue<S> key = protocol == ProtocolId::DKSAP ? ScalarValue<S>{SecpScalar::random_nonzero(rng)}
                                                                 : ScalarValue<S>{S::Fr::random_nonzero(rng)};
        w.foreign.push_back(synthetic_announcement<S>(protocol, eph.r, key, widest));
    }
    return w;
}

template <class S>
void bench_scan_curve(const BenchConfig& cfg, std::vector<ScanRow>& rows, const BenchLog& log)
{
    const std::uint64_t max_count = *std::max_element(cfg.counts.begin(), cfg.counts.end());
    const CurveId curve = curve_id_of<S>();

    for (const auto seed : cfg.seeds)
        for (const auto variant : {TagVariant::HASH, TagVariant::XCOORD})
        {
            unsigned widest_bits = 0;
            bool used = false;
            for (const auto& t : cfg.tags)
                if (t.variant == variant)
                {
                    used = true;
                    widest_bits = std::max(widest_bits, t.bits);
                }
            if (!used)
                continue;
            const ViewTagConfig widest{variant, widest_bits};

            std::vector<Workload<S>> loads;
            for (const auto protocol : cfg.protocols)
            {
                if (protocol == ProtocolId::SK && variant == TagVariant::XCOORD)
                {
                    if (log)
                        log("skipping sk with xcoord tags (unsupported)");
                    continue;
                }
                std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(protocol) * 977 +
                                    static_cast<std::uint64_t>(curve));
                loads.push_back(make_workload<S>(protocol, widest, max_count - 1, rng));
            }

            std::mt19937_64 pos_rng(seed);
            for (const auto count : cfg.counts)
            {
                const std::uint64_t owned_pos = pos_rng() % count;
                for (const auto& tag : cfg.tags)
                {
                    if (tag.variant != variant)
                        continue;
                    // Protocols run back to back on the same seed so drift in
                    // machine speed hits them alike.
                    for (const auto& w : loads)
                    {
                        std::vector<Announcement> anns;
                        anns.reserve(count);
                        for (std::uint64_t i = 0; i + 1 < count; ++i)
                        {
                            if (i == owned_pos)
                                anns.push_back(w.owned);
                            anns.push_back(w.foreign[i]);
                        }
                        if (owned_pos == count - 1)
                            anns.push_back(w.owned);
                        for (std::uint64_t i = 0; i < anns.size(); ++i)
                        {
                            anns[i].index = i;
                            anns[i].tag = anns[i].tag.truncate(tag.bits);
                        }

                        const auto ctx = ScanContext<S>::precompute(
                            w.keys.viewing, w.keys.meta, w.keys.spending, tag, cfg.precompute);
                        const auto t0 = Clock::now();
                        const auto report = scan(ctx, std::span<const Announcement>(anns));
                        const double elapsed = ms_since(t0);

                        std::uint64_t true_matches = 0;
                        for (const auto& r : report.results)
                            if (r.index == owned_pos && r.address == w.owned_address)
                                ++true_matches;
                        rows.push_back({w.protocol, curve, count, tag, seed, elapsed,
                            static_cast<double>(report.stats.tag_matches), static_cast<double>(true_matches)});
                        if (log)
                        {
                            std::ostringstream s;
                            s << protocol_name(w.protocol) << ' ' << curve_name(curve) << " A=" << count << ' '
                              << tag_variant_name(tag.variant) << '/' << tag.bits << " seed=" << seed << ": "
                              << std::fixed << std::setprecision(1) << elapsed << " ms, "
                              << report.stats.tag_matches << " tag matches";
                            log(s.str());
                        }
                    }
                }
            }
        }
}

std::vector<ScanRow> with_means(std::vector<ScanRow> rows)
{
    using Key = std::tuple<CurveId, ProtocolId, std::uint64_t, TagVariant, unsigned>;
    std::map<Key, std::vector<const ScanRow*>> groups;
    std::vector<Key> order;
    for (const auto& r : rows)
    {
        const Key k{r.curve, r.protocol, r.count, r.tag.variant, r.tag.bits};
        if (!groups.contains(k))
            order.push_back(k);
        groups[k].push_back(&r);
    }
    std::vector<ScanRow> means;
    for (const auto& k : order)
    {
        const auto& g = groups[k];
        ScanRow m = *g.front();
        m.seed.reset();
        m.scan_ms = m.tag_matches = m.true_matches = 0;
        for (const auto* r : g)
        {
            m.scan_ms += r->scan_ms;
            m.tag_matches += r->tag_matches;
            m.true_matches += r->true_matches;
        }
        const double n = static_cast<double>(g.size());
        m.scan_ms /= n;
        m.tag_matches /= n;
        m.true_matches /= n;
        means.push_back(m);
    }
    rows.insert(rows.end(), means.begin(), means.end());
    return rows;
}

template <class S>
void bench_ops_curve(const BenchConfig& cfg, std::vector<OpRow>& rows)
{
    using Fr = typename S::Fr;
    using G1 = typename S::G1;
    using G2 = typename S::G2;
    using G = Generators<S>;
    const unsigned n = cfg.repetitions;
    std::mt19937_64 rng(cfg.seeds.front());

    std::vector<Fr> scalars;
    std::vector<G1> ps;
    std::vector<G2> qs;
    for (unsigned i = 0; i < n; ++i)
    {
        scalars.push_back(Fr::random_nonzero(rng));
        ps.push_back(G::g1_table().mul(Fr::random_nonzero(rng)));
        qs.push_back(G::g2().mul(Fr::random_nonzero(rng)));
    }

    double t_mul_pre = 0, t_mul = 0, t_mul_naive = 0;
    double t_pair_pre = 0, t_pair = 0, t_pair_naive = 0, t_keccak = 0;
    G1 sink1;
    Gt<S> sink_t;
    std::uint8_t sink_b = 0;
    // Precomputed and naive variants alternate per repetition so that slow
    // drift in machine speed affects both equally.
    for (unsigned i = 0; i < n; ++i)
    {
        auto t0 = Clock::now();
        const FixedScalarMul<typename S::G1Curve> fixed(scalars[i]);
        t_mul_pre += ms_since(t0);

        t0 = Clock::now();
        sink1 += fixed(ps[i]);
        t_mul += ms_since(t0);

        t0 = Clock::now();
        sink1 += ps[i].mul(scalars[i]);
        t_mul_naive += ms_since(t0);

        t0 = Clock::now();
        const G2Prepared<S> prepared(qs[i]);
        t_pair_pre += ms_since(t0);

        t0 = Clock::now();
        sink_t *= pair<S>(ps[i], prepared);
        t_pair += ms_since(t0);

        t0 = Clock::now();
        sink_t *= pair<S>(ps[i], qs[i]);
        t_pair_naive += ms_since(t0);

        const auto enc = serialize(ps[i]);
        t0 = Clock::now();
        sink_b ^= keccak256(enc)[0];
        t_keccak += ms_since(t0);
    }
    // Keep the results observable so the work is not optimised away.
    if (sink1.is_infinity() && sink_t.is_identity() && sink_b == 0xff)
        rows.push_back({curve_id_of<S>(), "unreachable", 0, 0});

    const CurveId c = curve_id_of<S>();
    const double k = 1000.0 / n;
    rows.push_back({c, "ecmul_precompute", n, t_mul_pre * k});
    rows.push_back({c, "ecmul", n, t_mul * k});
    rows.push_back({c, "ecmul_naive", n, t_mul_naive * k});
    rows.push_back({c, "pairing_precompute", n, t_pair_pre * k});
    rows.push_back({c, "pairing", n, t_pair * k});
    rows.push_back({c, "pairing_naive", n, t_pair_naive * k});
    rows.push_back({c, "keccak256", n, t_keccak * k});
}
}  // namespace

BenchConfig BenchConfig::from_json(std::string_view text)
{
    BenchConfig c;
    try
    {
        const auto j = nlohmann::json::parse(text);
        if (!j.is_object())
            throw ConfigError("bench config must be a JSON object");
        for (const auto& [key, _] : j.items())
            if (key != "protocols" && key != "counts" && key != "tags" && key != "curves" && key != "seeds" &&
                key != "repetitions" && key != "precompute")
                throw ConfigError("unknown bench config key '" + key + "'");
        if (j.contains("protocols"))
            c.protocols = parse_list<ProtocolId>(j["protocols"], [](const auto& e) {
                return parse_protocol(e.template get<std::string>());
            });
        if (j.contains("counts"))
            c.counts = j["counts"].get<std::vector<std::uint64_t>>();
        if (j.contains("tags"))
            c.tags = parse_list<ViewTagConfig>(j["tags"], [](const auto& e) {
                return ViewTagConfig{parse_tag_variant(e.value("variant", std::string("hash"))),
                    e.at("bits").template get<unsigned>()};
            });
        if (j.contains("curves"))
            c.curves = parse_list<CurveId>(j["curves"], [](const auto& e) {
                return parse_curve(e.template get<std::string>());
            });
        if (j.contains("seeds"))
            c.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
        if (j.contains("repetitions"))
            c.repetitions = j["repetitions"].get<unsigned>();
        if (j.contains("precompute"))
            c.precompute = j["precompute"].get<bool>();
    }
    catch (const nlohmann::json::exception& e)
    {
        throw ConfigError(std::string("bad bench config: ") + e.what());
    }
    c.validate();
    return c;
}

void BenchConfig::validate() const
{
    if (protocols.empty())
        throw ConfigError("bench config: protocols must not be empty");
    if (counts.empty() || std::find(counts.begin(), counts.end(), 0U) != counts.end())
        throw ConfigError("bench config: counts must be nonempty and each at least 1");
    if (tags.empty())
        throw ConfigError("bench config: tags must not be empty");
    for (const auto& t : tags)
        t.validate();
    if (curves.empty())
        throw ConfigError("bench config: curves must not be empty");
    for (const auto c : curves)
        if (!curve_available(c))
            throw ConfigError("bench config: curve " + std::string(curve_name(c)) + " is not compiled in");
    if (seeds.empty())
        throw ConfigError("bench config: seeds must not be empty");
    if (repetitions == 0)
        throw ConfigError("bench config: repetitions must be at least 1");
}

std::vector<ScanRow> bench_scan(const BenchConfig& cfg, const BenchLog& log)
{
    cfg.validate();
    std::vector<ScanRow> rows;
    for (const auto curve : cfg.curves)
        visit_suite(curve, [&]<class S>(S) { bench_scan_curve<S>(cfg, rows, log); });
    return with_means(std::move(rows));
}

std::vector<OpRow> bench_ops(const BenchConfig& cfg)
{
    cfg.validate();
    std::vector<OpRow> rows;
    for (const auto curve : cfg.curves)
        visit_suite(curve, [&]<class S>(S) { bench_ops_curve<S>(cfg, rows); });
    return rows;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows)
{
    out << "proto,curve,A,tag_variant,tag_bits,seed,scan_ms,tag_matches,true_matches\n";
    for (const auto& r : rows)
    {
        out << protocol_name(r.protocol) << ',' << curve_name(r.curve) << ',' << r.count << ','
            << tag_variant_name(r.tag.variant) << ',' << r.tag.bits << ',';
        if (r.seed)
            out << *r.seed;
        else
            out << "mean";
        out << ',' << std::fixed << std::setprecision(3) << r.scan_ms << ',' << std::setprecision(r.seed ? 0 : 2)
            << r.tag_matches << ',' << r.true_matches << '\n';
        out.unsetf(std::ios::fixed);
    }
}

void write_ops_csv(std::ostream& out, const std::vector<OpRow>& rows)
{
    out << "curve,op,repetitions,mean_us\n";
    for (const auto& r : rows)
        out << curve_name(r.curve) << ',' << r.op << ',' << r.repetitions << ',' << std::fixed
            << std::setprecision(3) << r.mean_us << std::defaultfloat << '\n';
}

void write_scan_table(std::ostream& out, const std::vector<ScanRow>& rows)
{
    out << std::left << std::setw(7) << "proto" << std::setw(11) << "curve" << std::right << std::setw(9) << "A"
        << std::setw(10) << "tag" << std::setw(12) << "scan ms" << std::setw(13) << "tag matches"
        << std::setw(14) << "true matches" << '\n';
    for (const auto& r : rows)
    {
        if (r.seed)
            continue;
        std::ostringstream tag;
        tag << tag_variant_name(r.tag.variant) << '/' << r.tag.bits;
        out << std::left << std::setw(7) << protocol_name(r.protocol) << std::setw(11) << curve_name(r.curve)
            << std::right << std::setw(9) << r.count << std::setw(10) << tag.str() << std::fixed
            << std::setprecision(1) << std::setw(12) << r.scan_ms << std::setw(13) << r.tag_matches
            << std::setw(14) << r.true_matches << std::defaultfloat << '\n';
    }
}

void write_ops_table(std::ostream& out, const std::vector<OpRow>& rows)
{
    out << std::left << std::setw(11) << "curve" << std::setw(20) << "operation" << std::right << std::setw(12)
        << "mean us" << '\n';
    for (const auto& r : rows)
        out << std::left << std::setw(11) << curve_name(r.curve) << std::setw(20) << r.op << std::right
            << std::fixed << std::setprecision(2) << std::setw(12) << r.mean_us << std::defaultfloat << '\n';
}

}  // namespace sap
