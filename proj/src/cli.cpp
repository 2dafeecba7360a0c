// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#include "sap/cli.hpp"

#include "sap/bench.hpp"
#include "sap/registry.hpp"
#include "sap/scanner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace sap
{
namespace
{
using nlohmann::ordered_json;

std::mt19937_64 make_rng(const std::optional<std::uint64_t>& seed)
{
    if (seed)
        return std::mt19937_64(*seed);
    std::random_device rd;
    std::seed_seq seq{rd(), rd(), rd(), rd()};
    return std::mt19937_64(seq);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

template <class Scalar>
Scalar scalar_from_hex(const std::string& hex, const char* what)
{
    const auto s = Scalar::from_be_bytes(from_hex(hex));
    if (!s || s->is_zero())
        throw DecodeError(std::string("invalid ") + what + " in key file");
    return *s;
}

template <class S>
std::string scalar_hex(const ScalarValue<S>& s)
{
    return std::visit([](const auto& x) { return to_hex(x.to_be_bytes()); }, s);
}

/// Private key file: {"proto", "curve", "k", "v" (or "V" for sk), "meta"}.
template <class S>
ordered_json keys_to_json(const KeyBundle<S>& kb)
{
    ordered_json j;
    j["proto"] = protocol_name(kb.spending.protocol);
    j["curve"] = curve_name(curve_id_of<S>());
    j["k"] = scalar_hex<S>(kb.spending.k);
    std::visit(
        [&](const auto& v) {
            if constexpr (requires { v.to_affine(); })
                j["V"] = to_hex(serialize(v));
            else
                j["v"] = to_hex(v.to_be_bytes());
        },
        kb.viewing.v);
    j["meta"] = encode_meta<S>(kb.meta);
    return j;
}

template <class S>
KeyBundle<S> keys_from_json(const nlohmann::json& j)
{
    using Fr = typename S::Fr;
    const ProtocolId p = parse_protocol(j.at("proto").get<std::string>());
    KeyBundle<S> kb{{p, Fr::one()}, {p, Fr::one()}, decode_meta<S>(j.at("meta").get<std::string>())};
    detail::check_protocol(p, kb.meta.protocol, "meta-address");
    const auto k = j.at("k").get<std::string>();
    const bool secp_keys = p == ProtocolId::P3 || p == ProtocolId::DKSAP;
    if (secp_keys)
        kb.spending.k = scalar_from_hex<SecpScalar>(k, "k");
    else
        kb.spending.k = scalar_from_hex<Fr>(k, "k");
    if (p == ProtocolId::SK)
        kb.viewing.v = deserialize_point<typename S::G2Curve>(from_hex(j.at("V").get<std::string>()));
    else if (p == ProtocolId::DKSAP)
        kb.viewing.v = scalar_from_hex<SecpScalar>(j.at("v").get<std::string>(), "v");
    else
        kb.viewing.v = scalar_from_hex<Fr>(j.at("v").get<std::string>(), "v");
    return kb;
}

int cmd_keygen(const std::string& proto, const std::string& curve, const std::optional<std::uint64_t>& seed,
    const std::string& out_path, std::ostream& out)
{
    const ProtocolId p = parse_protocol(proto);
    auto rng = make_rng(seed);
    const auto [j, meta] = visit_suite(parse_curve(curve), [&]<class S>(S) {
        const auto kb = gen_keys<S>(p, rng);
        return std::pair{keys_to_json<S>(kb), encode_meta<S>(kb.meta)};
    });
    std::ofstream f(out_path, std::ios::trunc);
    f << j.dump(2) << '\n';
    if (!f)
        throw IoError("cannot write " + out_path);
    out << meta << '\n';
    return 0;
}

int cmd_send(const std::string& name, const std::string& proto, const ViewTagConfig& cfg, const std::string& dir,
    const std::optional<std::uint64_t>& seed, std::ostream& out, std::ostream& err)
{
    const ProtocolId p = parse_protocol(proto);
    const MetaRegistry metas(dir);
    const auto candidates = metas.lookup(name);
    // The most recent registration for the requested protocol wins.
    auto it = std::find_if(candidates.rbegin(), candidates.rend(),
        [&](const std::string& m) { return parse_meta_header(m).protocol == p; });
    if (it == candidates.rend())
        throw Error("no " + std::string(protocol_name(p)) + " meta-address registered for '" + name + "'");

    auto rng = make_rng(seed);
    AnnouncementRegistry anns(dir);
    const auto header = parse_meta_header(*it);
    const std::string address = visit_suite(header.curve, [&]<class S>(S) {
        const auto result = send<S>(decode_meta<S>(*it), cfg, rng);
        if (!result.policy.ok)
            err << "warning: " << result.policy.message() << '\n';
        anns.append(result.announcement);
        return address_hex(result.address);
    });
    out << address << '\n';
    return 0;
}

int cmd_scan(const std::string& keys_path, const std::string& dir, std::uint64_t from, const ViewTagConfig& cfg,
    bool precompute, std::ostream& out)
{
    nlohmann::json j;
    try
    {
        j = nlohmann::json::parse(read_file(keys_path));
    }
    catch (const nlohmann::json::exception& e)
    {
        throw DecodeError(std::string("bad key file: ") + e.what());
    }
    const AnnouncementRegistry registry(dir);
    visit_suite(parse_curve(j.at("curve").get<std::string>()), [&]<class S>(S) {
        const auto kb = keys_from_json<S>(j);
        const auto ctx = ScanContext<S>::precompute(kb.viewing, kb.meta, kb.spending, cfg, precompute);
        const auto report = scan(ctx, registry, from);
        for (const auto& r : report.results)
        {
            ordered_json line;
            line["idx"] = r.index;
            line["address"] = address_hex(r.address);
            line["pub"] = to_hex(serialize_element<S>(r.pub));
            if (r.priv)
                line["priv"] = scalar_hex<S>(*r.priv);
            out << line.dump() << '\n';
        }
    });
    return 0;
}

int cmd_bench(const std::string& what, const std::string& config_path, const std::string& out_path,
    std::ostream& out, std::ostream& err)
{
    const auto cfg = BenchConfig::from_json(read_file(config_path));
    std::ofstream file;
    if (!out_path.empty())
    {
        file.open(out_path, std::ios::trunc);
        if (!file)
            throw IoError("cannot write " + out_path);
    }
    std::ostream& csv = out_path.empty() ? out : file;
    if (what == "scan")
    {
        const auto rows = bench_scan(cfg, [&](const std::string& line) { err << line << '\n'; });
        write_scan_csv(csv, rows);
        write_scan_table(err, rows);
    }
    else
    {
        const auto rows = bench_ops(cfg);
        write_ops_csv(csv, rows);
        write_ops_table(err, rows);
    }
    return 0;
}

int cmd_demo_attacks(const std::string& curve, const std::optional<std::uint64_t>& seed, std::ostream& out)
{
    auto rng = make_rng(seed);
    bool all_equal = true;
    visit_suite(parse_curve(curve), [&]<class S>(S) {
        using Fr = typename S::Fr;
        const Fr k = Fr::random_nonzero(rng);
        const Fr v = Fr::random_nonzero(rng);
        const Fr r = Fr::random_nonzero(rng);
        const auto [mine3, theirs3] = demo_attack_ref3<S>(k, v, r);
        out << "symmetric dual-key scheme: stealth key (k*v)*R vs (r*v)*K, computed without k\n"
            << "  recipient:       " << to_hex(serialize(mine3)) << '\n'
            << "  sender + viewer: " << to_hex(serialize(theirs3)) << '\n'
            << "  equal: " << (mine3 == theirs3 ? "yes" : "no") << '\n';
        const auto [mine4, theirs4] = demo_attack_ref4<S>(k, r);
        out << "pairing single-key scheme: stealth key e(R, k*g2) vs e(r*K, g2), computed by the sender\n"
            << "  recipient: " << to_hex(keccak256(serialize(mine4))) << " (keccak256 of the GT value)\n"
            << "  sender:    " << to_hex(keccak256(serialize(theirs4))) << '\n'
            << "  equal: " << (mine4 == theirs4 ? "yes" : "no") << '\n';
        all_equal = mine3 == theirs3 && mine4 == theirs4;
    });
    return all_equal ? 0 : 1;
}
}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Pairing-based stealth address protocols", "sapctl"};
    app.require_subcommand(1);

    std::string proto = "p1", curve = "bn254", out_path, name, meta, dir, keys_path, variant = "hash", config;
    std::optional<std::uint64_t> seed;
    unsigned tag_bits = 8;
    std::uint64_t from = 0;
    bool no_precompute = false;

    auto* keygen = app.add_subcommand("keygen", "generate keys and print the meta-address");
    keygen->add_option("--proto", proto, "p1|p2|p3|sk|dksap")->required();
    keygen->add_option("--curve", curve, "pairing curve suite")->capture_default_str();
    keygen->add_option("--seed", seed, "PRNG seed (random if omitted)");
    keygen->add_option("--out", out_path, "private key file to write")->required();

    auto* reg = app.add_subcommand("register", "add a meta-address under a name");
    reg->add_option("--name", name)->required();
    reg->add_option("--meta", meta, "sma:<proto>:<curve>:<K>[:<V>]")->required();
    reg->add_option("--registry", dir, "registry directory")->required();

    auto* snd = app.add_subcommand("send", "derive a stealth address and publish the announcement");
    snd->add_option("--name", name)->required();
    snd->add_option("--proto", proto)->required();
    snd->add_option("--tag-variant", variant, "xcoord|hash")->capture_default_str();
    snd->add_option("--tag-bits", tag_bits, "view tag width, multiple of 4 up to 64")->capture_default_str();
    snd->add_option("--registry", dir)->required();
    snd->add_option("--seed", seed, "PRNG seed for the ephemeral key (random if omitted)");

    auto* scn = app.add_subcommand("scan", "find announcements addressed to a key file");
    scn->add_option("--keys", keys_path)->required();
    scn->add_option("--registry", dir)->required();
    scn->add_option("--from", from, "first announcement index")->capture_default_str();
    scn->add_option("--tag-variant", variant, "xcoord|hash")->capture_default_str();
    scn->add_flag("--no-precompute", no_precompute, "use plain multiplications and pairings");

    auto* bench = app.add_subcommand("bench", "run benchmarks");
    bench->require_subcommand(1);
    auto* bench_scan_cmd = bench->add_subcommand("scan", "registry scan timings");
    auto* bench_ops_cmd = bench->add_subcommand("ops", "per-operation timings");
    for (auto* b : {bench_scan_cmd, bench_ops_cmd})
    {
        b->add_option("--config", config, "bench config JSON file")->required();
        b->add_option("--out", out_path, "CSV output (stdout if omitted)");
    }

    auto* demo = app.add_subcommand("demo", "demonstrations");
    demo->require_subcommand(1);
    auto* attacks = demo->add_subcommand("attacks", "show the key leaks of two earlier schemes");
    attacks->add_option("--curve", curve)->capture_default_str();
    attacks->add_option("--seed", seed);

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e)
    {
        return app.exit(e, out, err);
    }

    try
    {
        if (*keygen)
            return cmd_keygen(proto, curve, seed, out_path, out);
        if (*reg)
        {
            MetaRegistry(dir).register_meta(name, meta);
            return 0;
        }
        if (*snd)
        {
            const ViewTagConfig cfg{parse_tag_variant(variant), tag_bits};
            cfg.validate();
            return cmd_send(name, proto, cfg, dir, seed, out, err);
        }
        if (*scn)
            return cmd_scan(keys_path, dir, from, {parse_tag_variant(variant), 8}, !no_precompute, out);
        if (*bench_scan_cmd)
            return cmd_bench("scan", config, out_path, out, err);
        if (*bench_ops_cmd)
            return cmd_bench("ops", config, out_path, out, err);
        if (*attacks)
            return cmd_demo_attacks(curve, seed, out);
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace sap
