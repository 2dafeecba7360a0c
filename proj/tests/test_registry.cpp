// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#include "sap/protocols.hpp"
#include "sap/registry.hpp"
#include "support.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace sap;

namespace
{
using S = bn254::Suite;

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Announcement some_announcement(ProtocolId p = ProtocolId::P3)
{
    const auto kb = gen_keys<S>(p, test::rng());
    return send<S>(kb.meta, {TagVariant::HASH, 12}, test::rng()).announcement;
}
}  // namespace

TEST_CASE("announcement JSON")
{
    auto a = some_announcement();
    a.index = 41;
    const auto line = announcement_to_json(a);
    CHECK(line.rfind("{\"idx\":41,\"proto\":\"p3\",\"curve\":\"bn254\",\"R\":\"0x", 0) == 0);
    CHECK(line.find("\"tagbits\":12}") != std::string::npos);
    const auto back = announcement_from_json(line);
    CHECK(back.index == 41);
    CHECK(back.R == a.R);
    CHECK(back.tag == a.tag);
    CHECK_THROWS_AS(announcement_from_json("{\"idx\":1}"), DecodeError);
    CHECK_THROWS_AS(announcement_from_json("not json"), DecodeError);
}

TEST_CASE("announcements are validated on append")
{
    AnnouncementRegistry reg;
    auto a = some_announcement();
    a.R[5] ^= 0xff;  // almost surely not an x-coordinate on the curve any more
    if (a.R[0] & 0x80)
        a.R[0] = 0x01;
    bool rejected = false;
    try
    {
        reg.append(a);
    }
    catch (const DecodeError&)
    {
        rejected = true;
    }
    // Half of all x values are on the curve; either way nothing invalid is stored.
    if (!rejected)
        CHECK(reg.count() == 1);
    auto b = some_announcement(ProtocolId::DKSAP);
    b.R = Bytes{0x05};
    CHECK_THROWS_AS(reg.append(b), DecodeError);
}

TEST_CASE("announcement log persists and reloads identically")
{
    test::TempDir dir;
    std::vector<Announcement> written;
    {
        AnnouncementRegistry reg(dir.path());
        for (const auto p : all_protocols)
        {
            written.push_back(some_announcement(p));
            CHECK(reg.append(written.back()) == written.size() - 1);
        }
    }
    const auto before = slurp(dir.path() / "announcements.jsonl");
    AnnouncementRegistry again(dir.path());
    REQUIRE(again.count() == written.size());
    for (std::size_t i = 0; i < written.size(); ++i)
    {
        CHECK(again.iterate()[i].index == i);
        CHECK(again.iterate()[i].R == written[i].R);
        CHECK(again.iterate()[i].tag == written[i].tag);
    }
    CHECK(again.iterate(3).size() == written.size() - 3);
    CHECK(again.iterate(99).empty());
    // Appending rewrites nothing that was already there.
    again.append(some_announcement());
    CHECK(slurp(dir.path() / "announcements.jsonl").rfind(before, 0) == 0);
}

TEST_CASE("corrupt log lines are reported with their line number")
{
    test::TempDir dir;
    {
        AnnouncementRegistry reg(dir.path());
        reg.append(some_announcement());
        reg.append(some_announcement());
    }
    std::ofstream(dir.path() / "announcements.jsonl", std::ios::app) << "{\"idx\":2,\"proto\":\"p1\"\n";
    try
    {
        AnnouncementRegistry reg(dir.path());
        FAIL("corrupt log accepted");
    }
    catch (const IoError& e)
    {
        CHECK(std::string(e.what()).find("announcements.jsonl:3:") != std::string::npos);
    }
}

TEST_CASE("meta registry")
{
    test::TempDir dir;
    const auto a = encode_meta<S>(gen_keys<S>(ProtocolId::P1, test::rng()).meta);
    const auto b = encode_meta<bls12_381::Suite>(gen_keys<bls12_381::Suite>(ProtocolId::SK, test::rng()).meta);
    {
        MetaRegistry reg(dir.path());
        reg.register_meta("alice", a);
        reg.register_meta("alice", b);
        CHECK_THROWS_AS(reg.register_meta("bob", "sma:p1:bn254:0x01"), DecodeError);
        CHECK(reg.lookup("bob").empty());
    }
    MetaRegistry reg(dir.path());
    CHECK(reg.lookup("alice") == std::vector<std::string>{a, b});
    // Rewriting the reloaded entries reproduces the file byte for byte.
    test::TempDir copy;
    MetaRegistry(copy.path()).register_meta("alice", a);
    MetaRegistry second(copy.path());
    second.register_meta("alice", b);
    CHECK(slurp(copy.path() / "metas.json") == slurp(dir.path() / "metas.json"));
}
