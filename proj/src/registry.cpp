// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#include "sap/registry.hpp"

#include "sap/hex.hpp"
#include "sap/keys.hpp"
#include "sap/protocols.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace sap
{
namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string announcement_to_json(const Announcement& a)
{
    ordered_json j;
    j["idx"] = a.index;
    j["proto"] = protocol_name(a.protocol);
    j["curve"] = curve_name(a.curve);
    j["R"] = to_hex(a.R);
    j["tag"] = a.tag.hex();
    j["tagbits"] = a.tag.bits;
    return j.dump();
}

Announcement announcement_from_json(std::string_view line)
{
    try
    {
        const auto j = nlohmann::json::parse(line);
        Announcement a;
        a.index = j.at("idx").get<std::uint64_t>();
        a.protocol = parse_protocol(j.at("proto").get<std::string>());
        a.curve = parse_curve(j.at("curve").get<std::string>());
        a.R = from_hex(j.at("R").get<std::string>());
        a.tag = ViewTag::from_hex(j.at("tag").get<std::string>(), j.at("tagbits").get<unsigned>());
        return a;
    }
    catch (const nlohmann::json::exception& e)
    {
        throw DecodeError(std::string("malformed announcement: ") + e.what());
    }
    catch (const ConfigError& e)
    {
        throw DecodeError(std::string("malformed announcement: ") + e.what());
    }
}

void validate_announcement(const Announcement& a)
{
    if (a.tag.bits > 64 || a.tag.bits % 4 != 0)
        throw DecodeError("tagbits must be a multiple of 4 up to 64");
    visit_suite(a.curve, [&]<class S>(S) { decode_ephemeral<S>(a.protocol, a.R); });
}

MetaRegistry::MetaRegistry(fs::path dir) : file_(std::move(dir) / "metas.json")
{
    if (!fs::exists(file_))
        return;
    std::ifstream in(file_);
    if (!in)
        throw IoError("cannot read " + file_.string());
    try
    {
        const auto j = nlohmann::json::parse(in);
        for (const auto& [name, records] : j.items())
            for (const auto& r : records)
            {
                std::string s = "sma:" + r.at("proto").get<std::string>() + ":" + r.at("curve").get<std::string>() +
                                ":" + r.at("K").get<std::string>();
                if (r.contains("V"))
                    s += ":" + r.at("V").get<std::string>();
                entries_[name].push_back(std::move(s));
            }
    }
    catch (const nlohmann::json::exception& e)
    {
        throw IoError("corrupt " + file_.string() + ": " + e.what());
    }
}

void MetaRegistry::register_meta(const std::string& name, const std::string& encoded_meta)
{
    const auto header = parse_meta_header(encoded_meta);
    // Round-trip through the typed decoder so only canonical, valid keys are stored.
    const std::string canonical = visit_suite(header.curve, [&]<class S>(S) {
        return encode_meta<S>(decode_meta<S>(encoded_meta));
    });
    entries_[name].push_back(canonical);
    save();
}

std::vector<std::string> MetaRegistry::lookup(const std::string& name) const
{
    const auto it = entries_.find(name);
    return it == entries_.end() ? std::vector<std::string>{} : it->second;
}

void MetaRegistry::save() const
{
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [name, metas] : entries_)
    {
        auto& arr = j[name] = nlohmann::json::array();
        for (const auto& m : metas)
        {
            const auto parts = detail::split(m, ':');
            nlohmann::json r;
            r["proto"] = parts[1];
            r["curve"] = parts[2];
            r["K"] = parts[3];
            if (parts.size() > 4)
                r["V"] = parts[4];
            arr.push_back(std::move(r));
        }
    }
    fs::create_directories(file_.parent_path());
    const fs::path tmp = file_.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << j.dump(2) << '\n';
        if (!out)
            throw IoError("cannot write " + tmp.string());
    }
    fs::rename(tmp, file_);
}

AnnouncementRegistry::AnnouncementRegistry(fs::path dir) : file_(std::move(dir) / "announcements.jsonl")
{
    if (!fs::exists(file_))
        return;
    std::ifstream in(file_);
    if (!in)
        throw IoError("cannot read " + file_.string());
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        if (line.empty())
            continue;
        try
        {
            auto a = announcement_from_json(line);
            if (a.index != records_.size())
                throw DecodeError("index " + std::to_string(a.index) + " out of sequence");
            validate_announcement(a);
            records_.push_back(std::move(a));
        }
        catch (const Error& e)
        {
            throw IoError(file_.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
}

std::uint64_t AnnouncementRegistry::append(Announcement a)
{
    validate_announcement(a);
    return append_unchecked(std::move(a));
}

std::uint64_t AnnouncementRegistry::append_unchecked(Announcement a)
{
    a.index = records_.size();
    if (!file_.empty())
    {
        fs::create_directories(file_.parent_path());
        std::ofstream out(file_, std::ios::app);
        out << announcement_to_json(a) << '\n';
        if (!out)
            throw IoError("cannot append to " + file_.string());
    }
    records_.push_back(std::move(a));
    return records_.back().index;
}

std::span<const Announcement> AnnouncementRegistry::iterate(std::uint64_t from) const noexcept
{
    if (from >= records_.size())
        return {};
    return std::span<const Announcement>(records_).subspan(from);
}

}  // namespace sap
