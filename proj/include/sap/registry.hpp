// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include "sap/types.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace sap
{
/// One JSON line: {"idx", "proto", "curve", "R", "tag", "tagbits"}.
std::string announcement_to_json(const Announcement& a);

/// Throws DecodeError on malformed records.
Announcement announcement_from_json(std::string_view line);

/// Checks that R decodes into the group its protocol and curve declare.
void validate_announcement(const Announcement& a);

/// Name -> meta-addresses, persisted as metas.json in the registry directory.
/// History is kept: registering never replaces an earlier record.
class MetaRegistry
{
public:
    /// Loads <dir>/metas.json if present.
    explicit MetaRegistry(std::filesystem::path dir);

    /// Validates the encoded meta-address, records it and persists the file.
    void register_meta(const std::string& name, const std::string& encoded_meta);

    /// All meta-addresses registered under `name`, oldest first; empty if unknown.
    std::vector<std::string> lookup(const std::string& name) const;

    const std::filesystem::path& file() const noexcept { return file_; }

private:
    void save() const;

    std::filesystem::path file_;
    std::map<std::string, std::vector<std::string>> entries_;
};

/// Append-only announcement log, optionally backed by <dir>/announcements.jsonl.
class AnnouncementRegistry
{
public:
    /// In-memory only.
    AnnouncementRegistry() = default;

    /// Loads the log, failing with the offending line number on corruption.
    explicit AnnouncementRegistry(std::filesystem::path dir);

    /// Validates, assigns the next index and persists. Returns the index.
    std::uint64_t append(Announcement a);

    /// Like append() but skips validation; for bulk loads of trusted data.
    std::uint64_t append_unchecked(Announcement a);

    std::uint64_t count() const noexcept { return records_.size(); }

    /// Records from..count()-1 in index order.
    std::span<const Announcement> iterate(std::uint64_t from = 0) const noexcept;

    const std::filesystem::path& file() const noexcept { return file_; }

private:
    std::filesystem::path file_;
    std::vector<Announcement> records_;
};

}  // namespace sap
