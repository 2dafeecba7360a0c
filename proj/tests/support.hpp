// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include "sap/hex.hpp"

#include <filesystem>
#include <random>
#include <string>

namespace sap::test
{
inline std::mt19937_64& rng()
{
    static std::mt19937_64 r(0x5eed);
    return r;
}

/// Scratch directory removed on scope exit.
class TempDir
{
public:
    TempDir()
    {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() / ("sap-test-" + std::to_string(rd()) + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir()
    {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const noexcept { return path_; }
    std::string str() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

/// Reduces a hex integer (odd length allowed) into the scalar field.
template <class Scalar>
Scalar scalar(std::string_view hex)
{
    if (hex.starts_with("0x"))
        hex.remove_prefix(2);
    std::string even(hex.size() % 2, '0');
    even += hex;
    return Scalar::from_be_bytes_reduce(from_hex(even));
}

}  // namespace sap::test
