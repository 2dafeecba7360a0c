// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#include "sap/keys.hpp"

namespace sap
{
namespace detail
{
std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    for (;;)
    {
        const auto pos = s.find(sep);
        out.push_back(s.substr(0, pos));
        if (pos == std::string_view::npos)
            return out;
        s.remove_prefix(pos + 1);
    }
}
}  // namespace detail

MetaHeader parse_meta_header(std::string_view s)
{
    const auto parts = detail::split(s, ':');
    if (parts.size() < 4 || parts[0] != "sma")
        throw DecodeError("meta-address must look like sma:<proto>:<curve>:<K>[:<V>]");
    try
    {
        return {parse_protocol(parts[1]), parse_curve(parts[2])};
    }
    catch (const ConfigError& e)
    {
        throw DecodeError(e.what());
    }
}

}  // namespace sap
