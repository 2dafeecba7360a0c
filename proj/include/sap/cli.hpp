// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sap
{
/// The sapctl command line. `args` excludes the program name. Returns the exit code.
///
///   keygen   --proto <p> [--curve <c>] [--seed <s>] --out <file>
///   register --name <n> --meta <sma:...> --registry <dir>
///   send     --name <n> --proto <p> [--tag-variant xcoord|hash] [--tag-bits <b>] --registry <dir> [--seed <s>]
///   scan     --keys <file> --registry <dir> [--from <idx>] [--tag-variant ...] [--no-precompute]
///   bench    scan|ops --config <json> [--out <csv>]
///   demo     attacks [--curve <c>] [--seed <s>]
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sap
