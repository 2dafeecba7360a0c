// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#include "sap/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return sap::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
