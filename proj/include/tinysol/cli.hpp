// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tinysol
{
/// Exit codes of the `tinysol` tool.
enum ExitCode : int
{
    exit_ok = 0,
    /// Type errors (check, bound) or failing conformance suites.
    exit_rejected = 1,
    /// Unreadable or unparsable input, bad arguments.
    exit_input = 2,
};

/// Runs the tool with args (without the program name), writing to out/err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
}  // namespace tinysol
