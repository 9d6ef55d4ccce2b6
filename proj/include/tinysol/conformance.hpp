// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tinysol/chain.hpp"
#include "tinysol/machine.hpp"
#include "tinysol/typesys.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>

namespace tinysol
{
/// Parameter names of method f at the address e evaluates to, if any.
using ParamResolver =
    std::function<std::optional<std::vector<std::string>>(const Expr& target, const std::string& method)>;

/// Resolves receivers by evaluating them in the given environments.
ParamResolver table_resolver(const MethodTable& table, const State& state, const VarEnv& vars);

/// Local variable types in force after the top frame of q is executed:
/// a saved environment brings back its recorded types, a declaration adds
/// its variable, a scope end removes the newest one, a call replaces
/// everything with this/sender/value/parameters. Other frames keep delta.
/// Throws Error(ExtractionUndefined) when a scope end does not match the
/// newest variable or a call target cannot be typed and resolved.
VarTypes extract(const TypeEnv& g, const VarTypes& delta, const Stack& q, const ParamResolver& resolve);

/// Step bound of the whole stack. Throws typing errors and ExtractionUndefined.
Int type_stack(const TypeEnv& g, const VarTypes& delta, const Stack& q);

struct ConfigTyping
{
    bool ok = false;
    /// Stack bound when the stack typed.
    Int n;
    std::string reason;
};

/// Stack types at n, state and variables agree, and n < gas.
ConfigTyping type_config(const TypeEnv& g, const VarTypes& delta, const Config& c);

enum class Verdict
{
    Passed,
    /// The start configuration was not well typed; nothing to check.
    Skipped,
    Counterexample,
};

std::string_view to_string(Verdict v) noexcept;

struct ReductionCheck
{
    Verdict verdict = Verdict::Passed;
    std::size_t steps = 0;
    Int initial_bound;
    Int gas_used;
    std::optional<Halt> halt;
    std::string detail;
};

/// Runs c for at most max_steps, re-typing every successor under the
/// extracted environment. Also checks that no step pushes exc(oog) and that
/// the stack bound drops by at least one on every gas-paying step.
ReductionCheck check_subject_reduction(const TypeEnv& g, const MethodTable& table, const Config& c,
                                       const VarTypes& delta, std::size_t max_steps = 1000000);

struct GenConfig
{
    int max_depth = 3;
    int max_loop_bound = 3;
    int max_methods = 4;
    std::uint64_t seed = 1;
    /// Largest step bound accepted for a method body.
    int max_body_bound = 400;
};

struct GeneratedProgram
{
    /// Interfaces, contracts, and exactly one transaction.
    Blockchain program;
    TypeEnv env;
    Int bound;
    Int min_gas;
};

/// Random well-typed program: recursion-free (methods only call methods
/// generated before them), bounded loop guards, exact interfaces for every
/// call except `send`. The transaction gets min_gas or a little more.
GeneratedProgram generate_program(const GenConfig& cfg);

/// Variant of a generated program whose transaction is likely to fail:
/// too little gas, an appended throw, a division by zero, or an overdraft.
Blockchain mutate_failing(const GeneratedProgram& p, std::mt19937_64& rng);

/// Every rule whose premises hold in c, each checked on its own.
std::vector<Rule> applicable_rules(const MethodTable& table, const Config& c);

struct SuiteResult
{
    std::string name;
    std::size_t cases = 0;
    std::size_t passed = 0;
    std::size_t skipped = 0;
    std::vector<std::uint64_t> failing_seeds;
    std::string first_failure;

    bool ok() const noexcept { return failing_seeds.empty() && passed > 0; }
};

Json to_json(const SuiteResult& r);

/// Case i uses seed `seed + i`, so a failing seed replays with cases = 1.
SuiteResult subject_reduction_suite(std::uint64_t seed, std::size_t cases);
/// Gas used within the bound, and min_gas never runs out.
SuiteResult gas_bound_suite(std::uint64_t seed, std::size_t cases);
/// Failed transactions leave the pre-state minus the gas burn.
SuiteResult rollback_suite(std::uint64_t seed, std::size_t failing_cases);
/// Exactly one rule per step, gas drops by 0 or 1, balances are conserved by
/// steps and drop by the gas burn per transaction. `cases` counts steps.
SuiteResult determinism_suite(std::uint64_t seed, std::size_t steps);
SuiteResult strengthening_suite(std::uint64_t seed, std::size_t cases);
SuiteResult update_vars_suite(std::uint64_t seed, std::size_t cases);
SuiteResult update_fields_suite(std::uint64_t seed, std::size_t cases);
SuiteResult expression_safety_suite(std::uint64_t seed, std::size_t cases);

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, std::size_t cases);
}  // namespace tinysol
