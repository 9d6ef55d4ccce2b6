// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "tinysol/cli.hpp"
#include "tinysol/conformance.hpp"
#include "tinysol/parser.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>

using namespace tinysol;

namespace
{
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t seed = 1;
constexpr std::size_t programs = 1000;
constexpr std::size_t failing_txs = 200;
constexpr std::size_t machine_steps = 100000;
constexpr std::size_t lemma_instances = 1000;
constexpr double worked_example_ms = 1.0;
constexpr double suite_seconds = 60.0;

int failures = 0;

void report(int n, const std::string& name, bool ok, const std::string& detail)
{
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << " " << name << ": " << detail << std::endl;
    if (!ok)
        ++failures;
}

double seconds_since(Clock::time_point t)
{
    return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string summary(const SuiteResult& r)
{
    std::ostringstream os;
    os << r.passed << "/" << r.cases << " passed";
    if (r.skipped)
        os << ", " << r.skipped << " skipped";
    if (!r.failing_seeds.empty())
        os << ", " << r.failing_seeds.size() << " failing (" << r.first_failure << ")";
    return os.str();
}

void worked_example()
{
    const TypeEnv g = make_type_env(parse_program("interface I { f(int)^10_1 : 20 }"));
    const VarTypes delta{{"x", BaseType::range(1, 5)}, {"y", BaseType::iface("I")}};
    const Stm loop = parse_statement("for x do y.f(x):1");
    const Stm call = parse_statement("y.f(x):1");

    // Hand arithmetic: a call costs the callee bound plus two, the loop runs
    // at most u = 5 times.
    const long call_oracle = 20 + 2;
    const long loop_oracle = std::max(1L, 5 * (call_oracle + 1) + 1);

    type_stmt(g, delta, loop);
    const auto t = Clock::now();
    const Int loop_bound = type_stmt(g, delta, loop);
    const double ms = seconds_since(t) * 1000.0;
    const Int call_bound = type_stmt(g, delta, call);

    std::ostringstream os;
    os << "loop " << loop_bound << " (expected " << loop_oracle << "), call " << call_bound << " (expected "
       << call_oracle << "), " << ms << " ms";
    report(1, "worked example", loop_bound == loop_oracle && call_bound == call_oracle && ms < worked_example_ms,
           os.str());
}

void interval_typing()
{
    const TypeEnv g;
    const BaseType t = type_expr(g, {{"x", BaseType::range(2, 5)}}, parse_expression("10 - x"));
    long lo = 1000, hi = -1000;
    for (long x = 2; x <= 5; ++x)
    {
        lo = std::min(lo, 10 - x);
        hi = std::max(hi, 10 - x);
    }
    report(2, "interval typing", t == BaseType::range(lo, hi),
           "10 - x : " + to_string(t) + " (expected int[" + std::to_string(lo) + ".." + std::to_string(hi) + "])");
}

void subtyping()
{
    const TypeEnv g;
    struct Golden
    {
        std::string what;
        bool got;
        bool expected;
    };
    const MethodType narrow{{}, 2, 5, 3};
    const MethodType wide{{}, 1, 10, 7};
    const std::vector<Golden> goldens{
        {"int[1..1] <= int[1..10]", subtype(g, BaseType::range(1, 1), BaseType::range(1, 10)), true},
        {"int[1..5] <= int", subtype(g, BaseType::range(1, 5), BaseType::integer()), true},
        {"int <= int[1..5]", subtype(g, BaseType::integer(), BaseType::range(1, 5)), false},
        {"()^5_2:3 <= ()^10_1:7", subtype(g, narrow, wide), true},
        {"()^10_1:7 <= ()^5_2:3", subtype(g, wide, narrow), false},
        {"()^5_2:8 <= ()^10_1:7", subtype(g, MethodType{{}, 2, 5, 8}, wide), false},
        {"()^11_2:3 <= ()^10_1:7", subtype(g, MethodType{{}, 2, 11, 3}, wide), false},
        {"()^5_0:3 <= ()^10_1:7", subtype(g, MethodType{{}, 0, 5, 3}, wide), false},
    };
    int wrong = 0;
    std::string first;
    for (const auto& gold : goldens)
        if (gold.got != gold.expected)
        {
            if (!wrong++)
                first = gold.what;
        }
    report(3, "subtyping goldens", wrong == 0,
           std::to_string(goldens.size() - static_cast<std::size_t>(wrong)) + "/" + std::to_string(goldens.size()) +
               " match" + (first.empty() ? "" : ", first mismatch " + first));
}

void subject_reduction()
{
    const auto t = Clock::now();
    const SuiteResult r = subject_reduction_suite(seed, programs);
    const double s = seconds_since(t);
    report(4, "subject reduction", r.ok() && r.passed >= programs && s < suite_seconds,
           summary(r) + ", " + std::to_string(s) + " s");
}

void gas_bound()
{
    const SuiteResult r = gas_bound_suite(seed, programs);
    report(5, "gas-bound soundness", r.ok() && r.passed >= programs, summary(r));
}

void rollback()
{
    const SuiteResult r = rollback_suite(seed, failing_txs);
    report(6, "rollback exactness", r.ok() && r.passed >= failing_txs, summary(r));
}

void determinism()
{
    const SuiteResult r = determinism_suite(seed, machine_steps);
    report(7, "determinism and gas monotonicity", r.ok() && r.passed >= machine_steps, summary(r) + " steps");
}

void limitations()
{
    const std::vector<std::pair<std::string, std::string>> cases{
        {"recursion.tsol", "BodyExceedsDeclaredBound"},
        {"mutual_recursion.tsol", "BodyExceedsDeclaredBound"},
        {"bounded_increment.tsol", "TypeMismatch"},
        {"unbounded_guard.tsol", "UnboundedLoopGuard"},
    };
    int rejected = 0;
    std::string detail;
    for (const auto& [file, code] : cases)
    {
        std::ostringstream out, err;
        const int exit = run_cli({"check", std::string{TINYSOL_TEST_DATA} + "/" + file, "--json"}, out, err);
        bool ok = false;
        if (exit == exit_rejected)
        {
            const Json diags = Json::parse(out.str()).at("diagnostics");
            ok = std::any_of(diags.begin(), diags.end(), [&](const Json& d) { return d.at("code") == code; });
        }
        rejected += ok;
        detail += (detail.empty() ? "" : ", ") + file + (ok ? " rejected" : " NOT rejected") + " (" + code + ")";
    }
    report(8, "limitation negatives", rejected == static_cast<int>(cases.size()), detail);
}

void lemmas()
{
    const std::vector<SuiteResult> suites{
        strengthening_suite(seed, lemma_instances),
        update_vars_suite(seed, lemma_instances),
        update_fields_suite(seed, lemma_instances),
        expression_safety_suite(seed, lemma_instances),
    };
    bool ok = true;
    std::string detail;
    for (const auto& r : suites)
    {
        ok = ok && r.ok() && r.passed >= lemma_instances;
        detail += (detail.empty() ? "" : "; ") + r.name + " " + summary(r);
    }
    report(9, "lemma suites", ok, detail);
}
}  // namespace

int main()
{
    worked_example();
    interval_typing();
    subtyping();
    subject_reduction();
    gas_bound();
    rollback();
    determinism();
    limitations();
    lemmas();
    std::cout << (failures ? "FAILED " + std::to_string(failures) + " criteria" : "all criteria passed") << std::endl;
    return failures ? 1 : 0;
}
