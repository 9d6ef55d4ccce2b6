// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tinysol/cli.hpp"
#include "tinysol/serialize.hpp"
#include "tinysol/types.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tinysol;

namespace
{
struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name)
{
    return std::string{TINYSOL_TEST_DATA} + "/" + name;
}

std::vector<Json> json_lines(const std::string& text)
{
    std::vector<Json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(Json::parse(line));
    return out;
}
}  // namespace

TEST(CliCheck, WellTypedCorpus)
{
    const Outcome o = cli({"check", data("well_typed.tsol")});
    EXPECT_EQ(o.code, exit_ok) << o.out << o.err;
    EXPECT_NE(o.out.find("Bank.pay: declared 120, computed 76, min_gas 123"), std::string::npos) << o.out;
}

TEST(CliCheck, Limitations)
{
    const std::vector<std::pair<std::string, std::string>> cases{
        {"recursion.tsol", "BodyExceedsDeclaredBound"},
        {"mutual_recursion.tsol", "BodyExceedsDeclaredBound"},
        {"bounded_increment.tsol", "TypeMismatch"},
        {"unbounded_guard.tsol", "UnboundedLoopGuard"},
    };
    for (const auto& [file, code] : cases)
    {
        const Outcome o = cli({"check", data(file), "--json"});
        EXPECT_EQ(o.code, exit_rejected) << file;
        const Json report = Json::parse(o.out);
        EXPECT_FALSE(report.at("ok").get<bool>());
        EXPECT_EQ(report.at("diagnostics").at(0).at("code"), code) << file;
    }
}

TEST(CliCheck, ParseErrorsExitTwo)
{
    const Outcome o = cli({"check", data("parse_error.tsol")});
    EXPECT_EQ(o.code, exit_input);
    EXPECT_NE(o.err.find("SyntaxError"), std::string::npos);
    EXPECT_EQ(cli({"check", data("missing.tsol")}).code, exit_input);
    EXPECT_EQ(cli({"frobnicate"}).code, exit_input);
    EXPECT_EQ(cli({}).code, exit_input);
}

TEST(CliRun, ExecExample)
{
    const Outcome o = cli({"run", data("exec_example.tsol"), "--json"});
    ASSERT_EQ(o.code, exit_ok) << o.err;
    const Json j = Json::parse(o.out);
    const Json& r = j.at("receipts").at(0);
    EXPECT_EQ(r.at("outcome"), "Done");
    EXPECT_EQ(r.at("gas_used"), 2);
    EXPECT_EQ(j.at("state").at("A").at("balance"), 98);
    EXPECT_EQ(j.at("state").at("C").at("balance"), 0);
}

TEST(CliRun, UnderfundedGasBurnsOnlyGas)
{
    const Outcome o = cli({"run", data("underfunded_gas.tsol"), "--json"});
    ASSERT_EQ(o.code, exit_ok);
    const Json j = Json::parse(o.out);
    const Json& r = j.at("receipts").at(0);
    EXPECT_EQ(r.at("outcome"), "Exception");
    EXPECT_EQ(r.at("exception"), "oog");
    EXPECT_EQ(r.at("balance_delta"), (Json{{"A", -1}}));
    EXPECT_EQ(j.at("state").at("A").at("balance"), 99);
    EXPECT_EQ(j.at("state").at("C").at("balance"), 0);
}

TEST(CliRun, NoTransactionsPrintsGenesis)
{
    const Outcome o = cli({"run", data("no_txs.tsol")});
    ASSERT_EQ(o.code, exit_ok);
    EXPECT_EQ(o.out, "{\n  \"C\": {\n    \"balance\": 7,\n    \"p\": 3\n  }\n}\n");
}

TEST(CliRun, SnapshotsChain)
{
    const auto dir = std::filesystem::temp_directory_path() / "tinysol_cli_test";
    std::filesystem::create_directories(dir);
    const std::string snap = (dir / "state.json").string();
    ASSERT_EQ(cli({"run", data("exec_example.tsol"), "--snapshot-out", snap}).code, exit_ok);
    const Outcome second = cli({"run", data("exec_example.tsol"), "--snapshot-in", snap, "--json"});
    ASSERT_EQ(second.code, exit_ok);
    EXPECT_EQ(Json::parse(second.out).at("state").at("A").at("balance"), 96);

    std::ofstream(dir / "bad.json") << "{\"A\": ";
    EXPECT_EQ(cli({"run", data("exec_example.tsol"), "--snapshot-in", (dir / "bad.json").string()}).code,
              exit_input);
    std::filesystem::remove_all(dir);
}

TEST(CliTrace, SkipBodiedCall)
{
    const Outcome o = cli({"trace", data("exec_example.tsol"), "--tx", "0"});
    ASSERT_EQ(o.code, exit_ok);
    const auto lines = json_lines(o.out);
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[0].at("rule"), "ss-call");
    EXPECT_EQ(lines[1].at("rule"), "ss-skip");
    EXPECT_EQ(lines[2].at("rule"), "ss-return");
    EXPECT_EQ(lines[2].at("gas_after"), 8);
}

TEST(CliTrace, GasZeroStartsWithOog)
{
    const auto lines = json_lines(cli({"trace", data("gas_zero.tsol"), "--tx", "0"}).out);
    ASSERT_FALSE(lines.empty());
    EXPECT_EQ(lines.front().at("rule"), "ss-oog");
    EXPECT_EQ(lines.front().at("exception"), "oog");
}

TEST(CliTrace, ThrowEndsWithPge)
{
    const auto lines = json_lines(cli({"trace", data("throw.tsol"), "--tx", "0"}).out);
    ASSERT_FALSE(lines.empty());
    EXPECT_EQ(lines.back().at("exception"), "pge");
}

TEST(CliTrace, IndexOutOfRange)
{
    EXPECT_EQ(cli({"trace", data("throw.tsol"), "--tx", "1"}).code, exit_input);
    EXPECT_EQ(cli({"trace", data("throw.tsol"), "--tx", "-1"}).code, exit_input);
}

TEST(CliBound, MethodAndTransaction)
{
    const Outcome m = cli({"bound", data("exec_example.tsol"), "--method", "C.f", "--json"});
    ASSERT_EQ(m.code, exit_ok);
    EXPECT_EQ(Json::parse(m.out).at("min_gas"), 4);

    const Outcome t = cli({"bound", data("exec_example.tsol"), "--tx", "0", "--json"});
    ASSERT_EQ(t.code, exit_ok);
    EXPECT_EQ(Json::parse(t.out).at("bound"), 3);

    EXPECT_EQ(cli({"bound", data("exec_example.tsol")}).code, exit_input);
    EXPECT_EQ(cli({"bound", data("exec_example.tsol"), "--method", "C.zzz"}).code, exit_input);
}

TEST(CliEndToEnd, MinGasNeverRunsOut)
{
    // `check` reports min_gas; running with exactly that much must not oog.
    const Outcome c = cli({"check", data("well_typed.tsol"), "--json"});
    const Json report = Json::parse(c.out);
    const Int pay_gas = int_from_json(report.at("methods").at("Bank").at("pay").at("min_gas"));

    const auto dir = std::filesystem::temp_directory_path() / "tinysol_cli_e2e";
    std::filesystem::create_directories(dir);
    const auto file = dir / "prog.tsol";
    {
        std::ifstream in(data("well_typed.tsol"));
        std::ostringstream text;
        text << in.rdbuf();
        std::string src = text.str();
        src = src.substr(0, src.find("A->Bank"));
        std::ofstream(file) << src << "A->Bank.pay(@Counter, 5):(100, " << pay_gas << ");\n";
    }
    const Outcome r = cli({"run", file.string(), "--json"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    EXPECT_EQ(Json::parse(r.out).at("receipts").at(0).at("outcome"), "Done");
    std::filesystem::remove_all(dir);
}

TEST(CliEnv, IntMaxOverride)
{
    // A smaller INT_MAX narrows send's accepted range, so a large send no
    // longer type checks.
    const auto dir = std::filesystem::temp_directory_path() / "tinysol_cli_env";
    std::filesystem::create_directories(dir);
    const auto file = dir / "send.tsol";
    std::ofstream(file) << "interface I { f()^0_0 : 5 } contract C : I { f() { this.send():1000 } }\n";

    EXPECT_EQ(cli({"check", file.string()}).code, exit_ok);
    const Int saved = int_max();
    ::setenv("TINYSOL_INT_MAX", "999", 1);
    EXPECT_EQ(cli({"check", file.string()}).code, exit_rejected);
    ::setenv("TINYSOL_INT_MAX", "lots", 1);
    EXPECT_EQ(cli({"check", file.string()}).code, exit_input);
    ::unsetenv("TINYSOL_INT_MAX");
    set_int_max(saved);
    std::filesystem::remove_all(dir);
}

TEST(CliConformance, JsonReport)
{
    const Outcome o = cli({"conformance", "--seed", "9", "--cases", "20", "--json"});
    ASSERT_EQ(o.code, exit_ok) << o.out;
    const Json j = Json::parse(o.out);
    EXPECT_TRUE(j.at("ok").get<bool>());
    EXPECT_EQ(j.at("suites").size(), 8u);
}
