// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tinysol/cli.hpp"

#include "tinysol/chain.hpp"
#include "tinysol/conformance.hpp"
#include "tinysol/parser.hpp"
#include "tinysol/serialize.hpp"
#include "tinysol/typesys.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace tinysol
{
namespace
{
struct InputError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string where(const Error& e)
{
    if (!e.loc())
        return "";
    return std::to_string(e.loc()->line) + ":" + std::to_string(e.loc()->column) + ": ";
}

void print_diagnostic(std::ostream& os, const Diagnostic& d)
{
    os << "error: " << to_string(d.code);
    if (!d.contract.empty())
        os << " in " << d.contract << (d.member.empty() ? "" : "." + d.member);
    if (d.loc)
        os << " at " << d.loc->line << ":" << d.loc->column;
    os << ": " << d.message << "\n";
}

std::size_t tx_index(const Blockchain& b, long long n)
{
    if (n < 0 || static_cast<std::size_t>(n) >= b.txs.size())
        throw InputError("transaction index " + std::to_string(n) + " out of range (" +
                         std::to_string(b.txs.size()) + " transactions)");
    return static_cast<std::size_t>(n);
}

struct Options
{
    std::string file;
    bool json = false;
    std::string snapshot_in;
    std::string snapshot_out;
    long long tx = -1;
    std::string method;
    std::uint64_t seed = 1;
    std::size_t cases = 1000;
};

int cmd_check(const Options& o, std::ostream& out)
{
    const Blockchain b = parse_program(read_file(o.file));
    const CheckReport report = check_program(b);
    if (o.json)
    {
        out << to_json(report).dump(2) << "\n";
        return report.ok() ? exit_ok : exit_rejected;
    }
    for (const auto& [contract, methods] : report.methods)
        for (const auto& [name, m] : methods)
            out << contract << "." << name << ": declared " << m.declared_n << ", computed " << m.computed_n
                << ", min_gas " << m.min_gas << "\n";
    for (const auto& d : report.diagnostics)
        print_diagnostic(out, d);
    out << (report.ok() ? "ok" : "rejected") << "\n";
    return report.ok() ? exit_ok : exit_rejected;
}

int cmd_run(const Options& o, std::ostream& out)
{
    const Blockchain b = parse_program(read_file(o.file));
    std::optional<State> initial;
    if (!o.snapshot_in.empty())
        initial = restore(read_file(o.snapshot_in));
    const ChainResult result = run_blockchain(b, initial);

    if (!o.snapshot_out.empty())
    {
        std::ofstream snap(o.snapshot_out, std::ios::binary);
        if (!snap)
            throw InputError("cannot write " + o.snapshot_out);
        snap << snapshot(result.state);
    }

    Json receipts = Json::array();
    for (const auto& r : result.receipts)
        receipts.push_back(to_json(r));
    if (o.json)
    {
        out << Json{{"receipts", receipts}, {"state", to_json(result.state)}}.dump(2) << "\n";
        return exit_ok;
    }
    for (std::size_t i = 0; i < result.receipts.size(); ++i)
    {
        const TxReceipt& r = result.receipts[i];
        out << "tx " << i << ": " << pretty_print(r.tx) << " -> ";
        if (r.status == TxStatus::Done)
            out << "Done";
        else if (r.status == TxStatus::Exception)
            out << "Exception(" << to_string(*r.exception) << ")";
        else
            out << "Skipped(" << to_string(*r.skip_reason) << ")";
        out << ", gas_used " << r.gas_used << "\n";
    }
    out << snapshot(result.state);
    return exit_ok;
}

int cmd_trace(const Options& o, std::ostream& out, std::ostream& err)
{
    const Blockchain b = parse_program(read_file(o.file));
    const std::size_t index = tx_index(b, o.tx);
    ChainState cs = genesis(b);
    for (std::size_t i = 0; i < index; ++i)
        exec_transaction(cs);
    const Transaction& tx = cs.pending.front();
    if (auto reason = skip_reason(cs.state, tx))
    {
        err << "transaction " << index << " is skipped: " << to_string(*reason) << "\n";
        return exit_ok;
    }
    const RunResult r = run(cs.table, tx_config(cs, tx), true);
    for (const auto& t : r.trace)
        out << to_json(t).dump() << "\n";
    return exit_ok;
}

int cmd_bound(const Options& o, std::ostream& out, std::ostream& err)
{
    const Blockchain b = parse_program(read_file(o.file));
    if (!o.method.empty())
    {
        const auto dot = o.method.find('.');
        if (dot == std::string::npos)
            throw InputError("--method expects CONTRACT.METHOD");
        const std::string contract = o.method.substr(0, dot);
        const std::string name = o.method.substr(dot + 1);
        const CheckReport report = check_program(b);
        auto c = report.methods.find(contract);
        const MethodReport* m = nullptr;
        if (c != report.methods.end())
            if (auto it = c->second.find(name); it != c->second.end())
                m = &it->second;
        if (!m)
        {
            for (const auto& d : report.diagnostics)
                print_diagnostic(err, d);
            err << "no bound for " << o.method << "\n";
            return report.ok() ? exit_input : exit_rejected;
        }
        if (o.json)
            out << Json{{"method", o.method},
                        {"declared_n", to_json(m->declared_n)},
                        {"computed_n", to_json(m->computed_n)},
                        {"min_gas", to_json(m->min_gas)}}
                       .dump(2)
                << "\n";
        else
            out << o.method << ": declared " << m->declared_n << ", computed " << m->computed_n << ", min_gas "
                << m->min_gas << "\n";
        return exit_ok;
    }

    const Transaction& tx = b.txs[tx_index(b, o.tx)];
    Int bound;
    try
    {
        bound = transaction_bound(make_type_env(b), tx);
    }
    catch (const Error& e)
    {
        err << "error: " << to_string(e.code()) << ": " << where(e) << e.message() << "\n";
        return exit_rejected;
    }
    if (o.json)
        out << Json{{"tx", pretty_print(tx)}, {"bound", to_json(bound)}, {"min_gas", to_json(Int{bound + 1})}}.dump(2)
            << "\n";
    else
        out << pretty_print(tx) << ": bound " << bound << ", min_gas " << Int{bound + 1} << "\n";
    return exit_ok;
}

int cmd_conformance(const Options& o, std::ostream& out)
{
    const std::vector<SuiteResult> results = run_all_suites(o.seed, o.cases);
    const bool ok = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.ok(); });
    if (o.json)
    {
        Json j = Json::array();
        for (const auto& r : results)
            j.push_back(to_json(r));
        out << Json{{"seed", o.seed}, {"cases", o.cases}, {"suites", j}, {"ok", ok}}.dump(2) << "\n";
    }
    else
    {
        for (const auto& r : results)
        {
            out << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.passed << "/" << r.cases << " passed";
            if (r.skipped)
                out << ", " << r.skipped << " skipped";
            out << "\n";
            if (!r.first_failure.empty())
                out << "  first failure: " << r.first_failure << "\n";
        }
    }
    return ok ? exit_ok : exit_rejected;
}

void apply_int_max_override()
{
    const char* v = std::getenv("TINYSOL_INT_MAX");
    if (!v || !*v)
        return;
    Int n;
    try
    {
        n = Int{std::string{v}};
    }
    catch (const std::exception&)
    {
        throw InputError(std::string{"TINYSOL_INT_MAX is not an integer: "} + v);
    }
    if (n < 0)
        throw InputError("TINYSOL_INT_MAX must not be negative");
    set_int_max(n);
}
}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"TinySol toolkit: type check, run, and trace gas-aware contracts", "tinysol"};
    app.require_subcommand(1);
    Options o;

    auto* check = app.add_subcommand("check", "Type check a program and report method gas bounds");
    check->add_option("file", o.file, "Program file")->required();
    check->add_flag("--json", o.json, "JSON report");

    auto* run_cmd = app.add_subcommand("run", "Execute the transactions of a program");
    run_cmd->add_option("file", o.file, "Program file")->required();
    run_cmd->add_option("--snapshot-in", o.snapshot_in, "Start from this state snapshot instead of genesis");
    run_cmd->add_option("--snapshot-out", o.snapshot_out, "Write the final state snapshot here");
    run_cmd->add_flag("--json", o.json, "JSON receipts and state");

    auto* trace = app.add_subcommand("trace", "Print the machine steps of one transaction as JSON lines");
    trace->add_option("file", o.file, "Program file")->required();
    trace->add_option("--tx", o.tx, "Transaction index, starting at 0")->required();

    auto* bound = app.add_subcommand("bound", "Static gas bound of a method or transaction");
    bound->add_option("file", o.file, "Program file")->required();
    auto* method_opt = bound->add_option("--method", o.method, "CONTRACT.METHOD");
    auto* tx_opt = bound->add_option("--tx", o.tx, "Transaction index, starting at 0");
    method_opt->excludes(tx_opt);
    bound->add_flag("--json", o.json, "JSON output");

    auto* conf = app.add_subcommand("conformance", "Run the property-based conformance suites");
    conf->add_option("--seed", o.seed, "First seed");
    conf->add_option("--cases", o.cases, "Cases per suite");
    conf->add_flag("--json", o.json, "JSON verdicts");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
        if (bound->parsed() && o.method.empty() && o.tx < 0)
            throw CLI::ValidationError("bound", "one of --method or --tx is required");
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input;
    }

    try
    {
        apply_int_max_override();
        if (check->parsed())
            return cmd_check(o, out);
        if (run_cmd->parsed())
            return cmd_run(o, out);
        if (trace->parsed())
            return cmd_trace(o, out, err);
        if (bound->parsed())
            return cmd_bound(o, out, err);
        return cmd_conformance(o, out);
    }
    catch (const Error& e)
    {
        err << "error: " << to_string(e.code()) << ": " << where(e) << e.message() << "\n";
        return exit_input;
    }
    catch (const InputError& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
}
}  // namespace tinysol
