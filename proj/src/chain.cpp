// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tinysol/chain.hpp"

#include <cassert>

namespace tinysol
{
std::string_view to_string(SkipReason r) noexcept
{
    return r == SkipReason::UnknownAccount ? "UnknownAccount" : "InsufficientFunds";
}

Json to_json(const TxReceipt& r)
{
    Json j;
    j["tx"] = pretty_print(r.tx);
    switch (r.status)
    {
    case TxStatus::Done:
        j["outcome"] = "Done";
        break;
    case TxStatus::Exception:
        j["outcome"] = "Exception";
        j["exception"] = to_string(*r.exception);
        break;
    case TxStatus::Skipped:
        j["outcome"] = "Skipped";
        j["reason"] = to_string(*r.skip_reason);
        break;
    }
    j["gas_used"] = to_json(r.gas_used);
    Json delta = Json::object();
    for (const auto& [addr, d] : r.balance_delta)
        delta[addr] = to_json(d);
    j["balance_delta"] = delta;
    return j;
}

InterfaceTable interface_table(const Blockchain& b)
{
    InterfaceTable t;
    t.emplace(std::string{top_interface_name}, top_interface());
    for (const auto& i : b.interfaces)
        t.emplace(i.name, i);
    return t;
}

ChainState genesis(const Blockchain& b)
{
    const InterfaceTable interfaces = interface_table(b);
    Elaborated e = elaborate(b.contracts, &interfaces);
    ChainState cs;
    cs.state = std::move(e.state);
    cs.table = std::move(e.table);
    cs.pending.assign(b.txs.begin(), b.txs.end());
    return cs;
}

Config tx_config(const ChainState& cs, const Transaction& tx)
{
    std::vector<Expr> args;
    for (const auto& v : tx.args)
        args.push_back(ex::val(v));
    Stm call = st::call(ex::address(tx.target), tx.method, std::move(args), ex::integer(tx.amount));

    auto methods = cs.table.find(tx.caller);
    const std::string iface =
        methods == cs.table.end() ? std::string{top_interface_name} : methods->second.iface;
    VarEnv vars{{std::string{magic_this}, Value::address(tx.caller), BaseType::iface(iface)}};
    return make_config(std::move(call), cs.state, std::move(vars), tx.gas);
}

namespace
{
const Int* balance_of(const State& s, const std::string& a)
{
    auto c = s.find(a);
    if (c == s.end())
        return nullptr;
    auto b = c->second.find(balance_field);
    return b == c->second.end() || !b->second.is_int() ? nullptr : &b->second.as_int();
}

std::map<std::string, Int> balance_delta(const State& before, const State& after)
{
    std::map<std::string, Int> out;
    for (const auto& [addr, fields] : after)
    {
        const Int* b = balance_of(before, addr);
        const Int* a = balance_of(after, addr);
        const Int d = (a ? *a : Int{0}) - (b ? *b : Int{0});
        if (!d.is_zero())
            out.emplace(addr, d);
    }
    return out;
}
}  // namespace

std::optional<SkipReason> skip_reason(const State& s, const Transaction& tx)
{
    const Int* caller_balance = balance_of(s, tx.caller);
    if (!caller_balance)
        return SkipReason::UnknownAccount;
    if (tx.gas > *caller_balance - tx.amount)
        return SkipReason::InsufficientFunds;
    return std::nullopt;
}

void exec_transaction(ChainState& cs)
{
    assert(!cs.pending.empty());
    Transaction tx = std::move(cs.pending.front());
    cs.pending.pop_front();

    TxReceipt receipt;
    receipt.tx = tx;
    receipt.gas_used = 0;

    if (auto reason = skip_reason(cs.state, tx))
    {
        receipt.status = TxStatus::Skipped;
        receipt.skip_reason = reason;
        cs.log.push_back(std::move(receipt));
        return;
    }

    RunResult r = run(cs.table, tx_config(cs, tx));
    receipt.gas_used = tx.gas - r.final.gas;

    // Done keeps the run's state; an exception restores the pre-state.
    State next = r.halt.exception ? cs.state : std::move(r.final.state);
    const Int paid = *balance_of(next, tx.caller) - receipt.gas_used;
    next = state_update_field(next, tx.caller, balance_field, Value::integer(paid));

    receipt.status = r.halt.exception ? TxStatus::Exception : TxStatus::Done;
    receipt.exception = r.halt.exception;
    receipt.balance_delta = balance_delta(cs.state, next);
    cs.state = std::move(next);
    cs.log.push_back(std::move(receipt));
}

ChainResult run_blockchain(const Blockchain& b, const std::optional<State>& initial)
{
    ChainState cs = genesis(b);
    if (initial)
        cs.state = *initial;
    while (!cs.pending.empty())
        exec_transaction(cs);
    return {std::move(cs.state), std::move(cs.log)};
}
}  // namespace tinysol
