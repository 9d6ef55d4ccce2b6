// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tinysol/chain.hpp"
#include "tinysol/parser.hpp"
#include "tinysol/serialize.hpp"

#include <gtest/gtest.h>

using namespace tinysol;

namespace
{
const char* const contracts = R"(
interface I {
  p : int;
  f()^50_0 : 1;
  g()^50_0 : 5;
  h()^50_0 : 5;
}
contract A { balance := 100; }
contract C : I {
  balance := 0;
  field p := 0;
  f() { skip }
  g() { this.p := this.p + 1 }
  h() { this.p := 42; throw }
}
)";

Blockchain program(const std::string& txs)
{
    return parse_program(std::string{contracts} + txs);
}

Int balance(const State& s, const std::string& a)
{
    return s.at(a).at("balance").as_int();
}
}  // namespace

TEST(Genesis, Empty)
{
    const ChainState cs = genesis(Blockchain{});
    EXPECT_TRUE(cs.state.empty());
    EXPECT_TRUE(cs.pending.empty());
}

TEST(Genesis, PendingTransactions)
{
    const ChainState cs = genesis(parse_program("contract C { }\nC->C.send():(0,1)\nC->C.send():(0,1)"));
    EXPECT_EQ(cs.state.size(), 1u);
    EXPECT_EQ(cs.pending.size(), 2u);
}

TEST(Genesis, DuplicateContract)
{
    EXPECT_THROW(genesis(parse_program("contract C { } contract C { }")), Error);
}

TEST(Transaction, Done)
{
    const ChainResult r = run_blockchain(program("A->C.f():(0,10)"));
    ASSERT_EQ(r.receipts.size(), 1u);
    EXPECT_EQ(r.receipts[0].status, TxStatus::Done);
    EXPECT_EQ(r.receipts[0].gas_used, 2);
    EXPECT_EQ(balance(r.state, "A"), 98);
    EXPECT_EQ(balance(r.state, "C"), 0);
}

TEST(Transaction, OutOfGasRollsBackTransfer)
{
    // ss-call consumes the only unit, then the body runs out of gas.
    const ChainResult r = run_blockchain(program("A->C.f():(30,1)"));
    const TxReceipt& rc = r.receipts[0];
    EXPECT_EQ(rc.status, TxStatus::Exception);
    EXPECT_EQ(rc.exception, ExcLabel::Oog);
    EXPECT_EQ(rc.gas_used, 1);
    EXPECT_EQ(balance(r.state, "A"), 99);
    EXPECT_EQ(balance(r.state, "C"), 0);
    EXPECT_EQ(rc.balance_delta, (std::map<std::string, Int>{{"A", -1}}));
}

TEST(Transaction, InsufficientFundsIsSkipped)
{
    const Blockchain b = program("A->C.f():(50,51)");
    const ChainResult r = run_blockchain(b);
    EXPECT_EQ(r.receipts[0].status, TxStatus::Skipped);
    EXPECT_EQ(r.receipts[0].skip_reason, SkipReason::InsufficientFunds);
    EXPECT_EQ(r.state, genesis(b).state);
}

TEST(Transaction, UnknownCallerIsSkipped)
{
    const ChainResult r = run_blockchain(program("Nobody->C.f():(0,5)"));
    EXPECT_EQ(r.receipts[0].skip_reason, SkipReason::UnknownAccount);
}

TEST(Chain, NoTransactionsKeepsGenesis)
{
    const Blockchain b = program("");
    EXPECT_EQ(run_blockchain(b).state, genesis(b).state);
}

TEST(Chain, EffectsCompose)
{
    const ChainResult r = run_blockchain(program("A->C.g():(0,10)\nA->C.g():(3,10)"));
    ASSERT_EQ(r.receipts.size(), 2u);
    EXPECT_EQ(r.state.at("C").at("p"), Value::integer(2));
    EXPECT_EQ(balance(r.state, "C"), 3);
    EXPECT_EQ(balance(r.state, "A"), 100 - 3 - r.receipts[0].gas_used - r.receipts[1].gas_used);
}

TEST(Chain, ContinuesAfterRollback)
{
    const ChainResult r = run_blockchain(program("A->C.h():(5,10)\nA->C.g():(0,10)"));
    EXPECT_EQ(r.receipts[0].status, TxStatus::Exception);
    EXPECT_EQ(r.receipts[0].exception, ExcLabel::Pge);
    EXPECT_EQ(r.receipts[1].status, TxStatus::Done);
    // The 42 written before the throw is gone; the second call started from 0.
    EXPECT_EQ(r.state.at("C").at("p"), Value::integer(1));
    EXPECT_EQ(balance(r.state, "C"), 0);
}

TEST(Chain, StartsFromSnapshot)
{
    const Blockchain b = program("A->C.g():(0,10)");
    const ChainResult first = run_blockchain(b);
    const ChainResult second = run_blockchain(b, restore(snapshot(first.state)));
    EXPECT_EQ(second.state.at("C").at("p"), Value::integer(2));
}

TEST(Receipt, Json)
{
    const ChainResult r = run_blockchain(program("A->C.f():(0,10)"));
    EXPECT_EQ(to_json(r.receipts[0]).dump(),
              R"j({"balance_delta":{"A":-2},"gas_used":2,"outcome":"Done","tx":"A->C.f():(0,10)"})j");
}
