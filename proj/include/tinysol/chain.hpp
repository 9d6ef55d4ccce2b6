// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tinysol/machine.hpp"

#include <deque>
#include <map>
#include <optional>

namespace tinysol
{
enum class SkipReason
{
    /// The caller is not a declared address.
    UnknownAccount,
    /// The caller cannot cover gas limit plus transfer.
    InsufficientFunds,
};

std::string_view to_string(SkipReason r) noexcept;

enum class TxStatus
{
    Done,
    Exception,
    Skipped,
};

struct TxReceipt
{
    Transaction tx;
    TxStatus status = TxStatus::Done;
    std::optional<ExcLabel> exception;
    std::optional<SkipReason> skip_reason;
    Int gas_used;
    /// Net balance change per address; only nonzero entries.
    std::map<std::string, Int> balance_delta;
};

Json to_json(const TxReceipt& r);

struct ChainState
{
    State state;
    MethodTable table;
    std::deque<Transaction> pending;
    std::vector<TxReceipt> log;
};

/// Interface table of a program: its declared interfaces plus the minimal one.
InterfaceTable interface_table(const Blockchain& b);

/// Elaborates the declarations and schedules the transactions. Throws the
/// elaboration errors.
ChainState genesis(const Blockchain& b);

/// The machine configuration a transaction starts from: the call on an empty
/// stack, with only `this` bound to the caller.
Config tx_config(const ChainState& cs, const Transaction& tx);

/// Runs the first pending transaction. On success the final state is kept;
/// on an exception the pre-state is kept. Either way the caller pays the gas
/// consumed. A transaction whose caller is unknown or cannot afford g + n is
/// skipped without billing. Requires a pending transaction.
/// Why the guard refuses tx in state s, if it does.
std::optional<SkipReason> skip_reason(const State& s, const Transaction& tx);

void exec_transaction(ChainState& cs);

struct ChainResult
{
    State state;
    std::vector<TxReceipt> receipts;
};

/// Genesis, then every transaction in order. `initial` replaces the genesis
/// state (used to resume from a snapshot).
ChainResult run_blockchain(const Blockchain& b, const std::optional<State>& initial = std::nullopt);
}  // namespace tinysol
