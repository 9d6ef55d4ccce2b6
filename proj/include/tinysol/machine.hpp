// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tinysol/env.hpp"
#include "tinysol/serialize.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace tinysol
{
/// rte: runtime error, neg: transfer exceeding the balance, oog: out of gas,
/// pge: explicit `throw`.
enum class ExcLabel
{
    Rte,
    Neg,
    Oog,
    Pge,
};

std::string_view to_string(ExcLabel l) noexcept;
std::optional<ExcLabel> exc_label_from_string(std::string_view s) noexcept;

/// `del(x)`: pops the binding of x when its scope ends.
struct ScopeEnd
{
    std::string name;

    friend bool operator==(const ScopeEnd&, const ScopeEnd&) = default;
};

struct ExcFrame
{
    ExcLabel label;

    friend bool operator==(const ExcFrame&, const ExcFrame&) = default;
};

/// Statement, saved caller variables, scope end, or exception.
using Frame = std::variant<Stm, VarEnv, ScopeEnd, ExcFrame>;

/// Bottom of the stack is front(); the top is back(). The empty vector is ⊥.
using Stack = std::vector<Frame>;

struct Config
{
    Stack stack;
    State state;
    VarEnv vars;
    Int gas;
};

enum class EvalErrorKind
{
    UnboundVariable,
    MissingField,
    NotAnAddress,
    TypeMismatch,
    DivisionByZero,
};

struct EvalError
{
    EvalErrorKind kind;
    std::string message;
};

using EvalResult = std::variant<Value, EvalError>;

/// Integer + - * / (truncating) and comparisons, == on values of the same
/// kind, and/or/not on booleans.
EvalResult apply_op(OpKind op, const std::vector<Value>& args);
EvalResult eval_expr(const State& state, const VarEnv& vars, const Expr& e);

enum class Rule
{
    Skip,
    Seq,
    If,
    ForTrue,
    ForFalse,
    DeclVar,
    AssignVar,
    AssignField,
    Call,
    Throw,
    OutOfGas,
    DeleteVar,
    Return,
    /// A side condition of the top statement failed: exc(rte) pushed.
    RuntimeError,
    /// The transfer of a call exceeds the caller's balance: exc(neg) pushed.
    NegativeBalance,
};

std::string_view to_string(Rule r) noexcept;

/// Rules that take one unit of gas.
bool consumes_gas(Rule r) noexcept;

/// Terminal configuration: empty stack (no exception) or exception on top.
struct Halt
{
    std::optional<ExcLabel> exception;

    friend bool operator==(const Halt&, const Halt&) = default;
};

std::optional<Halt> halted(const Config& c);

struct Stepped
{
    Rule rule;
    Config next;
    /// Why a RuntimeError fired; empty otherwise.
    std::string detail;
};

std::variant<Stepped, Halt> step(const MethodTable& table, const Config& c);

struct TraceEntry
{
    Rule rule;
    Int gas_before;
    Int gas_after;
    /// Depth after the step.
    std::size_t stack_depth;
    std::optional<ExcLabel> exception;
};

Json to_json(const TraceEntry& t);

struct RunResult
{
    Halt halt;
    Config final;
    std::size_t steps = 0;
    std::vector<TraceEntry> trace;
};

/// Steps until halted. Terminates: gas-free steps between two paying steps
/// are bounded by the stack depth.
RunResult run(const MethodTable& table, Config c, bool record_trace = false);

/// Initial configuration running a single statement.
Config make_config(Stm s, State state, VarEnv vars, Int gas);
}  // namespace tinysol
