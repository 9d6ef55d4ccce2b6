// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tinysol/env.hpp"
#include "tinysol/serialize.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tinysol
{
/// Interfaces by name and the interface of every address.
struct TypeEnv
{
    std::map<std::string, std::string, std::less<>> addresses;
    InterfaceTable interfaces;

    /// Throws Error(UnboundName) for an undeclared address.
    const std::string& iface_of(std::string_view address) const;
    /// Throws Error(UnknownInterface).
    const InterfaceDecl& iface(std::string_view name) const;
};

/// Collects the interfaces (plus ITop) and contract/interface bindings of a
/// program. Throws Error(UnknownInterface) when a contract or a member type
/// names an undeclared interface, Error(DuplicateName) for a repeated interface.
TypeEnv make_type_env(const Blockchain& b);

/// Local variable types, newest first; lookup takes the first match.
using VarTypes = std::vector<std::pair<std::string, BaseType>>;

const BaseType* lookup(const VarTypes& delta, std::string_view x);

bool subtype(const TypeEnv& g, const BaseType& a, const BaseType& b);
bool subtype(const TypeEnv& g, const MethodType& a, const MethodType& b);
bool subtype(const TypeEnv& g, const Member& a, const Member& b);
/// Structural, member-wise; recursive interface references are assumed to
/// hold while being checked.
bool interface_subtype(const TypeEnv& g, std::string_view a, std::string_view b);

/// Result type of an operator on the given argument types. Interval
/// arithmetic for + - * and negation, `int` as soon as one operand is `int`
/// or for division. Throws Error(OperatorTypeError).
BaseType op_signature(OpKind op, const std::vector<BaseType>& args);

/// Minimal type of a value: int[v..v], bool, or the address's interface.
BaseType type_value(const TypeEnv& g, const Value& v);
bool value_has_type(const TypeEnv& g, const Value& v, const BaseType& t);

/// Minimal type of an expression. Throws Error(UnboundName | NoSuchMember |
/// OperatorTypeError | TypeMismatch).
BaseType type_expr(const TypeEnv& g, const VarTypes& delta, const Expr& e);

/// Least step bound of a statement. Throws Error(UnboundedLoopGuard |
/// TypeMismatch | UnknownMethod | AmountOutOfDeclaredRange | ...).
Int type_stmt(const TypeEnv& g, const VarTypes& delta, const Stm& s);

/// Least gas making a configuration with just s on the stack well typed.
Int min_gas(const TypeEnv& g, const VarTypes& delta, const Stm& s);

/// Types a method body is checked under: this, sender, value, parameters.
VarTypes method_context(const std::string& self_iface, const MethodType& m, const std::vector<std::string>& params);

/// The call a transaction starts with, and its bound with only `this` bound
/// to the caller.
Stm transaction_call(const Transaction& tx);
Int transaction_bound(const TypeEnv& g, const Transaction& tx);

struct Diagnostic
{
    ErrorCode code;
    std::string message;
    std::optional<SourceLoc> loc;
    std::string contract;
    std::string member;
};

Json to_json(const Diagnostic& d);

struct MethodReport
{
    Int declared_n;
    Int computed_n;
    Int min_gas;
};

struct CheckReport
{
    /// contract -> method -> bounds, for every method whose body typed.
    std::map<std::string, std::map<std::string, MethodReport>> methods;
    std::vector<Diagnostic> diagnostics;

    bool ok() const noexcept { return diagnostics.empty(); }
};

Json to_json(const CheckReport& r);

/// Checks field initialisers against the interface, every method body
/// against its declared bound (computed <= declared), and that contract and
/// interface declare the same members.
CheckReport check_declarations(const TypeEnv& g, const std::vector<ContractDecl>& decls);

/// Builds the type environment first; its errors become diagnostics.
CheckReport check_program(const Blockchain& b);

struct Agreement
{
    std::vector<std::string> problems;

    bool ok() const noexcept { return problems.empty(); }
};

/// Every contract has an interface, every stored field is declared there with
/// a type its value inhabits.
Agreement check_state(const TypeEnv& g, const State& state);
/// Every method of the table is declared by the contract's interface and its
/// body meets the declared bound.
Agreement check_table(const TypeEnv& g, const MethodTable& table);
/// Every binding (x, v, B) has x in delta, B <= delta(x), and v : delta(x).
Agreement check_vars(const TypeEnv& g, const VarTypes& delta, const VarEnv& vars);
Agreement check_env_agreement(const TypeEnv& g, const State& state, const MethodTable& table,
                              const VarTypes& delta, const VarEnv& vars);
}  // namespace tinysol
