// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tinysol/syntax.hpp"

#include <map>
#include <string>
#include <vector>

namespace tinysol
{
/// One local binding with the type it was declared at.
struct Binding
{
    std::string name;
    Value value;
    BaseType type;

    friend bool operator==(const Binding&, const Binding&) = default;
};

/// Local variables, newest binding first. Declarations prepend and scope
/// exits pop the head, so order matters.
using VarEnv = std::vector<Binding>;

const Binding* var_lookup(const VarEnv& env, std::string_view x);

/// Replaces the value of x, keeping its type and position. Throws Error(Unbound).
VarEnv var_update(const VarEnv& env, std::string_view x, Value v);

/// Field name to value; always holds an integer `balance`.
using FieldEnv = std::map<std::string, Value, std::less<>>;

/// Address to fields.
using State = std::map<std::string, FieldEnv, std::less<>>;

/// Only (X, p) changes. Throws Error(Unbound) when X or X.p is missing.
State state_update_field(const State& s, std::string_view x, std::string_view p, Value v);

/// Moves n from X to Y as two sequential balance updates (X == Y nets to zero).
/// Does not check that X can afford n.
State transfer(const State& s, std::string_view from, std::string_view to, const Int& n);

Int total_balance(const State& s);

/// A method body with the types its bindings are recorded at when called:
/// parameter types and the accepted transfer range come from the contract's
/// interface, defaulting to `int` when no interface information is given.
struct Method
{
    std::vector<std::string> params;
    std::vector<BaseType> param_types;
    BaseType value_type = BaseType::integer();
    Stm body = st::skip();
};

struct MethodEnv
{
    /// Interface name the contract is typed by.
    std::string iface;
    std::map<std::string, Method, std::less<>> methods;

    const Method* find(std::string_view f) const;
};

/// Address to methods; constant once built.
using MethodTable = std::map<std::string, MethodEnv, std::less<>>;

struct Elaborated
{
    State state;
    MethodTable table;
};

/// Builds the initial state and method table, adding `balance` and
/// `send() { skip }` to every contract. Throws Error(DuplicateContract) and
/// the validate_contract_shape errors.
Elaborated elaborate(const std::vector<ContractDecl>& decls, const InterfaceTable* interfaces = nullptr);
}  // namespace tinysol
