// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tinysol/env.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace tinysol
{
using Json = nlohmann::json;

/// Integers fitting in 64 bits become JSON numbers, larger ones decimal strings.
Json to_json(const Int& i);
/// Booleans as JSON booleans, addresses as "@Name".
Json to_json(const Value& v);
Json to_json(const BaseType& t);
Json to_json(const FieldEnv& f);
/// {address: {field: value}}; keys come out sorted.
Json to_json(const State& s);
/// [{name, value, type}], newest first.
Json to_json(const VarEnv& env);

/// The from_json functions throw Error(MalformedSnapshot).
Int int_from_json(const Json& j);
Value value_from_json(const Json& j);
State state_from_json(const Json& j);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string snapshot(const State& s);
State restore(std::string_view text);
}  // namespace tinysol
