// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <variant>

namespace tinysol
{
/// Arbitrary-precision integer used for runtime values, gas, and type bounds.
using Int = boost::multiprecision::cpp_int;

struct Address
{
    std::string name;

    friend bool operator==(const Address&, const Address&) = default;
};

/// Runtime datum: an integer, a boolean, or an address name.
class Value
{
public:
    static Value integer(Int v) { return Value{Storage{std::move(v)}}; }
    static Value boolean(bool b) { return Value{Storage{b}}; }
    static Value address(std::string name) { return Value{Storage{Address{std::move(name)}}}; }

    bool is_int() const noexcept { return std::holds_alternative<Int>(v_); }
    bool is_bool() const noexcept { return std::holds_alternative<bool>(v_); }
    bool is_address() const noexcept { return std::holds_alternative<Address>(v_); }

    const Int& as_int() const { return std::get<Int>(v_); }
    bool as_bool() const { return std::get<bool>(v_); }
    const std::string& as_address() const { return std::get<Address>(v_).name; }

    friend bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }

private:
    using Storage = std::variant<Int, bool, Address>;
    explicit Value(Storage v) : v_(std::move(v)) {}

    Storage v_;
};

/// Source-level spelling: `42`, `-3`, `true`, `@C`.
std::string to_string(const Value& v);
}  // namespace tinysol
