// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tinysol/error.hpp"
#include "tinysol/value.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace tinysol
{
/// Name of the minimal interface holding only `balance` and `send`.
inline constexpr std::string_view top_interface_name = "ITop";

/// Upper bound of the transfer range of `send`. Defaults to 2^63 - 1.
/// Only used inside types; runtime integers are never clamped.
const Int& int_max();
void set_int_max(Int v);

struct BoolType
{
    friend bool operator==(const BoolType&, const BoolType&) = default;
};

struct IntType
{
    friend bool operator==(const IntType&, const IntType&) = default;
};

/// Integers in [lo..hi], both included.
struct IntRangeType
{
    Int lo;
    Int hi;

    friend bool operator==(const IntRangeType& a, const IntRangeType& b)
    {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

struct IfaceType
{
    std::string name;

    friend bool operator==(const IfaceType&, const IfaceType&) = default;
};

class BaseType
{
public:
    using Storage = std::variant<BoolType, IntType, IntRangeType, IfaceType>;

    static BaseType boolean() { return BaseType{BoolType{}}; }
    static BaseType integer() { return BaseType{IntType{}}; }
    /// Throws Error(SyntaxError) when lo > hi.
    static BaseType range(Int lo, Int hi);
    static BaseType iface(std::string name) { return BaseType{IfaceType{std::move(name)}}; }

    bool is_bool() const noexcept { return std::holds_alternative<BoolType>(v_); }
    bool is_int() const noexcept { return std::holds_alternative<IntType>(v_); }
    bool is_range() const noexcept { return std::holds_alternative<IntRangeType>(v_); }
    bool is_iface() const noexcept { return std::holds_alternative<IfaceType>(v_); }
    /// Either integer type.
    bool is_integral() const noexcept { return is_int() || is_range(); }

    const IntRangeType& as_range() const { return std::get<IntRangeType>(v_); }
    const std::string& iface_name() const { return std::get<IfaceType>(v_).name; }
    const Storage& storage() const noexcept { return v_; }

    friend bool operator==(const BaseType&, const BaseType&) = default;

private:
    explicit BaseType(Storage v) : v_(std::move(v)) {}

    Storage v_;
};

std::string to_string(const BaseType& t);

/// Parameter types, accepted transfer range [lo..hi], and the step bound of the body.
struct MethodType
{
    std::vector<BaseType> params;
    Int lo;
    Int hi;
    Int steps;

    friend bool operator==(const MethodType& a, const MethodType& b)
    {
        return a.params == b.params && a.lo == b.lo && a.hi == b.hi && a.steps == b.steps;
    }
};

std::string to_string(const MethodType& t);

/// Type of `send()`: no parameters, any amount in [0..INT_MAX], one step.
MethodType send_method_type();

using Member = std::variant<BaseType, MethodType>;

struct InterfaceDecl
{
    std::string name;
    std::map<std::string, Member> members;
    SourceLoc loc;

    const BaseType* field(const std::string& p) const;
    const MethodType* method(const std::string& f) const;

    /// Equality ignores the source location.
    friend bool operator==(const InterfaceDecl& a, const InterfaceDecl& b)
    {
        return a.name == b.name && a.members == b.members;
    }
};

/// Interface with the mandatory `balance : int` and `send` members inserted.
InterfaceDecl make_interface(std::string name, SourceLoc loc = {});

/// The minimal interface: exactly `balance` and `send`.
InterfaceDecl top_interface();

using InterfaceTable = std::map<std::string, InterfaceDecl>;
}  // namespace tinysol
