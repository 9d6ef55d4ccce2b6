// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tinysol/types.hpp"

#include "tinysol/syntax.hpp"

namespace tinysol
{
namespace
{
Int& int_max_storage()
{
    static Int value = (Int{1} << 63) - 1;
    return value;
}
}  // namespace

const Int& int_max()
{
    return int_max_storage();
}

void set_int_max(Int v)
{
    int_max_storage() = std::move(v);
}

BaseType BaseType::range(Int lo, Int hi)
{
    if (lo > hi)
        throw Error(ErrorCode::SyntaxError, "empty integer range [" + lo.str() + ".." + hi.str() + "]");
    return BaseType{IntRangeType{std::move(lo), std::move(hi)}};
}

std::string to_string(const BaseType& t)
{
    if (t.is_bool())
        return "bool";
    if (t.is_int())
        return "int";
    if (t.is_range())
        return "int[" + t.as_range().lo.str() + ".." + t.as_range().hi.str() + "]";
    return t.iface_name();
}

std::string to_string(const MethodType& t)
{
    std::string out = "(";
    for (std::size_t i = 0; i < t.params.size(); ++i)
    {
        if (i != 0)
            out += ", ";
        out += to_string(t.params[i]);
    }
    out += ")^" + t.hi.str() + "_" + t.lo.str() + " : " + t.steps.str();
    return out;
}

MethodType send_method_type()
{
    return MethodType{{}, 0, int_max(), 1};
}

const BaseType* InterfaceDecl::field(const std::string& p) const
{
    auto it = members.find(p);
    return it == members.end() ? nullptr : std::get_if<BaseType>(&it->second);
}

const MethodType* InterfaceDecl::method(const std::string& f) const
{
    auto it = members.find(f);
    return it == members.end() ? nullptr : std::get_if<MethodType>(&it->second);
}

InterfaceDecl make_interface(std::string name, SourceLoc loc)
{
    InterfaceDecl decl{std::move(name), {}, loc};
    decl.members.emplace(std::string{balance_field}, BaseType::integer());
    decl.members.emplace(std::string{send_method}, send_method_type());
    return decl;
}

InterfaceDecl top_interface()
{
    return make_interface(std::string{top_interface_name});
}
}  // namespace tinysol
