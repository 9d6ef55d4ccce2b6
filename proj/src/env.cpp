// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tinysol/env.hpp"

namespace tinysol
{
const Binding* var_lookup(const VarEnv& env, std::string_view x)
{
    for (const auto& b : env)
        if (b.name == x)
            return &b;
    return nullptr;
}

VarEnv var_update(const VarEnv& env, std::string_view x, Value v)
{
    VarEnv out = env;
    for (auto& b : out)
    {
        if (b.name == x)
        {
            b.value = std::move(v);
            return out;
        }
    }
    throw Error(ErrorCode::Unbound, "variable " + std::string{x} + " is not bound");
}

State state_update_field(const State& s, std::string_view x, std::string_view p, Value v)
{
    auto contract = s.find(x);
    if (contract == s.end())
        throw Error(ErrorCode::Unbound, "no contract at address " + std::string{x});
    auto field = contract->second.find(p);
    if (field == contract->second.end())
        throw Error(ErrorCode::Unbound, "contract " + std::string{x} + " has no field " + std::string{p});
    State out = s;
    out.find(x)->second.find(p)->second = std::move(v);
    return out;
}

State transfer(const State& s, std::string_view from, std::string_view to, const Int& n)
{
    const auto balance_of = [](const State& st, std::string_view a) -> const Int& {
        auto it = st.find(a);
        if (it == st.end())
            throw Error(ErrorCode::Unbound, "no contract at address " + std::string{a});
        auto b = it->second.find(balance_field);
        if (b == it->second.end() || !b->second.is_int())
            throw Error(ErrorCode::Unbound, "contract " + std::string{a} + " has no integer balance");
        return b->second.as_int();
    };
    State mid = state_update_field(s, from, balance_field, Value::integer(balance_of(s, from) - n));
    return state_update_field(mid, to, balance_field, Value::integer(balance_of(mid, to) + n));
}

Int total_balance(const State& s)
{
    Int sum = 0;
    for (const auto& [addr, fields] : s)
    {
        auto b = fields.find(balance_field);
        if (b != fields.end() && b->second.is_int())
            sum += b->second.as_int();
    }
    return sum;
}

const Method* MethodEnv::find(std::string_view f) const
{
    auto it = methods.find(f);
    return it == methods.end() ? nullptr : &it->second;
}

namespace
{
Method make_method(std::vector<std::string> params, Stm body, const MethodType* type)
{
    Method m;
    m.params = std::move(params);
    m.body = std::move(body);
    if (type && type->params.size() == m.params.size())
    {
        m.param_types = type->params;
        m.value_type = BaseType::range(type->lo, type->hi);
    }
    else
        m.param_types.assign(m.params.size(), BaseType::integer());
    return m;
}
}  // namespace

Elaborated elaborate(const std::vector<ContractDecl>& decls, const InterfaceTable* interfaces)
{
    Elaborated out;
    for (const auto& c : decls)
    {
        validate_contract_shape(c);
        if (out.state.count(c.name) != 0)
            throw Error(ErrorCode::DuplicateContract, "contract " + c.name + " is declared twice", c.loc);

        const InterfaceDecl* iface = nullptr;
        if (interfaces)
        {
            auto it = interfaces->find(c.interface_name());
            if (it != interfaces->end())
                iface = &it->second;
        }
        auto method_type = [&](const std::string& f) { return iface ? iface->method(f) : nullptr; };

        FieldEnv fields;
        fields.emplace(std::string{balance_field}, Value::integer(c.balance));
        for (const auto& f : c.fields)
            fields.emplace(f.name, f.init);

        MethodEnv env;
        env.iface = c.interface_name();
        const MethodType send_type = send_method_type();
        env.methods.emplace(std::string{send_method},
                            make_method({}, st::skip(), iface ? method_type(std::string{send_method}) : &send_type));
        for (const auto& m : c.methods)
            env.methods.emplace(m.name, make_method(m.params, m.body, method_type(m.name)));

        out.state.emplace(c.name, std::move(fields));
        out.table.emplace(c.name, std::move(env));
    }
    return out;
}
}  // namespace tinysol
