// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tinysol/serialize.hpp"

#include <cctype>
#include <cstdint>
#include <limits>

namespace tinysol
{
namespace
{
[[noreturn]] void malformed(const std::string& what)
{
    throw Error(ErrorCode::MalformedSnapshot, what);
}

bool is_decimal(std::string_view s)
{
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}
}  // namespace

Json to_json(const Int& i)
{
    if (i >= std::numeric_limits<std::int64_t>::min() && i <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(i));
    return Json(i.str());
}

Json to_json(const Value& v)
{
    if (v.is_int())
        return to_json(v.as_int());
    if (v.is_bool())
        return Json(v.as_bool());
    return Json("@" + v.as_address());
}

Json to_json(const BaseType& t)
{
    return Json(to_string(t));
}

Json to_json(const FieldEnv& f)
{
    Json out = Json::object();
    for (const auto& [name, v] : f)
        out[name] = to_json(v);
    return out;
}

Json to_json(const State& s)
{
    Json out = Json::object();
    for (const auto& [addr, fields] : s)
        out[addr] = to_json(fields);
    return out;
}

Json to_json(const VarEnv& env)
{
    Json out = Json::array();
    for (const auto& b : env)
        out.push_back({{"name", b.name}, {"value", to_json(b.value)}, {"type", to_json(b.type)}});
    return out;
}

Int int_from_json(const Json& j)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Int{j.get<std::uint64_t>()} : Int{j.get<std::int64_t>()};
    if (j.is_string())
    {
        const auto& s = j.get_ref<const std::string&>();
        if (is_decimal(s))
            return Int{s};
    }
    malformed("expected an integer, got " + j.dump());
}

Value value_from_json(const Json& j)
{
    if (j.is_boolean())
        return Value::boolean(j.get<bool>());
    if (j.is_string())
    {
        const auto& s = j.get_ref<const std::string&>();
        if (s.size() > 1 && s[0] == '@')
            return Value::address(s.substr(1));
    }
    return Value::integer(int_from_json(j));
}

State state_from_json(const Json& j)
{
    if (!j.is_object())
        malformed("state must be a JSON object");
    State s;
    for (const auto& [addr, fields] : j.items())
    {
        if (!fields.is_object())
            malformed("fields of " + addr + " must be a JSON object");
        FieldEnv env;
        for (const auto& [name, v] : fields.items())
            env.emplace(name, value_from_json(v));
        auto b = env.find(balance_field);
        if (b == env.end() || !b->second.is_int())
            malformed("contract " + addr + " lacks an integer balance");
        s.emplace(addr, std::move(env));
    }
    return s;
}

std::string snapshot(const State& s)
{
    return to_json(s).dump(2) + "\n";
}

State restore(std::string_view text)
{
    Json j;
    try
    {
        j = Json::parse(text);
    }
    catch (const Json::parse_error& e)
    {
        malformed(std::string{"snapshot is not valid JSON: "} + e.what());
    }
    return state_from_json(j);
}
}  // namespace tinysol
