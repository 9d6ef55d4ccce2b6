// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tinysol/syntax.hpp"

#include <set>
#include <stdexcept>

namespace tinysol
{
bool is_magic_name(std::string_view name) noexcept
{
    return name == magic_this || name == magic_sender || name == magic_value;
}

std::string_view to_string(OpKind op) noexcept
{
    switch (op)
    {
    case OpKind::Add:
        return "+";
    case OpKind::Sub:
    case OpKind::Neg:
        return "-";
    case OpKind::Mul:
        return "*";
    case OpKind::Div:
        return "/";
    case OpKind::Lt:
        return "<";
    case OpKind::Le:
        return "<=";
    case OpKind::Gt:
        return ">";
    case OpKind::Ge:
        return ">=";
    case OpKind::Eq:
        return "==";
    case OpKind::And:
        return "and";
    case OpKind::Or:
        return "or";
    case OpKind::Not:
        return "not";
    }
    return "?";
}

std::size_t arity(OpKind op) noexcept
{
    return op == OpKind::Not || op == OpKind::Neg ? 1 : 2;
}

Expr make_expr(ExprNode node)
{
    return Expr{std::make_shared<const ExprNode>(std::move(node))};
}

bool operator==(const Expr& a, const Expr& b)
{
    if (a.node_ == b.node_)
        return true;
    const auto& x = a.node_->v;
    const auto& y = b.node_->v;
    if (x.index() != y.index())
        return false;
    return std::visit(
        [&](const auto& lhs) -> bool {
            using T = std::decay_t<decltype(lhs)>;
            const auto& rhs = std::get<T>(y);
            if constexpr (std::is_same_v<T, ValExpr>)
                return lhs.value == rhs.value;
            else if constexpr (std::is_same_v<T, VarExpr>)
                return lhs.name == rhs.name;
            else if constexpr (std::is_same_v<T, BalanceExpr>)
                return lhs.target == rhs.target;
            else if constexpr (std::is_same_v<T, FieldExpr>)
                return lhs.field == rhs.field && lhs.target == rhs.target;
            else
                return lhs.op == rhs.op && lhs.args == rhs.args;
        },
        x);
}

namespace ex
{
Expr val(Value v)
{
    return make_expr({ValExpr{std::move(v)}});
}

Expr integer(Int v)
{
    return val(Value::integer(std::move(v)));
}

Expr boolean(bool b)
{
    return val(Value::boolean(b));
}

Expr address(std::string name)
{
    return val(Value::address(std::move(name)));
}

Expr var(std::string name)
{
    return make_expr({VarExpr{std::move(name)}});
}

Expr balance(Expr target)
{
    return make_expr({BalanceExpr{std::move(target)}});
}

Expr field(Expr target, std::string p)
{
    if (p == balance_field)
        return balance(std::move(target));
    return make_expr({FieldExpr{std::move(target), std::move(p)}});
}

Expr op(OpKind op, std::vector<Expr> args)
{
    if (args.size() != arity(op))
        throw std::invalid_argument("operator " + std::string{to_string(op)} + " applied to " +
                                    std::to_string(args.size()) + " arguments");
    return make_expr({OpExpr{op, std::move(args)}});
}
}  // namespace ex

Stm make_stm(StmNode node)
{
    return Stm{std::make_shared<const StmNode>(std::move(node))};
}

bool operator==(const Stm& a, const Stm& b)
{
    if (a.node_ == b.node_)
        return true;
    const auto& x = a.node_->v;
    const auto& y = b.node_->v;
    if (x.index() != y.index())
        return false;
    return std::visit(
        [&](const auto& lhs) -> bool {
            using T = std::decay_t<decltype(lhs)>;
            const auto& rhs = std::get<T>(y);
            if constexpr (std::is_same_v<T, SkipStm> || std::is_same_v<T, ThrowStm>)
                return true;
            else if constexpr (std::is_same_v<T, DeclVarStm>)
                return lhs.type == rhs.type && lhs.name == rhs.name && lhs.init == rhs.init &&
                       lhs.body == rhs.body;
            else if constexpr (std::is_same_v<T, AssignStm>)
                return lhs.target == rhs.target && lhs.value == rhs.value;
            else if constexpr (std::is_same_v<T, SeqStm>)
                return lhs.first == rhs.first && lhs.second == rhs.second;
            else if constexpr (std::is_same_v<T, IfStm>)
                return lhs.cond == rhs.cond && lhs.then_branch == rhs.then_branch &&
                       lhs.else_branch == rhs.else_branch;
            else if constexpr (std::is_same_v<T, ForStm>)
                return lhs.guard == rhs.guard && lhs.body == rhs.body;
            else
                return lhs.target == rhs.target && lhs.method == rhs.method && lhs.args == rhs.args &&
                       lhs.amount == rhs.amount;
        },
        x);
}

namespace st
{
Stm skip()
{
    static const Stm s = make_stm({SkipStm{}});
    return s;
}

Stm throw_()
{
    static const Stm s = make_stm({ThrowStm{}});
    return s;
}

Stm decl(BaseType type, std::string name, Expr init, Stm body)
{
    return make_stm({DeclVarStm{std::move(type), std::move(name), std::move(init), std::move(body)}});
}

Stm assign_var(std::string x, Expr e)
{
    return make_stm({AssignStm{LVal{LVal::Kind::Var, std::move(x)}, std::move(e)}});
}

Stm assign_field(std::string p, Expr e)
{
    return make_stm({AssignStm{LVal{LVal::Kind::ThisField, std::move(p)}, std::move(e)}});
}

Stm seq(Stm first, Stm second)
{
    return make_stm({SeqStm{std::move(first), std::move(second)}});
}

Stm seq(std::vector<Stm> stms)
{
    if (stms.empty())
        return skip();
    Stm out = stms.back();
    for (auto it = stms.rbegin() + 1; it != stms.rend(); ++it)
        out = seq(*it, out);
    return out;
}

Stm if_(Expr cond, Stm then_branch, Stm else_branch)
{
    return make_stm({IfStm{std::move(cond), std::move(then_branch), std::move(else_branch)}});
}

Stm for_(Expr guard, Stm body)
{
    return make_stm({ForStm{std::move(guard), std::move(body)}});
}

Stm call(Expr target, std::string method, std::vector<Expr> args, Expr amount)
{
    return make_stm({CallStm{std::move(target), std::move(method), std::move(args), std::move(amount)}});
}
}  // namespace st

std::string ContractDecl::interface_name() const
{
    return iface.empty() ? std::string{top_interface_name} : iface;
}

void validate_contract_shape(const ContractDecl& c)
{
    std::set<std::string> fields;
    for (const auto& f : c.fields)
    {
        if (f.name == balance_field)
            throw Error(ErrorCode::ReservedName,
                        "contract " + c.name + " declares the implicit field balance", f.loc);
        if (!fields.insert(f.name).second)
            throw Error(ErrorCode::DuplicateName, "contract " + c.name + " declares field " + f.name + " twice",
                        f.loc);
    }

    std::set<std::string> methods;
    for (const auto& m : c.methods)
    {
        if (m.name == send_method)
            throw Error(ErrorCode::ReservedName, "contract " + c.name + " declares the implicit method send",
                        m.loc);
        if (!methods.insert(m.name).second)
            throw Error(ErrorCode::DuplicateName,
                        "contract " + c.name + " declares method " + m.name + " twice", m.loc);

        std::set<std::string> params;
        for (const auto& x : m.params)
        {
            if (is_magic_name(x))
                throw Error(ErrorCode::ReservedName, "parameter " + x + " of " + c.name + "." + m.name +
                                                         " shadows a magic variable",
                            m.loc);
            if (!params.insert(x).second)
                throw Error(ErrorCode::DuplicateName,
                            "method " + c.name + "." + m.name + " declares parameter " + x + " twice", m.loc);
        }
    }
}
}  // namespace tinysol
