// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tinysol/syntax.hpp"

namespace tinysol
{
namespace
{
// Binding strength, loosest first.
enum Prec : int
{
    PrecOr = 1,
    PrecAnd,
    PrecCompare,
    PrecAdditive,
    PrecMultiplicative,
    PrecUnary,
    PrecPostfix,
    PrecAtom,
};

int binary_prec(OpKind op)
{
    switch (op)
    {
    case OpKind::Or:
        return PrecOr;
    case OpKind::And:
        return PrecAnd;
    case OpKind::Lt:
    case OpKind::Le:
    case OpKind::Gt:
    case OpKind::Ge:
    case OpKind::Eq:
        return PrecCompare;
    case OpKind::Add:
    case OpKind::Sub:
        return PrecAdditive;
    case OpKind::Mul:
    case OpKind::Div:
        return PrecMultiplicative;
    case OpKind::Not:
    case OpKind::Neg:
        return PrecUnary;
    }
    return PrecAtom;
}

int prec_of(const Expr& e)
{
    if (const auto* v = e.get_if<ValExpr>())
        return v->value.is_int() && v->value.as_int() < 0 ? PrecUnary : PrecAtom;
    if (e.get_if<VarExpr>())
        return PrecAtom;
    if (e.get_if<BalanceExpr>() || e.get_if<FieldExpr>())
        return PrecPostfix;
    return binary_prec(e.get_if<OpExpr>()->op);
}

void print_expr(std::string& out, const Expr& e);

void print_at(std::string& out, const Expr& e, int min_prec)
{
    if (prec_of(e) < min_prec)
    {
        out += '(';
        print_expr(out, e);
        out += ')';
    }
    else
        print_expr(out, e);
}

void print_expr(std::string& out, const Expr& e)
{
    if (const auto* v = e.get_if<ValExpr>())
        out += to_string(v->value);
    else if (const auto* x = e.get_if<VarExpr>())
        out += x->name;
    else if (const auto* b = e.get_if<BalanceExpr>())
    {
        print_at(out, b->target, PrecPostfix);
        out += ".balance";
    }
    else if (const auto* f = e.get_if<FieldExpr>())
    {
        print_at(out, f->target, PrecPostfix);
        out += '.';
        out += f->field;
    }
    else
    {
        const auto& o = *e.get_if<OpExpr>();
        if (o.op == OpKind::Not)
        {
            out += "not ";
            print_at(out, o.args[0], PrecUnary);
        }
        else if (o.op == OpKind::Neg)
        {
            out += '-';
            // A literal right after '-' would read back as a negative literal.
            const auto* lit = o.args[0].get_if<ValExpr>();
            print_at(out, o.args[0], lit && lit->value.is_int() ? PrecAtom + 1 : PrecUnary);
        }
        else
        {
            const int p = binary_prec(o.op);
            print_at(out, o.args[0], p);
            out += ' ';
            out += to_string(o.op);
            out += ' ';
            print_at(out, o.args[1], p + 1);
        }
    }
}

void print_stm(std::string& out, const Stm& s);

// Operand of if/for/var: a sequence needs braces.
void print_simple(std::string& out, const Stm& s)
{
    if (s.get_if<SeqStm>())
    {
        out += "{ ";
        print_stm(out, s);
        out += " }";
    }
    else
        print_stm(out, s);
}

void print_args(std::string& out, const std::vector<Expr>& args)
{
    out += '(';
    for (std::size_t i = 0; i < args.size(); ++i)
    {
        if (i != 0)
            out += ", ";
        print_expr(out, args[i]);
    }
    out += ')';
}

void print_stm(std::string& out, const Stm& s)
{
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, SkipStm>)
                out += "skip";
            else if constexpr (std::is_same_v<T, ThrowStm>)
                out += "throw";
            else if constexpr (std::is_same_v<T, DeclVarStm>)
            {
                out += "var " + to_string(n.type) + " " + n.name + " := ";
                print_expr(out, n.init);
                out += " in ";
                print_simple(out, n.body);
            }
            else if constexpr (std::is_same_v<T, AssignStm>)
            {
                if (n.target.kind == LVal::Kind::ThisField)
                    out += "this.";
                out += n.target.name + " := ";
                print_expr(out, n.value);
            }
            else if constexpr (std::is_same_v<T, SeqStm>)
            {
                print_simple(out, n.first);
                out += "; ";
                print_stm(out, n.second);
            }
            else if constexpr (std::is_same_v<T, IfStm>)
            {
                out += "if ";
                print_expr(out, n.cond);
                out += " then ";
                print_simple(out, n.then_branch);
                out += " else ";
                print_simple(out, n.else_branch);
            }
            else if constexpr (std::is_same_v<T, ForStm>)
            {
                out += "for ";
                print_expr(out, n.guard);
                out += " do ";
                print_simple(out, n.body);
            }
            else
            {
                print_at(out, n.target, PrecPostfix);
                out += '.' + n.method;
                print_args(out, n.args);
                out += ':';
                print_expr(out, n.amount);
            }
        },
        s.node().v);
}
}  // namespace

std::string pretty_print(const Expr& e)
{
    std::string out;
    print_expr(out, e);
    return out;
}

std::string pretty_print(const Stm& s)
{
    std::string out;
    print_stm(out, s);
    return out;
}

std::string pretty_print(const ContractDecl& c)
{
    std::string out = "contract " + c.name;
    if (!c.iface.empty())
        out += " : " + c.iface;
    out += " {\n";
    out += "  balance := " + c.balance.str() + ";\n";
    for (const auto& f : c.fields)
        out += "  field " + f.name + " := " + to_string(f.init) + ";\n";
    for (const auto& m : c.methods)
    {
        out += "  " + m.name + "(";
        for (std::size_t i = 0; i < m.params.size(); ++i)
        {
            if (i != 0)
                out += ", ";
            out += m.params[i];
        }
        out += ") { " + pretty_print(m.body) + " }\n";
    }
    out += "}";
    return out;
}

std::string pretty_print(const Transaction& tx)
{
    std::string out = tx.caller + "->" + tx.target + "." + tx.method + "(";
    for (std::size_t i = 0; i < tx.args.size(); ++i)
    {
        if (i != 0)
            out += ", ";
        out += to_string(tx.args[i]);
    }
    out += "):(" + tx.amount.str() + "," + tx.gas.str() + ")";
    return out;
}

std::string pretty_print(const InterfaceDecl& i)
{
    std::string out = "interface " + i.name + " {\n";
    for (const auto& [name, member] : i.members)
    {
        if (name == balance_field || name == send_method)
            continue;
        out += "  " + name;
        if (const auto* b = std::get_if<BaseType>(&member))
            out += " : " + to_string(*b);
        else
            out += to_string(std::get<MethodType>(member));
        out += ";\n";
    }
    out += "}";
    return out;
}

std::string pretty_print(const Blockchain& b)
{
    std::string out;
    for (const auto& i : b.interfaces)
        out += pretty_print(i) + "\n\n";
    for (const auto& c : b.contracts)
        out += pretty_print(c) + "\n\n";
    for (const auto& tx : b.txs)
        out += pretty_print(tx) + "\n";
    return out;
}
}  // namespace tinysol
