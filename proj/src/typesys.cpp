// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tinysol/typesys.hpp"

#include <algorithm>
#include <set>

namespace tinysol
{
const std::string& TypeEnv::iface_of(std::string_view address) const
{
    auto it = addresses.find(address);
    if (it == addresses.end())
        throw Error(ErrorCode::UnboundName, "unknown address " + std::string{address});
    return it->second;
}

const InterfaceDecl& TypeEnv::iface(std::string_view name) const
{
    auto it = interfaces.find(std::string{name});
    if (it == interfaces.end())
        throw Error(ErrorCode::UnknownInterface, "unknown interface " + std::string{name});
    return it->second;
}

namespace
{
void require_known(const InterfaceTable& t, const BaseType& b, const std::string& where, SourceLoc loc)
{
    if (b.is_iface() && t.count(b.iface_name()) == 0)
        throw Error(ErrorCode::UnknownInterface, where + " refers to unknown interface " + b.iface_name(), loc);
}
}  // namespace

TypeEnv make_type_env(const Blockchain& b)
{
    TypeEnv g;
    g.interfaces.emplace(std::string{top_interface_name}, top_interface());
    for (const auto& i : b.interfaces)
        if (!g.interfaces.emplace(i.name, i).second)
            throw Error(ErrorCode::DuplicateName, "interface " + i.name + " is declared twice", i.loc);

    for (const auto& [name, decl] : g.interfaces)
    {
        for (const auto& [member, type] : decl.members)
        {
            const std::string where = "member " + name + "." + member;
            if (const auto* f = std::get_if<BaseType>(&type))
                require_known(g.interfaces, *f, where, decl.loc);
            else
                for (const auto& p : std::get<MethodType>(type).params)
                    require_known(g.interfaces, p, where, decl.loc);
        }
    }

    for (const auto& c : b.contracts)
    {
        const std::string iface = c.interface_name();
        if (g.interfaces.count(iface) == 0)
            throw Error(ErrorCode::UnknownInterface, "contract " + c.name + " uses unknown interface " + iface,
                        c.loc);
        if (!g.addresses.emplace(c.name, iface).second)
            throw Error(ErrorCode::DuplicateContract, "contract " + c.name + " is declared twice", c.loc);
    }
    return g;
}

const BaseType* lookup(const VarTypes& delta, std::string_view x)
{
    for (const auto& [name, type] : delta)
        if (name == x)
            return &type;
    return nullptr;
}

// ---- subtyping ----

namespace
{
using Assumed = std::set<std::pair<std::string, std::string>>;

bool sub_base(const TypeEnv& g, const BaseType& a, const BaseType& b, Assumed& assumed);

bool sub_iface(const TypeEnv& g, std::string_view a, std::string_view b, Assumed& assumed)
{
    if (a == b)
        return true;
    if (!assumed.emplace(std::string{a}, std::string{b}).second)
        return true;
    const InterfaceDecl& ia = g.iface(a);
    const InterfaceDecl& ib = g.iface(b);
    for (const auto& [name, mb] : ib.members)
    {
        auto it = ia.members.find(name);
        if (it == ia.members.end())
            return false;
        const Member& ma = it->second;
        if (ma.index() != mb.index())
            return false;
        if (const auto* fb = std::get_if<BaseType>(&mb))
        {
            if (!sub_base(g, std::get<BaseType>(ma), *fb, assumed))
                return false;
            continue;
        }
        const auto& pa = std::get<MethodType>(ma);
        const auto& pb = std::get<MethodType>(mb);
        if (pa.steps > pb.steps || pa.hi > pb.hi || pa.lo < pb.lo || pa.params.size() != pb.params.size())
            return false;
        for (std::size_t i = 0; i < pa.params.size(); ++i)
            if (!sub_base(g, pa.params[i], pb.params[i], assumed))
                return false;
    }
    return true;
}

bool sub_base(const TypeEnv& g, const BaseType& a, const BaseType& b, Assumed& assumed)
{
    if (a == b)
        return true;
    if (a.is_range() && b.is_int())
        return true;
    if (a.is_range() && b.is_range())
        return a.as_range().hi <= b.as_range().hi && a.as_range().lo >= b.as_range().lo;
    if (a.is_iface() && b.is_iface())
        return sub_iface(g, a.iface_name(), b.iface_name(), assumed);
    return false;
}
}  // namespace

bool subtype(const TypeEnv& g, const BaseType& a, const BaseType& b)
{
    Assumed assumed;
    return sub_base(g, a, b, assumed);
}

bool subtype(const TypeEnv& g, const MethodType& a, const MethodType& b)
{
    if (a.steps > b.steps || a.hi > b.hi || a.lo < b.lo || a.params.size() != b.params.size())
        return false;
    for (std::size_t i = 0; i < a.params.size(); ++i)
        if (!subtype(g, a.params[i], b.params[i]))
            return false;
    return true;
}

bool subtype(const TypeEnv& g, const Member& a, const Member& b)
{
    if (a.index() != b.index())
        return false;
    if (const auto* fa = std::get_if<BaseType>(&a))
        return subtype(g, *fa, std::get<BaseType>(b));
    return subtype(g, std::get<MethodType>(a), std::get<MethodType>(b));
}

bool interface_subtype(const TypeEnv& g, std::string_view a, std::string_view b)
{
    Assumed assumed;
    return sub_iface(g, a, b, assumed);
}

// ---- expressions ----

BaseType op_signature(OpKind op, const std::vector<BaseType>& args)
{
    if (args.size() != arity(op))
        throw Error(ErrorCode::OperatorTypeError, "operator " + std::string{to_string(op)} + " has the wrong arity");
    auto fail = [&]() -> BaseType {
        std::string types;
        for (const auto& a : args)
            types += (types.empty() ? "" : ", ") + to_string(a);
        throw Error(ErrorCode::OperatorTypeError,
                    "operator " + std::string{to_string(op)} + " does not apply to (" + types + ")");
    };
    const bool all_integral = std::all_of(args.begin(), args.end(), [](const BaseType& t) { return t.is_integral(); });
    const bool all_ranges = std::all_of(args.begin(), args.end(), [](const BaseType& t) { return t.is_range(); });

    switch (op)
    {
    case OpKind::Add:
    case OpKind::Sub:
    case OpKind::Mul: {
        if (!all_integral)
            return fail();
        if (!all_ranges)
            return BaseType::integer();
        const auto& a = args[0].as_range();
        const auto& b = args[1].as_range();
        if (op == OpKind::Add)
            return BaseType::range(a.lo + b.lo, a.hi + b.hi);
        if (op == OpKind::Sub)
            return BaseType::range(a.lo - b.hi, a.hi - b.lo);
        const Int corners[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
        return BaseType::range(*std::min_element(std::begin(corners), std::end(corners)),
                               *std::max_element(std::begin(corners), std::end(corners)));
    }
    case OpKind::Div:
        if (!all_integral)
            return fail();
        return BaseType::integer();
    case OpKind::Neg:
        if (!all_integral)
            return fail();
        if (!all_ranges)
            return BaseType::integer();
        return BaseType::range(-args[0].as_range().hi, -args[0].as_range().lo);
    case OpKind::Lt:
    case OpKind::Le:
    case OpKind::Gt:
    case OpKind::Ge:
        if (!all_integral)
            return fail();
        return BaseType::boolean();
    case OpKind::Eq: {
        const bool same = all_integral || (args[0].is_bool() && args[1].is_bool()) ||
                          (args[0].is_iface() && args[1].is_iface());
        if (!same)
            return fail();
        return BaseType::boolean();
    }
    case OpKind::And:
    case OpKind::Or:
    case OpKind::Not:
        if (!std::all_of(args.begin(), args.end(), [](const BaseType& t) { return t.is_bool(); }))
            return fail();
        return BaseType::boolean();
    }
    return fail();
}

BaseType type_value(const TypeEnv& g, const Value& v)
{
    if (v.is_int())
        return BaseType::range(v.as_int(), v.as_int());
    if (v.is_bool())
        return BaseType::boolean();
    return BaseType::iface(g.iface_of(v.as_address()));
}

bool value_has_type(const TypeEnv& g, const Value& v, const BaseType& t)
{
    if (v.is_address() && g.addresses.find(v.as_address()) == g.addresses.end())
        return false;
    return subtype(g, type_value(g, v), t);
}

namespace
{
const InterfaceDecl& receiver_iface(const TypeEnv& g, const VarTypes& delta, const Expr& target,
                                    const std::string& what)
{
    const BaseType t = type_expr(g, delta, target);
    if (!t.is_iface())
        throw Error(ErrorCode::TypeMismatch,
                    what + " on " + pretty_print(target) + " of non-contract type " + to_string(t));
    return g.iface(t.iface_name());
}
}  // namespace

BaseType type_expr(const TypeEnv& g, const VarTypes& delta, const Expr& e)
{
    if (const auto* v = e.get_if<ValExpr>())
        return type_value(g, v->value);
    if (const auto* x = e.get_if<VarExpr>())
    {
        if (const BaseType* t = lookup(delta, x->name))
            return *t;
        throw Error(ErrorCode::UnboundName, "variable " + x->name + " is not declared");
    }
    if (const auto* b = e.get_if<BalanceExpr>())
    {
        const InterfaceDecl& i = receiver_iface(g, delta, b->target, "field access");
        if (const BaseType* t = i.field(std::string{balance_field}))
            return *t;
        throw Error(ErrorCode::NoSuchMember, "interface " + i.name + " has no field balance");
    }
    if (const auto* f = e.get_if<FieldExpr>())
    {
        const InterfaceDecl& i = receiver_iface(g, delta, f->target, "field access");
        if (const BaseType* t = i.field(f->field))
            return *t;
        throw Error(ErrorCode::NoSuchMember, "interface " + i.name + " has no field " + f->field);
    }
    const auto& o = *e.get_if<OpExpr>();
    std::vector<BaseType> args;
    for (const auto& a : o.args)
        args.push_back(type_expr(g, delta, a));
    return op_signature(o.op, args);
}

// ---- statements ----

namespace
{
void require_subtype(const TypeEnv& g, const BaseType& actual, const BaseType& expected, const std::string& what)
{
    if (!subtype(g, actual, expected))
        throw Error(ErrorCode::TypeMismatch,
                    what + " has type " + to_string(actual) + ", expected " + to_string(expected));
}
}  // namespace

Int type_stmt(const TypeEnv& g, const VarTypes& delta, const Stm& s)
{
    return std::visit(
        [&](const auto& n) -> Int {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, SkipStm> || std::is_same_v<T, ThrowStm>)
                return 1;
            else if constexpr (std::is_same_v<T, AssignStm>)
            {
                const BaseType actual = type_expr(g, delta, n.value);
                if (n.target.kind == LVal::Kind::Var)
                {
                    const BaseType* target = lookup(delta, n.target.name);
                    if (!target)
                        throw Error(ErrorCode::UnboundName, "variable " + n.target.name + " is not declared");
                    require_subtype(g, actual, *target, "right-hand side of " + n.target.name + " := ...");
                    return 1;
                }
                if (n.target.name == balance_field)
                    throw Error(ErrorCode::TypeMismatch, "balance cannot be assigned directly");
                const InterfaceDecl& self = receiver_iface(g, delta, ex::var(std::string{magic_this}), "assignment");
                const BaseType* target = self.field(n.target.name);
                if (!target)
                    throw Error(ErrorCode::NoSuchMember, "interface " + self.name + " has no field " + n.target.name);
                require_subtype(g, actual, *target, "right-hand side of this." + n.target.name + " := ...");
                return 1;
            }
            else if constexpr (std::is_same_v<T, DeclVarStm>)
            {
                if (n.type.is_iface())
                    (void)g.iface(n.type.iface_name());
                require_subtype(g, type_expr(g, delta, n.init), n.type, "initialiser of " + n.name);
                VarTypes inner;
                inner.reserve(delta.size() + 1);
                inner.emplace_back(n.name, n.type);
                inner.insert(inner.end(), delta.begin(), delta.end());
                return type_stmt(g, inner, n.body) + 2;
            }
            else if constexpr (std::is_same_v<T, SeqStm>)
                return type_stmt(g, delta, n.first) + type_stmt(g, delta, n.second) + 1;
            else if constexpr (std::is_same_v<T, IfStm>)
            {
                require_subtype(g, type_expr(g, delta, n.cond), BaseType::boolean(), "if guard");
                return std::max(type_stmt(g, delta, n.then_branch), type_stmt(g, delta, n.else_branch)) + 1;
            }
            else if constexpr (std::is_same_v<T, ForStm>)
            {
                const BaseType guard = type_expr(g, delta, n.guard);
                if (guard.is_int())
                    throw Error(ErrorCode::UnboundedLoopGuard,
                                "loop guard " + pretty_print(n.guard) + " has unbounded type int");
                if (!guard.is_range())
                    throw Error(ErrorCode::TypeMismatch,
                                "loop guard " + pretty_print(n.guard) + " has type " + to_string(guard));
                const Int body = type_stmt(g, delta, n.body);
                return std::max(Int{1}, Int{guard.as_range().hi * (body + 1) + 1});
            }
            else
            {
                const InterfaceDecl& i = receiver_iface(g, delta, n.target, "method call");
                const MethodType* m = i.method(n.method);
                if (!m)
                    throw Error(ErrorCode::UnknownMethod, "interface " + i.name + " has no method " + n.method);
                if (m->params.size() != n.args.size())
                    throw Error(ErrorCode::TypeMismatch, "method " + i.name + "." + n.method + " takes " +
                                                             std::to_string(m->params.size()) + " arguments, " +
                                                             std::to_string(n.args.size()) + " given");
                for (std::size_t k = 0; k < n.args.size(); ++k)
                    require_subtype(g, type_expr(g, delta, n.args[k]), m->params[k],
                                    "argument " + std::to_string(k + 1) + " of " + n.method);
                const BaseType amount = type_expr(g, delta, n.amount);
                const BaseType accepted = BaseType::range(m->lo, m->hi);
                if (!subtype(g, amount, accepted))
                    throw Error(ErrorCode::AmountOutOfDeclaredRange, "amount " + pretty_print(n.amount) +
                                                                         " of type " + to_string(amount) +
                                                                         " does not fit " + to_string(accepted));
                return m->steps + 2;
            }
        },
        s.node().v);
}

Int min_gas(const TypeEnv& g, const VarTypes& delta, const Stm& s)
{
    return type_stmt(g, delta, s) + 1;
}

VarTypes method_context(const std::string& self_iface, const MethodType& m, const std::vector<std::string>& params)
{
    VarTypes delta;
    delta.emplace_back(std::string{magic_this}, BaseType::iface(self_iface));
    delta.emplace_back(std::string{magic_sender}, BaseType::iface(std::string{top_interface_name}));
    delta.emplace_back(std::string{magic_value}, BaseType::range(m.lo, m.hi));
    for (std::size_t i = 0; i < params.size() && i < m.params.size(); ++i)
        delta.emplace_back(params[i], m.params[i]);
    return delta;
}

Stm transaction_call(const Transaction& tx)
{
    std::vector<Expr> args;
    for (const auto& v : tx.args)
        args.push_back(ex::val(v));
    return st::call(ex::address(tx.target), tx.method, std::move(args), ex::integer(tx.amount));
}

Int transaction_bound(const TypeEnv& g, const Transaction& tx)
{
    const VarTypes delta{{std::string{magic_this}, BaseType::iface(g.iface_of(tx.caller))}};
    return type_stmt(g, delta, transaction_call(tx));
}

// ---- declarations ----

Json to_json(const Diagnostic& d)
{
    Json j = {{"code", to_string(d.code)}, {"message", d.message}};
    if (d.loc)
        j["loc"] = {{"line", d.loc->line}, {"column", d.loc->column}};
    if (!d.contract.empty())
        j["contract"] = d.contract;
    if (!d.member.empty())
        j["member"] = d.member;
    return j;
}

Json to_json(const CheckReport& r)
{
    Json methods = Json::object();
    for (const auto& [contract, ms] : r.methods)
    {
        Json c = Json::object();
        for (const auto& [name, m] : ms)
            c[name] = {{"declared_n", to_json(m.declared_n)},
                       {"computed_n", to_json(m.computed_n)},
                       {"min_gas", to_json(m.min_gas)}};
        methods[contract] = c;
    }
    Json diags = Json::array();
    for (const auto& d : r.diagnostics)
        diags.push_back(to_json(d));
    return {{"methods", methods}, {"diagnostics", diags}, {"ok", r.ok()}};
}

CheckReport check_declarations(const TypeEnv& g, const std::vector<ContractDecl>& decls)
{
    CheckReport report;
    auto diag = [&](ErrorCode code, std::string msg, std::optional<SourceLoc> loc, const std::string& contract,
                    const std::string& member) {
        report.diagnostics.push_back({code, std::move(msg), loc, contract, member});
    };

    for (const auto& c : decls)
    {
        const InterfaceDecl* iface = nullptr;
        try
        {
            validate_contract_shape(c);
            iface = &g.iface(g.iface_of(c.name));
        }
        catch (const Error& e)
        {
            diag(e.code(), e.message(), e.loc() ? e.loc() : c.loc, c.name, "");
            continue;
        }

        std::set<std::string> implemented{std::string{balance_field}, std::string{send_method}};
        for (const auto& f : c.fields)
        {
            implemented.insert(f.name);
            const BaseType* t = iface->field(f.name);
            if (!t)
            {
                diag(ErrorCode::MissingInterfaceMember,
                     "field " + f.name + " is not declared by interface " + iface->name, f.loc, c.name, f.name);
                continue;
            }
            if (!value_has_type(g, f.init, *t))
                diag(ErrorCode::FieldTypeMismatch,
                     "field " + f.name + " is initialised with " + to_string(f.init) + ", not a " + to_string(*t),
                     f.loc, c.name, f.name);
        }

        for (const auto& m : c.methods)
        {
            implemented.insert(m.name);
            const MethodType* t = iface->method(m.name);
            if (!t)
            {
                diag(ErrorCode::MissingInterfaceMember,
                     "method " + m.name + " is not declared by interface " + iface->name, m.loc, c.name, m.name);
                continue;
            }
            if (t->params.size() != m.params.size())
            {
                diag(ErrorCode::TypeMismatch,
                     "method " + m.name + " has " + std::to_string(m.params.size()) + " parameters, interface " +
                         iface->name + " declares " + std::to_string(t->params.size()),
                     m.loc, c.name, m.name);
                continue;
            }
            Int computed;
            try
            {
                computed = type_stmt(g, method_context(iface->name, *t, m.params), m.body);
            }
            catch (const Error& e)
            {
                diag(e.code(), c.name + "." + m.name + ": " + e.message(), m.loc, c.name, m.name);
                continue;
            }
            report.methods[c.name][m.name] = {t->steps, computed, t->steps + 3};
            if (computed > t->steps)
                diag(ErrorCode::BodyExceedsDeclaredBound,
                     c.name + "." + m.name + " needs " + computed.str() + " steps but declares " + t->steps.str(),
                     m.loc, c.name, m.name);
        }

        for (const auto& [name, member] : iface->members)
        {
            (void)member;
            if (implemented.count(name) == 0)
                diag(ErrorCode::MissingInterfaceMember,
                     "contract " + c.name + " does not implement " + iface->name + "." + name, c.loc, c.name, name);
        }
    }
    return report;
}

CheckReport check_program(const Blockchain& b)
{
    try
    {
        const TypeEnv g = make_type_env(b);
        return check_declarations(g, b.contracts);
    }
    catch (const Error& e)
    {
        CheckReport r;
        r.diagnostics.push_back({e.code(), e.message(), e.loc(), "", ""});
        return r;
    }
}

// ---- runtime agreement ----

Agreement check_state(const TypeEnv& g, const State& state)
{
    Agreement out;
    for (const auto& [addr, fields] : state)
    {
        auto it = g.addresses.find(addr);
        if (it == g.addresses.end())
        {
            out.problems.push_back("address " + addr + " has no interface");
            continue;
        }
        const InterfaceDecl& i = g.iface(it->second);
        for (const auto& [p, v] : fields)
        {
            const BaseType* t = i.field(p);
            if (!t)
                out.problems.push_back(addr + "." + p + " is not declared by " + i.name);
            else if (!value_has_type(g, v, *t))
                out.problems.push_back(addr + "." + p + " = " + to_string(v) + " is not a " + to_string(*t));
        }
    }
    return out;
}

Agreement check_table(const TypeEnv& g, const MethodTable& table)
{
    Agreement out;
    for (const auto& [addr, env] : table)
    {
        auto it = g.addresses.find(addr);
        if (it == g.addresses.end())
        {
            out.problems.push_back("address " + addr + " has no interface");
            continue;
        }
        const InterfaceDecl& i = g.iface(it->second);
        for (const auto& [f, m] : env.methods)
        {
            const MethodType* t = i.method(f);
            if (!t || t->params.size() != m.params.size())
            {
                out.problems.push_back(addr + "." + f + " is not declared by " + i.name);
                continue;
            }
            try
            {
                const Int n = type_stmt(g, method_context(i.name, *t, m.params), m.body);
                if (n > t->steps)
                    out.problems.push_back(addr + "." + f + " needs " + n.str() + " steps, declares " +
                                           t->steps.str());
            }
            catch (const Error& e)
            {
                out.problems.push_back(addr + "." + f + ": " + e.message());
            }
        }
    }
    return out;
}

Agreement check_vars(const TypeEnv& g, const VarTypes& delta, const VarEnv& vars)
{
    Agreement out;
    for (const auto& b : vars)
    {
        const BaseType* t = lookup(delta, b.name);
        if (!t)
            out.problems.push_back("variable " + b.name + " has no type");
        else if (!subtype(g, b.type, *t))
            out.problems.push_back("variable " + b.name + " recorded at " + to_string(b.type) + ", typed " +
                                   to_string(*t));
        else if (!value_has_type(g, b.value, *t))
            out.problems.push_back("variable " + b.name + " = " + to_string(b.value) + " is not a " + to_string(*t));
    }
    return out;
}

Agreement check_env_agreement(const TypeEnv& g, const State& state, const MethodTable& table,
                              const VarTypes& delta, const VarEnv& vars)
{
    Agreement out = check_state(g, state);
    Agreement t = check_table(g, table);
    Agreement v = check_vars(g, delta, vars);
    out.problems.insert(out.problems.end(), t.problems.begin(), t.problems.end());
    out.problems.insert(out.problems.end(), v.problems.begin(), v.problems.end());
    return out;
}
}  // namespace tinysol
