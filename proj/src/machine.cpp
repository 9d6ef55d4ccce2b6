// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tinysol/machine.hpp"

namespace tinysol
{
std::string_view to_string(ExcLabel l) noexcept
{
    switch (l)
    {
    case ExcLabel::Rte:
        return "rte";
    case ExcLabel::Neg:
        return "neg";
    case ExcLabel::Oog:
        return "oog";
    case ExcLabel::Pge:
        return "pge";
    }
    return "?";
}

std::optional<ExcLabel> exc_label_from_string(std::string_view s) noexcept
{
    for (auto l : {ExcLabel::Rte, ExcLabel::Neg, ExcLabel::Oog, ExcLabel::Pge})
        if (to_string(l) == s)
            return l;
    return std::nullopt;
}

std::string_view to_string(Rule r) noexcept
{
    switch (r)
    {
    case Rule::Skip:
        return "ss-skip";
    case Rule::Seq:
        return "ss-seq";
    case Rule::If:
        return "ss-if";
    case Rule::ForTrue:
        return "ss-for_T";
    case Rule::ForFalse:
        return "ss-for_F";
    case Rule::DeclVar:
        return "ss-decv";
    case Rule::AssignVar:
        return "ss-assv";
    case Rule::AssignField:
        return "ss-assf";
    case Rule::Call:
        return "ss-call";
    case Rule::Throw:
        return "ss-throw";
    case Rule::OutOfGas:
        return "ss-oog";
    case Rule::DeleteVar:
        return "ss-delv";
    case Rule::Return:
        return "ss-return";
    case Rule::RuntimeError:
        return "ss-rte";
    case Rule::NegativeBalance:
        return "ss-neg";
    }
    return "?";
}

bool consumes_gas(Rule r) noexcept
{
    switch (r)
    {
    case Rule::Skip:
    case Rule::If:
    case Rule::ForTrue:
    case Rule::ForFalse:
    case Rule::DeclVar:
    case Rule::AssignVar:
    case Rule::AssignField:
    case Rule::Call:
        return true;
    default:
        return false;
    }
}

namespace
{
EvalError eval_error(EvalErrorKind kind, std::string msg)
{
    return EvalError{kind, std::move(msg)};
}

const Int* int_arg(const std::vector<Value>& args, std::size_t i)
{
    return args[i].is_int() ? &args[i].as_int() : nullptr;
}

const Value* field_of(const State& state, const std::string& addr, std::string_view p)
{
    auto c = state.find(addr);
    if (c == state.end())
        return nullptr;
    auto f = c->second.find(p);
    return f == c->second.end() ? nullptr : &f->second;
}
}  // namespace

EvalResult apply_op(OpKind op, const std::vector<Value>& args)
{
    if (args.size() != arity(op))
        return eval_error(EvalErrorKind::TypeMismatch, "wrong number of operands for " + std::string{to_string(op)});

    switch (op)
    {
    case OpKind::Add:
    case OpKind::Sub:
    case OpKind::Mul:
    case OpKind::Div:
    case OpKind::Lt:
    case OpKind::Le:
    case OpKind::Gt:
    case OpKind::Ge: {
        const Int* a = int_arg(args, 0);
        const Int* b = int_arg(args, 1);
        if (!a || !b)
            return eval_error(EvalErrorKind::TypeMismatch,
                              "operator " + std::string{to_string(op)} + " expects integers");
        switch (op)
        {
        case OpKind::Add:
            return Value::integer(*a + *b);
        case OpKind::Sub:
            return Value::integer(*a - *b);
        case OpKind::Mul:
            return Value::integer(*a * *b);
        case OpKind::Div:
            if (b->is_zero())
                return eval_error(EvalErrorKind::DivisionByZero, "division by zero");
            // cpp_int division truncates toward zero.
            return Value::integer(*a / *b);
        case OpKind::Lt:
            return Value::boolean(*a < *b);
        case OpKind::Le:
            return Value::boolean(*a <= *b);
        case OpKind::Gt:
            return Value::boolean(*a > *b);
        default:
            return Value::boolean(*a >= *b);
        }
    }
    case OpKind::Eq: {
        const bool same_kind = (args[0].is_int() && args[1].is_int()) ||
                               (args[0].is_bool() && args[1].is_bool()) ||
                               (args[0].is_address() && args[1].is_address());
        if (!same_kind)
            return eval_error(EvalErrorKind::TypeMismatch, "== compares values of different kinds");
        return Value::boolean(args[0] == args[1]);
    }
    case OpKind::And:
    case OpKind::Or:
        if (!args[0].is_bool() || !args[1].is_bool())
            return eval_error(EvalErrorKind::TypeMismatch,
                              "operator " + std::string{to_string(op)} + " expects booleans");
        return Value::boolean(op == OpKind::And ? args[0].as_bool() && args[1].as_bool()
                                                : args[0].as_bool() || args[1].as_bool());
    case OpKind::Not:
        if (!args[0].is_bool())
            return eval_error(EvalErrorKind::TypeMismatch, "not expects a boolean");
        return Value::boolean(!args[0].as_bool());
    case OpKind::Neg:
        if (!args[0].is_int())
            return eval_error(EvalErrorKind::TypeMismatch, "negation expects an integer");
        return Value::integer(-args[0].as_int());
    }
    return eval_error(EvalErrorKind::TypeMismatch, "unknown operator");
}

EvalResult eval_expr(const State& state, const VarEnv& vars, const Expr& e)
{
    if (const auto* v = e.get_if<ValExpr>())
        return v->value;
    if (const auto* x = e.get_if<VarExpr>())
    {
        if (const Binding* b = var_lookup(vars, x->name))
            return b->value;
        return eval_error(EvalErrorKind::UnboundVariable, "variable " + x->name + " is not bound");
    }

    const bool is_balance = e.get_if<BalanceExpr>() != nullptr;
    if (is_balance || e.get_if<FieldExpr>())
    {
        const Expr& target = is_balance ? e.get_if<BalanceExpr>()->target : e.get_if<FieldExpr>()->target;
        const std::string p = is_balance ? std::string{balance_field} : e.get_if<FieldExpr>()->field;
        EvalResult r = eval_expr(state, vars, target);
        if (auto* err = std::get_if<EvalError>(&r))
            return *err;
        const Value& recv = std::get<Value>(r);
        if (!recv.is_address())
            return eval_error(EvalErrorKind::NotAnAddress, "field access on " + to_string(recv));
        if (const Value* v = field_of(state, recv.as_address(), p))
            return *v;
        return eval_error(EvalErrorKind::MissingField, "contract " + recv.as_address() + " has no field " + p);
    }

    // Operands are evaluated left to right, all of them (no short-circuit).
    const auto& o = *e.get_if<OpExpr>();
    std::vector<Value> vals;
    vals.reserve(o.args.size());
    for (const auto& a : o.args)
    {
        EvalResult r = eval_expr(state, vars, a);
        if (auto* err = std::get_if<EvalError>(&r))
            return *err;
        vals.push_back(std::move(std::get<Value>(r)));
    }
    return apply_op(o.op, vals);
}

std::optional<Halt> halted(const Config& c)
{
    if (c.stack.empty())
        return Halt{};
    if (const auto* exc = std::get_if<ExcFrame>(&c.stack.back()))
        return Halt{exc->label};
    return std::nullopt;
}

namespace
{
// Applies one rule to c in place. Returns the rule and, for RuntimeError,
// the failed side condition.
std::pair<Rule, std::string> apply_rule(const MethodTable& table, Config& c)
{
    Stack& q = c.stack;
    const Frame top = q.back();

    if (const auto* scope = std::get_if<ScopeEnd>(&top))
    {
        if (c.vars.empty() || c.vars.front().name != scope->name)
        {
            q.push_back(ExcFrame{ExcLabel::Rte});
            return {Rule::RuntimeError, "scope end of " + scope->name + " does not match the newest binding"};
        }
        q.pop_back();
        c.vars.erase(c.vars.begin());
        return {Rule::DeleteVar, {}};
    }
    if (const auto* saved = std::get_if<VarEnv>(&top))
    {
        c.vars = *saved;
        q.pop_back();
        return {Rule::Return, {}};
    }

    const Stm& s = std::get<Stm>(top);
    if (c.gas.is_zero())
    {
        q.push_back(ExcFrame{ExcLabel::Oog});
        return {Rule::OutOfGas, {}};
    }

    auto fail = [&](std::string why) -> std::pair<Rule, std::string> {
        q.push_back(ExcFrame{ExcLabel::Rte});
        return {Rule::RuntimeError, std::move(why)};
    };
    auto eval = [&](const Expr& e, std::string& why) -> std::optional<Value> {
        EvalResult r = eval_expr(c.state, c.vars, e);
        if (auto* err = std::get_if<EvalError>(&r))
        {
            why = err->message;
            return std::nullopt;
        }
        return std::get<Value>(std::move(r));
    };
    auto pay = [&] { c.gas -= 1; };

    return std::visit(
        [&](const auto& n) -> std::pair<Rule, std::string> {
            using T = std::decay_t<decltype(n)>;
            std::string why;
            if constexpr (std::is_same_v<T, SkipStm>)
            {
                q.pop_back();
                pay();
                return {Rule::Skip, {}};
            }
            else if constexpr (std::is_same_v<T, ThrowStm>)
            {
                q.back() = ExcFrame{ExcLabel::Pge};
                return {Rule::Throw, {}};
            }
            else if constexpr (std::is_same_v<T, SeqStm>)
            {
                q.back() = n.second;
                q.push_back(n.first);
                return {Rule::Seq, {}};
            }
            else if constexpr (std::is_same_v<T, IfStm>)
            {
                auto v = eval(n.cond, why);
                if (!v)
                    return fail(why);
                if (!v->is_bool())
                    return fail("if guard is not a boolean");
                q.back() = v->as_bool() ? n.then_branch : n.else_branch;
                pay();
                return {Rule::If, {}};
            }
            else if constexpr (std::is_same_v<T, ForStm>)
            {
                auto v = eval(n.guard, why);
                if (!v)
                    return fail(why);
                if (!v->is_int())
                    return fail("for guard is not an integer");
                pay();
                if (v->as_int() < 1)
                {
                    q.pop_back();
                    return {Rule::ForFalse, {}};
                }
                q.back() = st::for_(ex::integer(v->as_int() - 1), n.body);
                q.push_back(n.body);
                return {Rule::ForTrue, {}};
            }
            else if constexpr (std::is_same_v<T, DeclVarStm>)
            {
                if (var_lookup(c.vars, n.name))
                    return fail("variable " + n.name + " is already bound");
                auto v = eval(n.init, why);
                if (!v)
                    return fail(why);
                q.back() = ScopeEnd{n.name};
                q.push_back(n.body);
                c.vars.insert(c.vars.begin(), Binding{n.name, std::move(*v), n.type});
                pay();
                return {Rule::DeclVar, {}};
            }
            else if constexpr (std::is_same_v<T, AssignStm>)
            {
                if (n.target.kind == LVal::Kind::Var)
                {
                    if (!var_lookup(c.vars, n.target.name))
                        return fail("variable " + n.target.name + " is not bound");
                    auto v = eval(n.value, why);
                    if (!v)
                        return fail(why);
                    c.vars = var_update(c.vars, n.target.name, std::move(*v));
                    q.pop_back();
                    pay();
                    return {Rule::AssignVar, {}};
                }
                const Binding* self = var_lookup(c.vars, magic_this);
                if (!self || !self->value.is_address())
                    return fail("this is not bound to an address");
                const std::string& x = self->value.as_address();
                if (n.target.name == balance_field)
                    return fail("balance cannot be assigned directly");
                if (!field_of(c.state, x, n.target.name))
                    return fail("contract " + x + " has no field " + n.target.name);
                auto v = eval(n.value, why);
                if (!v)
                    return fail(why);
                c.state = state_update_field(c.state, x, n.target.name, std::move(*v));
                q.pop_back();
                pay();
                return {Rule::AssignField, {}};
            }
            else
            {
                auto y = eval(n.target, why);
                if (!y)
                    return fail(why);
                auto amount = eval(n.amount, why);
                if (!amount)
                    return fail(why);
                std::vector<Value> args;
                for (const auto& a : n.args)
                {
                    auto v = eval(a, why);
                    if (!v)
                        return fail(why);
                    args.push_back(std::move(*v));
                }
                const Binding* self = var_lookup(c.vars, magic_this);
                if (!self || !self->value.is_address())
                    return fail("this is not bound to an address");
                const std::string x = self->value.as_address();
                const Value* x_balance = field_of(c.state, x, balance_field);
                if (!x_balance || !x_balance->is_int())
                    return fail("caller " + x + " has no balance");
                if (!y->is_address())
                    return fail("call receiver " + to_string(*y) + " is not an address");
                const std::string& target = y->as_address();
                auto methods = table.find(target);
                const Method* m = methods == table.end() ? nullptr : methods->second.find(n.method);
                if (!m)
                    return fail("contract " + target + " has no method " + n.method);
                if (m->params.size() != args.size())
                    return fail("method " + target + "." + n.method + " expects " +
                                std::to_string(m->params.size()) + " arguments");
                if (!field_of(c.state, target, balance_field))
                    return fail("no contract at address " + target);
                if (!amount->is_int())
                    return fail("transfer amount is not an integer");
                const Int& sent = amount->as_int();
                if (sent > x_balance->as_int())
                {
                    q.push_back(ExcFrame{ExcLabel::Neg});
                    return {Rule::NegativeBalance, {}};
                }

                VarEnv callee;
                callee.reserve(3 + args.size());
                callee.push_back({std::string{magic_this}, *y, BaseType::iface(methods->second.iface)});
                callee.push_back({std::string{magic_sender}, Value::address(x),
                                  BaseType::iface(std::string{top_interface_name})});
                callee.push_back({std::string{magic_value}, *amount, m->value_type});
                for (std::size_t i = 0; i < args.size(); ++i)
                    callee.push_back({m->params[i], std::move(args[i]), m->param_types[i]});

                c.state = transfer(c.state, x, target, sent);
                q.back() = std::move(c.vars);
                q.push_back(m->body);
                c.vars = std::move(callee);
                pay();
                return {Rule::Call, {}};
            }
        },
        s.node().v);
}
}  // namespace

std::variant<Stepped, Halt> step(const MethodTable& table, const Config& c)
{
    if (auto h = halted(c))
        return *h;
    Stepped out{Rule::Skip, c, {}};
    auto [rule, detail] = apply_rule(table, out.next);
    out.rule = rule;
    out.detail = std::move(detail);
    return out;
}

Json to_json(const TraceEntry& t)
{
    Json j = {
        {"rule", to_string(t.rule)},
        {"gas_before", to_json(t.gas_before)},
        {"gas_after", to_json(t.gas_after)},
        {"stack_depth", t.stack_depth},
    };
    if (t.exception)
        j["exception"] = to_string(*t.exception);
    return j;
}

RunResult run(const MethodTable& table, Config c, bool record_trace)
{
    RunResult out;
    while (true)
    {
        if (auto h = halted(c))
        {
            out.halt = *h;
            break;
        }
        const Int before = c.gas;
        const Rule rule = apply_rule(table, c).first;
        ++out.steps;
        if (record_trace)
        {
            std::optional<ExcLabel> exc;
            if (const auto* e = c.stack.empty() ? nullptr : std::get_if<ExcFrame>(&c.stack.back()))
                exc = e->label;
            out.trace.push_back({rule, before, c.gas, c.stack.size(), exc});
        }
    }
    out.final = std::move(c);
    return out;
}

Config make_config(Stm s, State state, VarEnv vars, Int gas)
{
    Config c;
    c.stack.push_back(std::move(s));
    c.state = std::move(state);
    c.vars = std::move(vars);
    c.gas = std::move(gas);
    return c;
}
}  // namespace tinysol
