// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tinysol/conformance.hpp"

#include <algorithm>
#include <stdexcept>

namespace tinysol
{
ParamResolver table_resolver(const MethodTable& table, const State& state, const VarEnv& vars)
{
    return [&table, &state, &vars](const Expr& target,
                                   const std::string& method) -> std::optional<std::vector<std::string>> {
        EvalResult r = eval_expr(state, vars, target);
        const Value* v = std::get_if<Value>(&r);
        if (!v || !v->is_address())
            return std::nullopt;
        auto env = table.find(v->as_address());
        if (env == table.end())
            return std::nullopt;
        const Method* m = env->second.find(method);
        if (!m)
            return std::nullopt;
        return m->params;
    };
}

namespace
{
VarTypes types_of(const VarEnv& env)
{
    VarTypes out;
    out.reserve(env.size());
    for (const auto& b : env)
        out.emplace_back(b.name, b.type);
    return out;
}

VarTypes pop_scope(const VarTypes& delta, const std::string& x)
{
    if (delta.empty() || delta.front().first != x)
        throw Error(ErrorCode::ExtractionUndefined, "scope end of " + x + " does not match the newest variable");
    return VarTypes(delta.begin() + 1, delta.end());
}

[[noreturn]] void undefined(const std::string& msg)
{
    throw Error(ErrorCode::ExtractionUndefined, msg);
}
}  // namespace

VarTypes extract(const TypeEnv& g, const VarTypes& delta, const Stack& q, const ParamResolver& resolve)
{
    if (q.empty())
        return delta;
    const Frame& top = q.back();
    if (const auto* saved = std::get_if<VarEnv>(&top))
        return types_of(*saved);
    if (const auto* scope = std::get_if<ScopeEnd>(&top))
        return pop_scope(delta, scope->name);
    const auto* s = std::get_if<Stm>(&top);
    if (!s)
        return delta;

    if (const auto* d = s->get_if<DeclVarStm>())
    {
        VarTypes out;
        out.reserve(delta.size() + 1);
        out.emplace_back(d->name, d->type);
        out.insert(out.end(), delta.begin(), delta.end());
        return out;
    }
    if (const auto* call = s->get_if<CallStm>())
    {
        BaseType target = BaseType::integer();
        try
        {
            target = type_expr(g, delta, call->target);
        }
        catch (const Error& e)
        {
            undefined("call target does not type: " + e.message());
        }
        if (!target.is_iface())
            undefined("call target has type " + to_string(target));
        const MethodType* m = g.iface(target.iface_name()).method(call->method);
        if (!m)
            undefined("interface " + target.iface_name() + " has no method " + call->method);
        const auto names = resolve(call->target, call->method);
        if (!names || names->size() != m->params.size())
            undefined("parameters of " + call->method + " cannot be resolved");
        return method_context(target.iface_name(), *m, *names);
    }
    return delta;
}

Int type_stack(const TypeEnv& g, const VarTypes& delta, const Stack& q)
{
    Int total = 0;
    VarTypes d = delta;
    for (auto it = q.rbegin(); it != q.rend(); ++it)
    {
        if (std::holds_alternative<ExcFrame>(*it))
            return total;
        if (const auto* s = std::get_if<Stm>(&*it))
            total += type_stmt(g, d, *s);
        else if (const auto* scope = std::get_if<ScopeEnd>(&*it))
            d = pop_scope(d, scope->name);
        else
            d = types_of(std::get<VarEnv>(*it));
    }
    return total;
}

ConfigTyping type_config(const TypeEnv& g, const VarTypes& delta, const Config& c)
{
    ConfigTyping out;
    try
    {
        out.n = type_stack(g, delta, c.stack);
    }
    catch (const Error& e)
    {
        out.reason = "stack does not type: " + e.message();
        return out;
    }
    const Agreement state = check_state(g, c.state);
    if (!state.ok())
    {
        out.reason = "state disagrees: " + state.problems.front();
        return out;
    }
    const Agreement vars = check_vars(g, delta, c.vars);
    if (!vars.ok())
    {
        out.reason = "variables disagree: " + vars.problems.front();
        return out;
    }
    if (out.n >= c.gas)
    {
        out.reason = "bound " + out.n.str() + " is not below gas " + c.gas.str();
        return out;
    }
    out.ok = true;
    return out;
}

std::string_view to_string(Verdict v) noexcept
{
    switch (v)
    {
    case Verdict::Passed:
        return "passed";
    case Verdict::Skipped:
        return "skipped";
    case Verdict::Counterexample:
        return "counterexample";
    }
    return "?";
}

ReductionCheck check_subject_reduction(const TypeEnv& g, const MethodTable& table, const Config& c,
                                       const VarTypes& delta, std::size_t max_steps)
{
    ReductionCheck out;
    const ConfigTyping start = type_config(g, delta, c);
    if (!start.ok)
    {
        out.verdict = Verdict::Skipped;
        out.detail = start.reason;
        return out;
    }
    out.initial_bound = start.n;

    auto counterexample = [&](const Config& at, std::string why) {
        out.verdict = Verdict::Counterexample;
        out.detail = "step " + std::to_string(out.steps) + " (gas " + at.gas.str() + "): " + std::move(why);
    };

    Config cur = c;
    VarTypes d = delta;
    Int n = start.n;
    while (out.steps < max_steps)
    {
        auto result = step(table, cur);
        if (auto* h = std::get_if<Halt>(&result))
        {
            out.halt = *h;
            break;
        }
        Stepped& s = std::get<Stepped>(result);
        ++out.steps;
        if (s.rule == Rule::OutOfGas)
        {
            counterexample(cur, "exc(oog) pushed");
            break;
        }
        // The reconstructed failure rules leave an exception on top; the
        // extraction describes successful steps only, so there is nothing
        // further to re-type.
        if (s.rule == Rule::RuntimeError || s.rule == Rule::NegativeBalance)
        {
            cur = std::move(s.next);
            continue;
        }

        VarTypes next_delta;
        try
        {
            next_delta = extract(g, d, cur.stack, table_resolver(table, cur.state, cur.vars));
        }
        catch (const Error& e)
        {
            counterexample(cur, std::string{to_string(s.rule)} + ": " + e.message());
            break;
        }
        const ConfigTyping t = type_config(g, next_delta, s.next);
        if (!t.ok)
        {
            counterexample(cur, std::string{to_string(s.rule)} + ": " + t.reason);
            break;
        }
        const Int limit = consumes_gas(s.rule) ? Int{n - 1} : n;
        if (t.n > limit)
        {
            counterexample(cur, std::string{to_string(s.rule)} + ": bound went from " + n.str() + " to " + t.n.str());
            break;
        }
        n = t.n;
        d = std::move(next_delta);
        cur = std::move(s.next);
    }
    out.gas_used = c.gas - cur.gas;
    return out;
}

// ---- rule applicability ----

std::vector<Rule> applicable_rules(const MethodTable& table, const Config& c)
{
    std::vector<Rule> out;
    if (c.stack.empty() || std::holds_alternative<ExcFrame>(c.stack.back()))
        return out;
    const Frame& top = c.stack.back();

    if (const auto* scope = std::get_if<ScopeEnd>(&top))
    {
        const bool head_matches = !c.vars.empty() && c.vars.front().name == scope->name;
        if (head_matches)
            out.push_back(Rule::DeleteVar);
        if (!head_matches)
            out.push_back(Rule::RuntimeError);
        return out;
    }
    if (std::holds_alternative<VarEnv>(top))
    {
        out.push_back(Rule::Return);
        return out;
    }

    const Stm& s = std::get<Stm>(top);
    const bool has_gas = c.gas >= 1;
    if (!has_gas)
        out.push_back(Rule::OutOfGas);

    auto value_of = [&](const Expr& e) -> std::optional<Value> {
        EvalResult r = eval_expr(c.state, c.vars, e);
        if (const auto* v = std::get_if<Value>(&r))
            return *v;
        return std::nullopt;
    };
    auto bound = [&](std::string_view x) { return var_lookup(c.vars, x) != nullptr; };
    auto fields_at = [&](const Value& a) -> const FieldEnv* {
        if (!a.is_address())
            return nullptr;
        auto it = c.state.find(a.as_address());
        return it == c.state.end() ? nullptr : &it->second;
    };

    bool success = false;
    bool negative = false;
    if (s.get_if<SkipStm>() || s.get_if<SeqStm>() || s.get_if<ThrowStm>())
        success = true;
    else if (const auto* i = s.get_if<IfStm>())
    {
        auto v = value_of(i->cond);
        success = v && v->is_bool();
    }
    else if (const auto* f = s.get_if<ForStm>())
    {
        auto v = value_of(f->guard);
        if (has_gas && v && v->is_int())
            out.push_back(v->as_int() >= 1 ? Rule::ForTrue : Rule::ForFalse);
        if (!(v && v->is_int()) && has_gas)
            out.push_back(Rule::RuntimeError);
        return out;
    }
    else if (const auto* d = s.get_if<DeclVarStm>())
        success = !bound(d->name) && value_of(d->init).has_value();
    else if (const auto* a = s.get_if<AssignStm>())
    {
        if (a->target.kind == LVal::Kind::Var)
            success = bound(a->target.name) && value_of(a->value).has_value();
        else
        {
            const Binding* self = var_lookup(c.vars, magic_this);
            const FieldEnv* fields = self ? fields_at(self->value) : nullptr;
            success = fields && a->target.name != balance_field && fields->count(a->target.name) != 0 &&
                      value_of(a->value).has_value();
        }
    }
    else if (const auto* call = s.get_if<CallStm>())
    {
        auto y = value_of(call->target);
        auto n = value_of(call->amount);
        bool args_ok = true;
        for (const auto& e : call->args)
            args_ok = args_ok && value_of(e).has_value();
        const Binding* self = var_lookup(c.vars, magic_this);
        const FieldEnv* px = self ? fields_at(self->value) : nullptr;
        const FieldEnv* py = y ? fields_at(*y) : nullptr;
        const Method* m = nullptr;
        if (y && y->is_address())
        {
            auto env = table.find(y->as_address());
            if (env != table.end())
                m = env->second.find(call->method);
        }
        const Value* xbal = nullptr;
        if (px)
        {
            auto b = px->find(balance_field);
            if (b != px->end() && b->second.is_int())
                xbal = &b->second;
        }
        const bool premises = y && n && n->is_int() && args_ok && xbal && py && m &&
                              m->params.size() == call->args.size();
        success = premises && n->as_int() <= xbal->as_int();
        negative = premises && n->as_int() > xbal->as_int();
    }

    if (has_gas)
    {
        if (success)
        {
            if (s.get_if<SkipStm>())
                out.push_back(Rule::Skip);
            else if (s.get_if<SeqStm>())
                out.push_back(Rule::Seq);
            else if (s.get_if<ThrowStm>())
                out.push_back(Rule::Throw);
            else if (s.get_if<IfStm>())
                out.push_back(Rule::If);
            else if (s.get_if<DeclVarStm>())
                out.push_back(Rule::DeclVar);
            else if (const auto* a = s.get_if<AssignStm>())
                out.push_back(a->target.kind == LVal::Kind::Var ? Rule::AssignVar : Rule::AssignField);
            else
                out.push_back(Rule::Call);
        }
        if (negative)
            out.push_back(Rule::NegativeBalance);
        if (!success && !negative)
            out.push_back(Rule::RuntimeError);
    }
    return out;
}

// ---- generation ----

namespace
{
class Generator
{
public:
    explicit Generator(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

    std::mt19937_64& rng() { return rng_; }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

    template <typename T>
    const T& pick(const std::vector<T>& v)
    {
        return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
    }

    GeneratedProgram program();

    const TypeEnv& env() const { return g_; }
    const std::vector<std::string>& contracts() const { return contracts_; }

    void set_context(std::string self_iface, VarTypes delta)
    {
        self_iface_ = std::move(self_iface);
        delta_ = std::move(delta);
        callable_ = 0;
    }

    BaseType random_type(bool small_ranges)
    {
        const int c = uniform(0, 99);
        if (c < 25)
            return BaseType::integer();
        if (c < 65)
        {
            const int lo = small_ranges ? uniform(0, 1) : uniform(-3, 2);
            return BaseType::range(lo, lo + uniform(0, small_ranges ? 3 : 5));
        }
        if (c < 82)
            return BaseType::boolean();
        if (chance(0.3))
            return BaseType::iface(std::string{top_interface_name});
        return BaseType::iface(iface_name(static_cast<std::size_t>(uniform(0, static_cast<int>(contracts_.size()) - 1))));
    }

    Value value_of(const BaseType& t)
    {
        if (t.is_bool())
            return Value::boolean(chance(0.5));
        if (t.is_int())
            return Value::integer(uniform(-5, 20));
        if (t.is_range())
        {
            const auto& r = t.as_range();
            const Int width = r.hi - r.lo;
            const int w = width > 20 ? 20 : static_cast<int>(width);
            return Value::integer(r.lo + uniform(0, w));
        }
        if (t.iface_name() == top_interface_name)
        {
            if (chance(0.3))
                return Value::address(caller_);
            return Value::address(pick(contracts_));
        }
        return Value::address(owner_of(t.iface_name()));
    }

    Expr int_expr(int depth)
    {
        switch (uniform(0, depth > 0 ? 9 : 4))
        {
        case 1:
            if (auto v = var_of([](const BaseType& t) { return t.is_integral(); }))
                return *v;
            break;
        case 2:
            if (auto f = self_field([](const BaseType& t) { return t.is_integral(); }))
                return *f;
            break;
        case 3: {
            Expr recv = iface_expr(BaseType::iface(std::string{top_interface_name}));
            const BaseType rt = type_expr(g_, delta_, recv);
            std::vector<std::string> ints;
            for (const auto& [name, m] : g_.iface(rt.iface_name()).members)
                if (const auto* b = std::get_if<BaseType>(&m); b && b->is_integral())
                    ints.push_back(name);
            return ex::field(recv, pick(ints));
        }
        case 4:
            if (lookup(delta_, magic_value))
                return ex::var(std::string{magic_value});
            break;
        case 5:
        case 6:
        case 9: {
            static const std::vector<OpKind> ops{OpKind::Add, OpKind::Sub, OpKind::Mul};
            return ex::op(pick(ops), {int_expr(depth - 1), int_expr(depth - 1)});
        }
        case 7:
            return ex::op(OpKind::Neg, {int_expr(depth - 1)});
        case 8: {
            int divisor = uniform(1, 3);
            if (chance(0.3))
                divisor = -divisor;
            return ex::op(OpKind::Div, {int_expr(depth - 1), ex::integer(divisor)});
        }
        default:
            break;
        }
        return ex::integer(uniform(-3, 8));
    }

    Expr bool_expr(int depth)
    {
        switch (uniform(0, depth > 0 ? 7 : 2))
        {
        case 1:
            if (auto v = var_of([](const BaseType& t) { return t.is_bool(); }))
                return *v;
            break;
        case 2:
            if (auto f = self_field([](const BaseType& t) { return t.is_bool(); }))
                return *f;
            break;
        case 3:
        case 4: {
            static const std::vector<OpKind> ops{OpKind::Lt, OpKind::Le, OpKind::Gt, OpKind::Ge, OpKind::Eq};
            return ex::op(pick(ops), {int_expr(depth - 1), int_expr(depth - 1)});
        }
        case 5: {
            static const std::vector<OpKind> ops{OpKind::And, OpKind::Or};
            return ex::op(pick(ops), {bool_expr(depth - 1), bool_expr(depth - 1)});
        }
        case 6:
            return ex::op(OpKind::Not, {bool_expr(depth - 1)});
        case 7: {
            const BaseType top = BaseType::iface(std::string{top_interface_name});
            return ex::op(OpKind::Eq, {iface_expr(top), iface_expr(top)});
        }
        default:
            break;
        }
        return ex::boolean(chance(0.5));
    }

    /// Expression whose type is below the interface type t.
    Expr iface_expr(const BaseType& t)
    {
        std::vector<Expr> options;
        for (const auto& [name, type] : delta_)
            if (type.is_iface() && subtype(g_, type, t))
                options.push_back(ex::var(name));
        if (!self_iface_.empty())
            for (const auto& [name, m] : g_.iface(self_iface_).members)
                if (const auto* b = std::get_if<BaseType>(&m); b && b->is_iface() && subtype(g_, *b, t))
                    options.push_back(ex::field(ex::var(std::string{magic_this}), name));
        if (options.empty() || chance(0.4))
            options.push_back(ex::val(value_of(t)));
        return pick(options);
    }

    /// Expression whose type is below t.
    Expr expr_of(const BaseType& t, int depth)
    {
        if (t.is_bool())
            return bool_expr(depth);
        if (t.is_int())
            return int_expr(depth);
        if (t.is_iface())
            return iface_expr(t);
        for (int tries = 0; tries < 8; ++tries)
        {
            Expr e = int_expr(tries < 4 ? depth : 0);
            if (subtype(g_, type_expr(g_, delta_, e), t))
                return e;
        }
        return ex::val(value_of(t));
    }

    Stm stmt(int depth)
    {
        if (depth <= 0 || chance(0.25))
            return leaf_stmt();
        switch (uniform(0, 4))
        {
        case 0:
            return st::seq(stmt(depth - 1), stmt(depth - 1));
        case 1:
            return st::if_(bool_expr(1), stmt(depth - 1), stmt(depth - 1));
        case 2:
            return st::for_(loop_guard(), stmt(depth - 1));
        case 3: {
            const BaseType t = random_type(false);
            std::string x = "v" + std::to_string(fresh_++);
            Expr init = expr_of(t, 1);
            delta_.insert(delta_.begin(), {x, t});
            Stm body = stmt(depth - 1);
            delta_.erase(delta_.begin());
            return st::decl(t, std::move(x), std::move(init), std::move(body));
        }
        default:
            return st::seq(leaf_stmt(), stmt(depth - 1));
        }
    }

private:
    struct PlannedMethod
    {
        std::size_t owner;
        std::string name;
        std::vector<std::string> params;
        Stm body = st::skip();
    };

    static std::string iface_name(std::size_t j) { return "I" + std::to_string(j); }

    const std::string& owner_of(const std::string& iface) const
    {
        for (std::size_t j = 0; j < contracts_.size(); ++j)
            if (iface_name(j) == iface)
                return contracts_[j];
        throw std::logic_error("no contract implements " + iface);
    }

    MethodType& method_type(const PlannedMethod& m)
    {
        return std::get<MethodType>(g_.interfaces.at(iface_name(m.owner)).members.at(m.name));
    }

    template <typename Pred>
    std::optional<Expr> var_of(Pred pred)
    {
        std::vector<Expr> options;
        for (const auto& [name, type] : delta_)
            if (pred(type))
                options.push_back(ex::var(name));
        if (options.empty())
            return std::nullopt;
        return pick(options);
    }

    template <typename Pred>
    std::optional<Expr> self_field(Pred pred)
    {
        if (self_iface_.empty())
            return std::nullopt;
        std::vector<Expr> options;
        for (const auto& [name, m] : g_.iface(self_iface_).members)
            if (const auto* b = std::get_if<BaseType>(&m); b && pred(*b))
                options.push_back(ex::field(ex::var(std::string{magic_this}), name));
        if (options.empty())
            return std::nullopt;
        return pick(options);
    }

    Expr loop_guard()
    {
        const BaseType limit = BaseType::range(-2, cfg_.max_loop_bound);
        for (int tries = 0; tries < 8; ++tries)
        {
            Expr e = int_expr(tries < 4 ? 1 : 0);
            if (subtype(g_, type_expr(g_, delta_, e), limit))
                return e;
        }
        return ex::integer(uniform(0, cfg_.max_loop_bound));
    }

    Stm leaf_stmt()
    {
        for (int tries = 0; tries < 4; ++tries)
        {
            switch (uniform(0, 9))
            {
            case 0:
                if (chance(0.25))
                    return st::throw_();
                break;
            case 1:
            case 2: {
                std::vector<std::pair<std::string, BaseType>> targets;
                for (const auto& [name, type] : delta_)
                    if (!is_magic_name(name))
                        targets.emplace_back(name, type);
                if (targets.empty())
                    break;
                const auto& [x, t] = pick(targets);
                return st::assign_var(x, expr_of(t, 2));
            }
            case 3:
            case 4: {
                if (self_iface_.empty())
                    break;
                std::vector<std::pair<std::string, BaseType>> targets;
                for (const auto& [name, m] : g_.iface(self_iface_).members)
                    if (const auto* b = std::get_if<BaseType>(&m); b && name != balance_field)
                        targets.emplace_back(name, *b);
                if (targets.empty())
                    break;
                const auto& [p, t] = pick(targets);
                return st::assign_field(p, expr_of(t, 2));
            }
            case 5:
            case 6:
            case 7: {
                if (callable_ == 0)
                    break;
                const PlannedMethod& m = methods_[static_cast<std::size_t>(uniform(0, static_cast<int>(callable_) - 1))];
                const MethodType& t = method_type(m);
                Expr recv = iface_expr(BaseType::iface(iface_name(m.owner)));
                std::vector<Expr> args;
                for (const auto& p : t.params)
                    args.push_back(expr_of(p, 1));
                return st::call(recv, m.name, std::move(args), expr_of(BaseType::range(t.lo, t.hi), 1));
            }
            case 8: {
                Expr recv = iface_expr(BaseType::iface(std::string{top_interface_name}));
                return st::call(recv, std::string{send_method}, {}, expr_of(BaseType::range(0, 3), 1));
            }
            default:
                break;
            }
        }
        return st::skip();
    }

    GenConfig cfg_;
    std::mt19937_64 rng_;
    TypeEnv g_;
    std::vector<std::string> contracts_;
    std::string caller_ = "A";
    std::vector<PlannedMethod> methods_;
    std::size_t callable_ = 0;
    std::string self_iface_;
    VarTypes delta_;
    int fresh_ = 0;
};

GeneratedProgram Generator::program()
{
    const std::size_t k = static_cast<std::size_t>(uniform(1, 3));
    g_ = TypeEnv{};
    g_.interfaces.emplace(std::string{top_interface_name}, top_interface());
    g_.addresses.emplace(caller_, std::string{top_interface_name});
    for (std::size_t j = 0; j < k; ++j)
    {
        contracts_.push_back("C" + std::to_string(j));
        g_.addresses.emplace(contracts_.back(), iface_name(j));
        InterfaceDecl decl = make_interface(iface_name(j));
        // A field only this interface has keeps the interfaces unrelated by
        // subtyping, so every call goes through the callee's own interface.
        decl.members.emplace("id" + std::to_string(j), BaseType::integer());
        g_.interfaces.emplace(decl.name, std::move(decl));
    }
    for (std::size_t j = 0; j < k; ++j)
    {
        auto& members = g_.interfaces.at(iface_name(j)).members;
        const int fields = uniform(0, 3);
        for (int i = 0; i < fields; ++i)
            members.emplace("p" + std::to_string(i), random_type(false));
    }

    const int method_count = uniform(1, std::max(1, cfg_.max_methods));
    for (int i = 0; i < method_count; ++i)
    {
        PlannedMethod m;
        m.owner = static_cast<std::size_t>(uniform(0, static_cast<int>(k) - 1));
        m.name = "f" + std::to_string(i);
        MethodType t{{}, 0, 0, 1};
        const int params = uniform(0, 2);
        for (int p = 0; p < params; ++p)
        {
            m.params.push_back("x" + std::to_string(p));
            t.params.push_back(random_type(true));
        }
        t.lo = uniform(0, 1);
        t.hi = t.lo + uniform(0, 4);
        g_.interfaces.at(iface_name(m.owner)).members.emplace(m.name, t);
        methods_.push_back(std::move(m));
    }

    for (std::size_t i = 0; i < methods_.size(); ++i)
    {
        PlannedMethod& m = methods_[i];
        MethodType& t = method_type(m);
        Int computed = 1;
        Stm body = st::skip();
        for (int attempt = 0; attempt < 6; ++attempt)
        {
            set_context(iface_name(m.owner), method_context(iface_name(m.owner), t, m.params));
            callable_ = i;
            Stm candidate = stmt(std::max(0, cfg_.max_depth - attempt / 2));
            const Int n = type_stmt(g_, delta_, candidate);
            if (n <= cfg_.max_body_bound)
            {
                body = candidate;
                computed = n;
                break;
            }
        }
        m.body = body;
        t.steps = computed + uniform(0, 2);
    }

    GeneratedProgram out;
    for (std::size_t j = 0; j < k; ++j)
        out.program.interfaces.push_back(g_.interfaces.at(iface_name(j)));

    ContractDecl account;
    account.name = caller_;
    account.balance = 1000000;
    out.program.contracts.push_back(account);
    for (std::size_t j = 0; j < k; ++j)
    {
        ContractDecl c;
        c.name = contracts_[j];
        c.iface = iface_name(j);
        c.balance = uniform(0, 30);
        for (const auto& [name, member] : g_.interfaces.at(iface_name(j)).members)
            if (const auto* b = std::get_if<BaseType>(&member); b && name != balance_field)
                c.fields.push_back({name, value_of(*b), {}});
        for (const auto& m : methods_)
            if (m.owner == j)
                c.methods.push_back({m.name, m.params, m.body, {}});
        out.program.contracts.push_back(std::move(c));
    }

    // Prefer later methods: they reach deeper call chains.
    const std::size_t target = chance(0.6) ? methods_.size() - 1
                                           : static_cast<std::size_t>(uniform(0, static_cast<int>(methods_.size()) - 1));
    const PlannedMethod& m = methods_[target];
    const MethodType& t = method_type(m);
    Transaction tx;
    tx.caller = caller_;
    tx.target = contracts_[m.owner];
    tx.method = m.name;
    for (const auto& p : t.params)
        tx.args.push_back(value_of(p));
    tx.amount = Int{t.lo} + uniform(0, static_cast<int>(Int{t.hi - t.lo}));
    out.bound = transaction_bound(g_, tx);
    out.min_gas = out.bound + 1;
    tx.gas = out.min_gas + (chance(0.5) ? uniform(1, 5) : 0);
    out.program.txs.push_back(tx);
    out.env = g_;

    const CheckReport report = check_program(out.program);
    if (!report.ok())
        throw std::logic_error("generator produced an ill-typed program (seed " + std::to_string(cfg_.seed) +
                               "): " + report.diagnostics.front().message + "\n" + pretty_print(out.program));
    return out;
}
}  // namespace

GeneratedProgram generate_program(const GenConfig& cfg)
{
    Generator gen{cfg};
    return gen.program();
}

Blockchain mutate_failing(const GeneratedProgram& p, std::mt19937_64& rng)
{
    Blockchain b = p.program;
    Transaction& tx = b.txs.front();
    auto target = std::find_if(b.contracts.begin(), b.contracts.end(),
                               [&](const ContractDecl& c) { return c.name == tx.target; });
    auto method = std::find_if(target->methods.begin(), target->methods.end(),
                               [&](const MethodDecl& m) { return m.name == tx.method; });

    switch (std::uniform_int_distribution<int>(0, 3)(rng))
    {
    case 0: {
        // Too little gas; the run may still fit if it takes a short path.
        const Int below = p.min_gas - 1;
        tx.gas = below <= 0 ? Int{0} : Int{std::uniform_int_distribution<long long>(0, static_cast<long long>(below))(rng)};
        break;
    }
    case 1:
        method->body = st::seq(method->body, st::throw_());
        break;
    case 2:
        method->body = st::seq(method->body,
                               st::decl(BaseType::integer(), "zero_div",
                                        ex::op(OpKind::Div, {ex::integer(1), ex::integer(0)}), st::skip()));
        break;
    default: {
        const Expr overdraft =
            ex::op(OpKind::Add, {ex::balance(ex::var(std::string{magic_this})), ex::integer(1)});
        method->body = st::seq(method->body, st::call(ex::var(std::string{magic_sender}), std::string{send_method},
                                                      {}, overdraft));
        break;
    }
    }
    return b;
}

// ---- suites ----

Json to_json(const SuiteResult& r)
{
    Json j = {{"name", r.name},
              {"cases", r.cases},
              {"passed", r.passed},
              {"skipped", r.skipped},
              {"failing_seeds", r.failing_seeds},
              {"ok", r.ok()}};
    if (!r.first_failure.empty())
        j["first_failure"] = r.first_failure;
    return j;
}

namespace
{
void record_failure(SuiteResult& r, std::uint64_t seed, const std::string& why)
{
    r.failing_seeds.push_back(seed);
    if (r.first_failure.empty())
        r.first_failure = "seed " + std::to_string(seed) + ": " + why;
}

GenConfig config_for(std::uint64_t seed)
{
    GenConfig cfg;
    cfg.seed = seed;
    return cfg;
}

struct TxSetup
{
    ChainState chain;
    Config config;
    VarTypes delta;
};

TxSetup setup_tx(const GeneratedProgram& p)
{
    TxSetup s;
    s.chain = genesis(p.program);
    const Transaction& tx = p.program.txs.front();
    s.config = tx_config(s.chain, tx);
    s.delta = {{std::string{magic_this}, BaseType::iface(p.env.iface_of(tx.caller))}};
    return s;
}

template <typename F>
SuiteResult run_cases(std::string name, std::uint64_t seed, std::size_t cases, F body)
{
    SuiteResult r;
    r.name = std::move(name);
    for (std::size_t i = 0; i < cases; ++i)
    {
        const std::uint64_t s = seed + i;
        ++r.cases;
        try
        {
            std::optional<std::string> failure = body(s, r);
            if (failure)
                record_failure(r, s, *failure);
        }
        catch (const std::exception& e)
        {
            record_failure(r, s, std::string{"exception: "} + e.what());
        }
    }
    return r;
}
}  // namespace

SuiteResult subject_reduction_suite(std::uint64_t seed, std::size_t cases)
{
    return run_cases("subject_reduction", seed, cases,
                     [](std::uint64_t s, SuiteResult& r) -> std::optional<std::string> {
                         const GeneratedProgram p = generate_program(config_for(s));
                         TxSetup tx = setup_tx(p);
                         const Agreement table = check_table(p.env, tx.chain.table);
                         if (!table.ok())
                             return "method table disagrees: " + table.problems.front();
                         const ReductionCheck c = check_subject_reduction(p.env, tx.chain.table, tx.config, tx.delta);
                         if (c.verdict == Verdict::Skipped)
                             return "start configuration not well typed: " + c.detail;
                         if (c.verdict == Verdict::Counterexample)
                             return c.detail;
                         ++r.passed;
                         return std::nullopt;
                     });
}

SuiteResult gas_bound_suite(std::uint64_t seed, std::size_t cases)
{
    return run_cases("gas_bound", seed, cases, [](std::uint64_t s, SuiteResult& r) -> std::optional<std::string> {
        GeneratedProgram p = generate_program(config_for(s));
        for (const Int& gas : {p.program.txs.front().gas, p.min_gas})
        {
            p.program.txs.front().gas = gas;
            const ChainResult result = run_blockchain(p.program);
            const TxReceipt& receipt = result.receipts.front();
            if (receipt.status == TxStatus::Skipped)
                return std::string{"transaction skipped"};
            if (receipt.exception == ExcLabel::Oog)
                return "out of gas with gas " + gas.str() + " (bound " + p.bound.str() + ")";
            if (receipt.exception == ExcLabel::Rte)
                return std::string{"runtime error in a well-typed program"};
            if (receipt.gas_used > p.bound)
                return "used " + receipt.gas_used.str() + " gas, bound " + p.bound.str();
        }
        ++r.passed;
        return std::nullopt;
    });
}

SuiteResult rollback_suite(std::uint64_t seed, std::size_t failing_cases)
{
    SuiteResult r;
    r.name = "rollback";
    std::size_t attempts = 0;
    for (std::uint64_t s = seed; r.cases < failing_cases && attempts < failing_cases * 20; ++s, ++attempts)
    {
        try
        {
            const GeneratedProgram p = generate_program(config_for(s));
            std::mt19937_64 rng{s};
            const Blockchain b = mutate_failing(p, rng);
            const ChainState start = genesis(b);
            const ChainResult result = run_blockchain(b);
            const TxReceipt& receipt = result.receipts.front();
            if (receipt.status != TxStatus::Exception)
                continue;
            ++r.cases;

            const Transaction& tx = b.txs.front();
            const Int expected_balance = start.state.at(tx.caller).at(std::string{balance_field}).as_int() -
                                         receipt.gas_used;
            const State expected =
                state_update_field(start.state, tx.caller, balance_field, Value::integer(expected_balance));
            if (receipt.gas_used > tx.gas || receipt.gas_used < 0)
                record_failure(r, s, "gas used " + receipt.gas_used.str() + " outside [0, " + tx.gas.str() + "]");
            else if (snapshot(result.state) != snapshot(expected))
                record_failure(r, s, "state after failed transaction differs from the rolled-back pre-state");
            else
                ++r.passed;
        }
        catch (const std::exception& e)
        {
            ++r.cases;
            record_failure(r, s, std::string{"exception: "} + e.what());
        }
    }
    return r;
}

SuiteResult determinism_suite(std::uint64_t seed, std::size_t steps)
{
    SuiteResult r;
    r.name = "determinism";
    for (std::uint64_t s = seed; r.cases < steps; ++s)
    {
        try
        {
            const GeneratedProgram p = generate_program(config_for(s));
            std::mt19937_64 rng{s};
            Blockchain b = (s % 2 == 0) ? p.program : mutate_failing(p, rng);
            if (s % 5 == 0)
                b.txs.front().gas = std::uniform_int_distribution<int>(0, 3)(rng);

            ChainState chain = genesis(b);
            const Transaction& tx = b.txs.front();
            Config c = tx_config(chain, tx);
            std::optional<std::string> failure;
            std::size_t program_steps = 0;
            while (!failure)
            {
                const std::vector<Rule> rules = applicable_rules(chain.table, c);
                auto result = step(chain.table, c);
                if (std::holds_alternative<Halt>(result))
                {
                    if (!rules.empty())
                        failure = "halted configuration has an applicable rule";
                    break;
                }
                Stepped& st = std::get<Stepped>(result);
                ++r.cases;
                ++program_steps;
                if (rules.size() != 1)
                    failure = std::to_string(rules.size()) + " rules apply";
                else if (rules.front() != st.rule)
                    failure = "step used " + std::string{to_string(st.rule)} + ", oracle says " +
                              std::string{to_string(rules.front())};
                else if (c.gas - st.next.gas != (consumes_gas(st.rule) ? 1 : 0))
                    failure = std::string{to_string(st.rule)} + " changed gas by " + Int{c.gas - st.next.gas}.str();
                else if (total_balance(c.state) != total_balance(st.next.state))
                    failure = std::string{to_string(st.rule)} + " changed the currency total";
                c = std::move(st.next);
            }

            if (!failure)
            {
                const Int before = total_balance(chain.state);
                exec_transaction(chain);
                const TxReceipt& receipt = chain.log.back();
                const Int after = total_balance(chain.state);
                if (receipt.status != TxStatus::Skipped && before - after != receipt.gas_used)
                    failure = "transaction burned " + Int{before - after}.str() + " but used " +
                              receipt.gas_used.str();
            }
            if (failure)
                record_failure(r, s, *failure);
            else
                r.passed += program_steps;
        }
        catch (const std::exception& e)
        {
            ++r.cases;
            record_failure(r, s, std::string{"exception: "} + e.what());
        }
    }
    return r;
}

namespace
{
// A program plus a random, agreeing local environment inside one of its
// contracts.
struct LemmaContext
{
    GeneratedProgram program;
    State state;
    VarTypes delta;
    VarEnv vars;
};

LemmaContext lemma_context(Generator& gen, std::uint64_t seed)
{
    LemmaContext ctx;
    ctx.program = gen.program();
    const InterfaceTable interfaces = interface_table(ctx.program.program);
    ctx.state = elaborate(ctx.program.program.contracts, &interfaces).state;

    const std::string& self = gen.pick(gen.contracts());
    const std::string iface = ctx.program.env.iface_of(self);
    ctx.vars.push_back({std::string{magic_this}, Value::address(self), BaseType::iface(iface)});
    const BaseType top = BaseType::iface(std::string{top_interface_name});
    ctx.vars.push_back({std::string{magic_sender}, gen.value_of(top), top});
    const BaseType value_type = BaseType::range(0, gen.uniform(0, 5));
    ctx.vars.push_back({std::string{magic_value}, gen.value_of(value_type), value_type});
    const int locals = gen.uniform(0, 4);
    for (int i = 0; i < locals; ++i)
    {
        const BaseType t = gen.random_type(false);
        ctx.vars.insert(ctx.vars.begin(), {"l" + std::to_string(i) + "_" + std::to_string(seed % 7), gen.value_of(t), t});
    }
    for (const auto& b : ctx.vars)
        ctx.delta.emplace_back(b.name, b.type);
    gen.set_context(iface, ctx.delta);
    return ctx;
}
}  // namespace

SuiteResult strengthening_suite(std::uint64_t seed, std::size_t cases)
{
    return run_cases("lemma_strengthening", seed, cases,
                     [](std::uint64_t s, SuiteResult& r) -> std::optional<std::string> {
                         Generator gen{config_for(s)};
                         LemmaContext ctx = lemma_context(gen, s);
                         const TypeEnv& g = ctx.program.env;
                         VarTypes wider = ctx.delta;
                         const auto pos = static_cast<std::ptrdiff_t>(gen.uniform(0, static_cast<int>(wider.size())));
                         wider.insert(wider.begin() + pos, {"unused", gen.random_type(false)});
                         if (!check_vars(g, wider, ctx.vars).ok())
                         {
                             ++r.skipped;
                             return std::nullopt;
                         }
                         const Agreement narrowed = check_vars(g, ctx.delta, ctx.vars);
                         if (!narrowed.ok())
                             return narrowed.problems.front();
                         ++r.passed;
                         return std::nullopt;
                     });
}

SuiteResult update_vars_suite(std::uint64_t seed, std::size_t cases)
{
    return run_cases("lemma_update_vars", seed, cases,
                     [](std::uint64_t s, SuiteResult& r) -> std::optional<std::string> {
                         Generator gen{config_for(s)};
                         LemmaContext ctx = lemma_context(gen, s);
                         const TypeEnv& g = ctx.program.env;
                         if (!check_vars(g, ctx.delta, ctx.vars).ok())
                             return std::string{"generated variables do not agree"};
                         const Binding& b = gen.pick(ctx.vars);
                         const BaseType& t = *lookup(ctx.delta, b.name);
                         const Value v = gen.value_of(t);
                         if (!value_has_type(g, v, t))
                             return "generated value " + to_string(v) + " is not a " + to_string(t);
                         const Agreement after = check_vars(g, ctx.delta, var_update(ctx.vars, b.name, v));
                         if (!after.ok())
                             return after.problems.front();
                         ++r.passed;
                         return std::nullopt;
                     });
}

SuiteResult update_fields_suite(std::uint64_t seed, std::size_t cases)
{
    return run_cases("lemma_update_fields", seed, cases,
                     [](std::uint64_t s, SuiteResult& r) -> std::optional<std::string> {
                         Generator gen{config_for(s)};
                         LemmaContext ctx = lemma_context(gen, s);
                         const TypeEnv& g = ctx.program.env;
                         if (!check_state(g, ctx.state).ok())
                             return std::string{"genesis state does not agree"};
                         std::vector<std::pair<std::string, std::string>> slots;
                         for (const auto& [addr, fields] : ctx.state)
                             for (const auto& [p, v] : fields)
                                 slots.emplace_back(addr, p);
                         const auto& [addr, p] = gen.pick(slots);
                         const BaseType& t = *g.iface(g.iface_of(addr)).field(p);
                         const Value v = gen.value_of(t);
                         const Agreement after = check_state(g, state_update_field(ctx.state, addr, p, v));
                         if (!after.ok())
                             return after.problems.front();
                         ++r.passed;
                         return std::nullopt;
                     });
}

SuiteResult expression_safety_suite(std::uint64_t seed, std::size_t cases)
{
    return run_cases("lemma_expression_safety", seed, cases,
                     [](std::uint64_t s, SuiteResult& r) -> std::optional<std::string> {
                         Generator gen{config_for(s)};
                         LemmaContext ctx = lemma_context(gen, s);
                         const TypeEnv& g = ctx.program.env;
                         const int kind = gen.uniform(0, 2);
                         const Expr e = kind == 0   ? gen.int_expr(3)
                                        : kind == 1 ? gen.bool_expr(3)
                                                    : gen.iface_expr(BaseType::iface(std::string{top_interface_name}));
                         const BaseType t = type_expr(g, ctx.delta, e);
                         EvalResult v = eval_expr(ctx.state, ctx.vars, e);
                         if (auto* err = std::get_if<EvalError>(&v))
                             return "well-typed " + pretty_print(e) + " failed: " + err->message;
                         const Value& value = std::get<Value>(v);
                         if (!value_has_type(g, value, t))
                             return pretty_print(e) + " evaluated to " + to_string(value) + ", typed " + to_string(t);
                         ++r.passed;
                         return std::nullopt;
                     });
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, std::size_t cases)
{
    std::vector<SuiteResult> out;
    out.push_back(subject_reduction_suite(seed, cases));
    out.push_back(gas_bound_suite(seed, cases));
    out.push_back(rollback_suite(seed, std::max<std::size_t>(1, cases / 5)));
    out.push_back(determinism_suite(seed, cases * 100));
    out.push_back(strengthening_suite(seed, cases));
    out.push_back(update_vars_suite(seed, cases));
    out.push_back(update_fields_suite(seed, cases));
    out.push_back(expression_safety_suite(seed, cases));
    return out;
}
}  // namespace tinysol
