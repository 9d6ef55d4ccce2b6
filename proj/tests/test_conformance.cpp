// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tinysol/conformance.hpp"
#include "tinysol/parser.hpp"

#include <gtest/gtest.h>

using namespace tinysol;

namespace
{
BaseType R(int lo, int hi)
{
    return BaseType::range(lo, hi);
}

const BaseType Top = BaseType::iface("ITop");

ParamResolver no_params()
{
    return [](const Expr&, const std::string&) { return std::optional<std::vector<std::string>>{}; };
}

// A caller account A and a contract C typed by I with a method f.
struct Fixture
{
    Blockchain program;
    TypeEnv g;
    Elaborated elab;

    explicit Fixture(const std::string& f_type, const std::string& f_body)
    {
        program = parse_program("interface I { f" + f_type + " } contract A { balance := 1000; } contract C : I { f(k) { " +
                                f_body + " } }");
        g = make_type_env(program);
        elab = elaborate(program.contracts, &g.interfaces);
    }

    Config config(const std::string& stm, VarEnv vars, int gas) const
    {
        return make_config(parse_statement(stm), elab.state, std::move(vars), gas);
    }
};

VarTypes types_of(const VarEnv& vars)
{
    VarTypes out;
    for (const auto& b : vars)
        out.emplace_back(b.name, b.type);
    return out;
}
}  // namespace

TEST(Extract, Clauses)
{
    const TypeEnv g;
    const VarTypes delta{{"x", R(1, 2)}, {"y", BaseType::boolean()}};

    const Stack decl{Frame{parse_statement("var bool z := true in skip")}};
    const VarTypes with_z = extract(g, delta, decl, no_params());
    ASSERT_EQ(with_z.size(), 3u);
    EXPECT_EQ(with_z.front(), (std::pair<std::string, BaseType>{"z", BaseType::boolean()}));

    EXPECT_EQ(extract(g, delta, Stack{Frame{ScopeEnd{"x"}}}, no_params()), (VarTypes{{"y", BaseType::boolean()}}));
    EXPECT_THROW(extract(g, delta, Stack{Frame{ScopeEnd{"y"}}}, no_params()), Error);
    EXPECT_EQ(extract(g, delta, Stack{Frame{st::skip()}}, no_params()), delta);
    EXPECT_EQ(extract(g, delta, Stack{}, no_params()), delta);

    const VarEnv saved{{"q", Value::integer(0), BaseType::integer()}};
    EXPECT_EQ(extract(g, delta, Stack{Frame{saved}}, no_params()), (VarTypes{{"q", BaseType::integer()}}));
}

TEST(Extract, CallOpensMethodScope)
{
    Fixture fx{"(int[0..9])^5_1 : 3", "skip"};
    const VarEnv vars{{"this", Value::address("A"), Top}, {"c", Value::address("C"), BaseType::iface("I")}};
    const Stack q{Frame{parse_statement("c.f(4):2")}};
    const VarTypes d = extract(fx.g, types_of(vars), q, table_resolver(fx.elab.table, fx.elab.state, vars));
    const VarTypes expected{{"this", BaseType::iface("I")}, {"sender", Top}, {"value", R(1, 5)}, {"k", R(0, 9)}};
    EXPECT_EQ(d, expected);
}

TEST(TypeStack, Examples)
{
    const TypeEnv g;
    EXPECT_EQ(type_stack(g, {}, Stack{}), 0);
    EXPECT_EQ(type_stack(g, {}, Stack{Frame{st::skip()}, Frame{ExcFrame{ExcLabel::Pge}}}), 0);
    EXPECT_EQ(type_stack(g, {}, Stack{Frame{st::skip()}, Frame{st::skip()}}), 2);
}

TEST(TypeConfig, GasMustExceedBound)
{
    const TypeEnv g;
    EXPECT_TRUE(type_config(g, {}, make_config(st::skip(), {}, {}, 2)).ok);
    EXPECT_EQ(type_config(g, {}, make_config(st::skip(), {}, {}, 2)).n, 1);
    EXPECT_FALSE(type_config(g, {}, make_config(st::skip(), {}, {}, 1)).ok);
    for (const char* s : {"skip", "throw", "skip; skip", "for 0 do skip"})
        EXPECT_FALSE(type_config(g, {}, make_config(parse_statement(s), {}, {}, 0)).ok) << s;
}

TEST(SubjectReduction, SingleSkip)
{
    const TypeEnv g;
    const ReductionCheck r = check_subject_reduction(g, {}, make_config(st::skip(), {}, {}, 5), {});
    EXPECT_EQ(r.verdict, Verdict::Passed);
    EXPECT_EQ(r.steps, 1u);
    EXPECT_EQ(r.gas_used, 1);
}

TEST(SubjectReduction, WorkedLoopAtMinimumGas)
{
    Fixture fx{"(int)^10_1 : 20", "skip; skip"};
    const VarEnv vars{{"x", Value::integer(5), R(1, 5)},
                      {"y", Value::address("C"), BaseType::iface("I")},
                      {"this", Value::address("A"), Top}};
    const ReductionCheck r =
        check_subject_reduction(fx.g, fx.elab.table, fx.config("for x do y.f(x):1", vars, 117), types_of(vars));
    EXPECT_EQ(r.verdict, Verdict::Passed) << r.detail;
    EXPECT_EQ(r.initial_bound, 116);
    EXPECT_FALSE(r.halt->exception);
    EXPECT_LE(r.gas_used, 116);
}

TEST(SubjectReduction, IllTypedStartIsSkipped)
{
    const TypeEnv g;
    const ReductionCheck r = check_subject_reduction(g, {}, make_config(st::skip(), {}, {}, 1), {});
    EXPECT_EQ(r.verdict, Verdict::Skipped);
}

TEST(SubjectReduction, DetectsUnderstatedMethodBound)
{
    // The interface claims one step but the installed body needs three, so
    // the bound grows across ss-call.
    Fixture fx{"(int)^1_0 : 1", "skip; skip"};
    const VarEnv vars{{"this", Value::address("A"), Top}};
    const ReductionCheck r =
        check_subject_reduction(fx.g, fx.elab.table, fx.config("@C.f(1):0", vars, 10), types_of(vars));
    EXPECT_EQ(r.verdict, Verdict::Counterexample);
}

TEST(Rules, ExactlyOneApplies)
{
    Fixture fx{"(int)^10_0 : 5", "skip"};
    const VarEnv vars{{"this", Value::address("A"), Top}};
    auto rules = [&](const std::string& s, int gas) {
        return applicable_rules(fx.elab.table, fx.config(s, vars, gas));
    };
    EXPECT_EQ(rules("skip", 1), std::vector<Rule>{Rule::Skip});
    EXPECT_EQ(rules("skip", 0), std::vector<Rule>{Rule::OutOfGas});
    EXPECT_EQ(rules("throw", 1), std::vector<Rule>{Rule::Throw});
    EXPECT_EQ(rules("for 2 do skip", 1), std::vector<Rule>{Rule::ForTrue});
    EXPECT_EQ(rules("for -1 do skip", 1), std::vector<Rule>{Rule::ForFalse});
    EXPECT_EQ(rules("@C.f(1):5", 1), std::vector<Rule>{Rule::Call});
    EXPECT_EQ(rules("@C.f(1):5000", 1), std::vector<Rule>{Rule::NegativeBalance});
    EXPECT_EQ(rules("@C.g(1):5", 1), std::vector<Rule>{Rule::RuntimeError});
    EXPECT_EQ(rules("x := 1", 1), std::vector<Rule>{Rule::RuntimeError});
    EXPECT_EQ(rules("this.balance2 := 1", 1), std::vector<Rule>{Rule::RuntimeError});
    EXPECT_TRUE(applicable_rules(fx.elab.table, make_config(st::skip(), {}, {}, 1)).size() == 1);
}

TEST(Generator, ProgramsTypeCheck)
{
    for (std::uint64_t seed = 1; seed <= 200; ++seed)
    {
        GenConfig cfg;
        cfg.seed = seed;
        const GeneratedProgram p = generate_program(cfg);
        EXPECT_TRUE(check_program(p.program).ok()) << seed;
        ASSERT_EQ(p.program.txs.size(), 1u);
        EXPECT_EQ(p.min_gas, p.bound + 1);
        EXPECT_GE(p.program.txs.front().gas, p.min_gas);
        // The printed program reads back to the same declarations.
        EXPECT_EQ(parse_program(pretty_print(p.program)), p.program) << seed;
    }
}

TEST(Generator, ShallowProgramsStillHaveMethods)
{
    GenConfig cfg;
    cfg.seed = 1;
    cfg.max_depth = 0;
    const GeneratedProgram p = generate_program(cfg);
    std::size_t methods = 0;
    for (const auto& c : p.program.contracts)
        methods += c.methods.size();
    EXPECT_GE(methods, 1u);
}

TEST(Generator, Deterministic)
{
    GenConfig cfg;
    cfg.seed = 77;
    EXPECT_EQ(generate_program(cfg).program, generate_program(cfg).program);
}

TEST(Generator, MinimumGasNeverRunsOut)
{
    for (std::uint64_t seed = 1; seed <= 300; ++seed)
    {
        GenConfig cfg;
        cfg.seed = seed;
        GeneratedProgram p = generate_program(cfg);
        p.program.txs.front().gas = p.min_gas;
        const ChainResult r = run_blockchain(p.program);
        EXPECT_NE(r.receipts.front().exception, ExcLabel::Oog) << seed;
        EXPECT_NE(r.receipts.front().exception, ExcLabel::Rte) << seed;
    }
}

TEST(Lemmas, SafetyInstance)
{
    // 10 - x with x in [2..5] evaluates inside [5..8] for every x.
    const TypeEnv g;
    const VarTypes delta{{"x", R(2, 5)}};
    const Expr e = parse_expression("10 - x");
    const BaseType t = type_expr(g, delta, e);
    ASSERT_EQ(t, R(5, 8));
    for (int x = 2; x <= 5; ++x)
    {
        const VarEnv vars{{"x", Value::integer(x), R(2, 5)}};
        const Value v = std::get<Value>(eval_expr({}, vars, e));
        EXPECT_TRUE(value_has_type(g, v, t)) << x;
    }
}

TEST(Suites, SmallRunsPass)
{
    for (const SuiteResult& r : run_all_suites(1000, 60))
        EXPECT_TRUE(r.ok()) << r.name << ": " << r.first_failure;
}

TEST(Suites, JsonVerdict)
{
    const SuiteResult r = gas_bound_suite(3, 5);
    const Json j = to_json(r);
    EXPECT_EQ(j.at("name"), "gas_bound");
    EXPECT_EQ(j.at("cases"), 5);
    EXPECT_TRUE(j.at("ok").get<bool>());
    EXPECT_TRUE(j.at("failing_seeds").empty());
}
