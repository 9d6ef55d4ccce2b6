// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tinysol/parser.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tinysol;

namespace
{
ErrorCode code_of(const std::function<void()>& f)
{
    try
    {
        f();
    }
    catch (const Error& e)
    {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::SyntaxError;
}
}  // namespace

TEST(ContractShape, FieldAndMethodIsFine)
{
    ContractDecl c;
    c.name = "C";
    c.fields.push_back({"p", Value::integer(0), {}});
    c.methods.push_back({"f", {"x"}, st::skip(), {}});
    EXPECT_NO_THROW(validate_contract_shape(c));
}

TEST(ContractShape, UserBalanceFieldIsReserved)
{
    ContractDecl c;
    c.name = "C";
    c.fields.push_back({"balance", Value::integer(0), {}});
    EXPECT_EQ(code_of([&] { validate_contract_shape(c); }), ErrorCode::ReservedName);
}

TEST(ContractShape, TwoMethodsNamedAlike)
{
    ContractDecl c;
    c.name = "C";
    c.methods.push_back({"f", {}, st::skip(), {}});
    c.methods.push_back({"f", {"x"}, st::skip(), {}});
    EXPECT_EQ(code_of([&] { validate_contract_shape(c); }), ErrorCode::DuplicateName);
}

TEST(Printer, Statements)
{
    EXPECT_EQ(pretty_print(st::skip()), "skip");
    const Stm loop =
        st::for_(ex::var("x"), st::call(ex::var("y"), "f", {ex::var("x")}, ex::integer(1)));
    EXPECT_EQ(pretty_print(loop), "for x do y.f(x):1");
    EXPECT_EQ(pretty_print(ex::op(OpKind::Sub, {ex::integer(10), ex::var("x")})), "10 - x");
}

TEST(Printer, NegativeLiteralAndNegationDiffer)
{
    EXPECT_EQ(pretty_print(ex::integer(-3)), "-3");
    EXPECT_EQ(pretty_print(ex::op(OpKind::Neg, {ex::integer(3)})), "-(3)");
    EXPECT_EQ(parse_expression("-3"), ex::integer(-3));
    EXPECT_EQ(parse_expression("-(3)"), ex::op(OpKind::Neg, {ex::integer(3)}));
}

TEST(Parser, Contract)
{
    const ContractDecl c = parse_contract("contract C { field p := 0; f(x) { skip } }");
    EXPECT_EQ(c.name, "C");
    ASSERT_EQ(c.fields.size(), 1u);
    EXPECT_EQ(c.fields[0].name, "p");
    EXPECT_EQ(c.fields[0].init, Value::integer(0));
    ASSERT_EQ(c.methods.size(), 1u);
    EXPECT_EQ(c.methods[0].name, "f");
    EXPECT_EQ(c.methods[0].params, std::vector<std::string>{"x"});
    EXPECT_EQ(c.methods[0].body, st::skip());
}

TEST(Parser, Transaction)
{
    const Transaction tx = parse_transaction("A->C.f(3):(1,10)");
    EXPECT_EQ(tx.caller, "A");
    EXPECT_EQ(tx.target, "C");
    EXPECT_EQ(tx.method, "f");
    EXPECT_EQ(tx.args, std::vector<Value>{Value::integer(3)});
    EXPECT_EQ(tx.amount, 1);
    EXPECT_EQ(tx.gas, 10);
}

TEST(Parser, BalanceIsNotAssignable)
{
    EXPECT_EQ(code_of([] { parse_statement("this.balance := 5"); }), ErrorCode::SyntaxError);
}

TEST(Parser, Interfaces)
{
    const InterfaceDecl i = parse_interface("interface I { f(int)^10_1 : 20 }");
    const MethodType* f = i.method("f");
    ASSERT_NE(f, nullptr);
    EXPECT_EQ(*f, (MethodType{{BaseType::integer()}, 1, 10, 20}));
    EXPECT_NE(i.field("balance"), nullptr);
    EXPECT_NE(i.method("send"), nullptr);

    const InterfaceDecl j = parse_interface("interface J { }");
    EXPECT_EQ(j.members.size(), 2u);
    EXPECT_EQ(j.members, top_interface().members);

    EXPECT_EQ(code_of([] { parse_interface("interface K { f(int):20 f(bool):1 }"); }), ErrorCode::DuplicateMember);
}

TEST(Parser, Expressions)
{
    EXPECT_EQ(parse_expression("10 - x"), ex::op(OpKind::Sub, {ex::integer(10), ex::var("x")}));
    const Expr b = parse_expression("y.balance");
    ASSERT_NE(b.get_if<BalanceExpr>(), nullptr);
    EXPECT_EQ(b.get_if<BalanceExpr>()->target, ex::var("y"));
    EXPECT_EQ(parse_expression("1 + 2 * 3"),
              ex::op(OpKind::Add, {ex::integer(1), ex::op(OpKind::Mul, {ex::integer(2), ex::integer(3)})}));
    EXPECT_EQ(parse_expression("1 - 2 - 3"),
              ex::op(OpKind::Sub, {ex::op(OpKind::Sub, {ex::integer(1), ex::integer(2)}), ex::integer(3)}));
    EXPECT_EQ(parse_expression("@C.p"), ex::field(ex::address("C"), "p"));
}

TEST(Parser, Rejections)
{
    EXPECT_EQ(code_of([] { parse_statement("var int this := 1 in skip"); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([] { parse_statement("x := "); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([] { parse_expression("12abc"); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([] { parse_base_type("int[5..1]"); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([] { parse_contract("contract C { field balance := 1; }"); }), ErrorCode::ReservedName);
}

TEST(Parser, ErrorsCarryPositions)
{
    try
    {
        parse_program("contract C {\n  f() { skip skip }\n}");
        FAIL() << "expected a syntax error";
    }
    catch (const Error& e)
    {
        ASSERT_TRUE(e.loc().has_value());
        EXPECT_EQ(e.loc()->line, 2);
    }
}

// ---- print/parse round trip over random trees ----

namespace
{
class AstGen
{
public:
    explicit AstGen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    std::string ident()
    {
        static const std::vector<std::string> names{"x", "y", "zz", "acc", "this", "sender", "value", "k9"};
        return names[static_cast<std::size_t>(uniform(0, static_cast<int>(names.size()) - 1))];
    }

    std::string plain_ident()
    {
        std::string x = ident();
        return is_magic_name(x) ? "w" : x;
    }

    Value value()
    {
        switch (uniform(0, 2))
        {
        case 0:
            return Value::integer(uniform(-50, 50));
        case 1:
            return Value::boolean(uniform(0, 1) == 1);
        default:
            return Value::address(uniform(0, 1) ? "C" : "Acct");
        }
    }

    BaseType type()
    {
        switch (uniform(0, 3))
        {
        case 0:
            return BaseType::boolean();
        case 1:
            return BaseType::integer();
        case 2: {
            const int lo = uniform(-5, 5);
            return BaseType::range(lo, lo + uniform(0, 5));
        }
        default:
            return BaseType::iface(uniform(0, 1) ? "ITop" : "I");
        }
    }

    Expr expr(int depth)
    {
        if (depth <= 0)
            return uniform(0, 1) ? ex::val(value()) : ex::var(ident());
        switch (uniform(0, 5))
        {
        case 0:
            return ex::val(value());
        case 1:
            return ex::var(ident());
        case 2:
            return ex::field(expr(depth - 1), uniform(0, 2) == 0 ? "balance" : "p");
        case 3: {
            static const std::vector<OpKind> unary{OpKind::Not, OpKind::Neg};
            return ex::op(unary[static_cast<std::size_t>(uniform(0, 1))], {expr(depth - 1)});
        }
        default: {
            static const std::vector<OpKind> binary{OpKind::Add, OpKind::Sub, OpKind::Mul, OpKind::Div,
                                                    OpKind::Lt,  OpKind::Le,  OpKind::Gt,  OpKind::Ge,
                                                    OpKind::Eq,  OpKind::And, OpKind::Or};
            return ex::op(binary[static_cast<std::size_t>(uniform(0, static_cast<int>(binary.size()) - 1))],
                          {expr(depth - 1), expr(depth - 1)});
        }
        }
    }

    Stm stm(int depth)
    {
        if (depth <= 0)
            return leaf();
        switch (uniform(0, 4))
        {
        case 0:
            return st::seq(stm(depth - 1), stm(depth - 1));
        case 1:
            return st::if_(expr(2), stm(depth - 1), stm(depth - 1));
        case 2:
            return st::for_(expr(2), stm(depth - 1));
        case 3:
            return st::decl(type(), plain_ident(), expr(2), stm(depth - 1));
        default:
            return leaf();
        }
    }

    Stm leaf()
    {
        switch (uniform(0, 4))
        {
        case 0:
            return st::skip();
        case 1:
            return st::throw_();
        case 2:
            return st::assign_var(plain_ident(), expr(2));
        case 3:
            return st::assign_field("p", expr(2));
        default: {
            std::vector<Expr> args;
            const int n = uniform(0, 2);
            for (int i = 0; i < n; ++i)
                args.push_back(expr(1));
            return st::call(expr(1), uniform(0, 1) ? "f" : "send", std::move(args), expr(1));
        }
        }
    }

private:
    std::mt19937_64 rng_;
};
}  // namespace

TEST(RoundTrip, Expressions)
{
    for (std::uint64_t seed = 1; seed <= 500; ++seed)
    {
        AstGen gen{seed};
        const Expr e = gen.expr(4);
        const std::string text = pretty_print(e);
        Expr back = ex::integer(0);
        ASSERT_NO_THROW(back = parse_expression(text)) << text;
        EXPECT_EQ(back, e) << "seed " << seed << ": " << text << " reprinted as " << pretty_print(back);
    }
}

TEST(RoundTrip, Statements)
{
    for (std::uint64_t seed = 1; seed <= 500; ++seed)
    {
        AstGen gen{seed};
        const Stm s = gen.stm(4);
        const std::string text = pretty_print(s);
        Stm back = st::skip();
        ASSERT_NO_THROW(back = parse_statement(text)) << text;
        EXPECT_EQ(back, s) << "seed " << seed << ": " << text << " reprinted as " << pretty_print(back);
    }
}

TEST(RoundTrip, Programs)
{
    for (std::uint64_t seed = 1; seed <= 200; ++seed)
    {
        AstGen gen{seed};
        Blockchain b;
        InterfaceDecl i = make_interface("I");
        i.members.emplace("p", gen.type());
        i.members.emplace("f", MethodType{{gen.type(), gen.type()}, 0, gen.uniform(0, 9), gen.uniform(1, 50)});
        b.interfaces.push_back(i);

        ContractDecl acct;
        acct.name = "Acct";
        acct.balance = gen.uniform(0, 1000);
        b.contracts.push_back(acct);
        ContractDecl c;
        c.name = "C";
        c.iface = "I";
        c.balance = gen.uniform(0, 1000);
        c.fields.push_back({"p", gen.value(), {}});
        c.methods.push_back({"f", {"a", "b"}, gen.stm(3), {}});
        b.contracts.push_back(c);

        Transaction tx;
        tx.caller = "Acct";
        tx.target = "C";
        tx.method = "f";
        tx.args = {gen.value(), gen.value()};
        tx.amount = gen.uniform(-3, 9);
        tx.gas = gen.uniform(0, 99);
        b.txs.push_back(tx);

        const std::string text = pretty_print(b);
        Blockchain back;
        ASSERT_NO_THROW(back = parse_program(text)) << text;
        EXPECT_EQ(back, b) << "seed " << seed << ":\n" << text;
        EXPECT_EQ(pretty_print(back), text);
    }
}
