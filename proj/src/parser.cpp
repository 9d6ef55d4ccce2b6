// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tinysol/parser.hpp"

#include <array>
#include <cctype>
#include <set>

namespace tinysol
{
namespace
{
enum class Tok
{
    Ident,
    Keyword,
    Number,
    Address,
    Symbol,
    End,
};

struct Token
{
    Tok kind;
    std::string text;
    SourceLoc loc;
};

constexpr std::array keywords = {
    "contract", "interface", "field", "var", "if", "then", "else", "for", "do", "skip",
    "throw",    "in",        "true",  "false", "int", "bool", "and", "or", "not",
};

bool is_keyword(std::string_view s)
{
    for (std::string_view k : keywords)
        if (k == s)
            return true;
    return false;
}

// Longest match first.
constexpr std::array symbols = {
    "..", ":=", "->", "<=", ">=", "==", "{", "}", "(", ")", "[", "]", ";",
    ",",  ".",  ":",  "^",  "_",  "+",  "-", "*", "/", "<", ">",
};

std::vector<Token> lex(std::string_view src)
{
    std::vector<Token> out;
    std::size_t i = 0;
    int line = 1;
    int col = 1;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i)
        {
            if (src[i] == '\n')
            {
                ++line;
                col = 1;
            }
            else
                ++col;
        }
    };
    auto is_ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };

    while (i < src.size())
    {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c)))
        {
            advance(1);
            continue;
        }
        if (src.substr(i, 2) == "//")
        {
            while (i < src.size() && src[i] != '\n')
                advance(1);
            continue;
        }

        const SourceLoc loc{line, col};
        if (std::isalpha(static_cast<unsigned char>(c)))
        {
            std::size_t j = i;
            while (j < src.size() && is_ident_char(src[j]))
                ++j;
            std::string word{src.substr(i, j - i)};
            out.push_back({is_keyword(word) ? Tok::Keyword : Tok::Ident, word, loc});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
        {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            if (j < src.size() && std::isalpha(static_cast<unsigned char>(src[j])))
                throw Error(ErrorCode::SyntaxError, "malformed number", loc);
            out.push_back({Tok::Number, std::string{src.substr(i, j - i)}, loc});
            advance(j - i);
            continue;
        }
        if (c == '@')
        {
            std::size_t j = i + 1;
            if (j >= src.size() || !std::isalpha(static_cast<unsigned char>(src[j])))
                throw Error(ErrorCode::SyntaxError, "expected an address name after '@'", loc);
            while (j < src.size() && is_ident_char(src[j]))
                ++j;
            out.push_back({Tok::Address, std::string{src.substr(i + 1, j - i - 1)}, loc});
            advance(j - i);
            continue;
        }

        bool matched = false;
        for (std::string_view s : symbols)
        {
            if (src.substr(i, s.size()) == s)
            {
                out.push_back({Tok::Symbol, std::string{s}, loc});
                advance(s.size());
                matched = true;
                break;
            }
        }
        if (!matched)
            throw Error(ErrorCode::SyntaxError, std::string{"unexpected character '"} + c + "'", loc);
    }
    out.push_back({Tok::End, "", {line, col}});
    return out;
}

// Result of parsing a unary-level expression; `literal` marks an integer
// literal written without parentheses or sign, which a leading '-' folds into.
struct Parsed
{
    Expr e;
    bool literal = false;
};

class Parser
{
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    const Token& peek(std::size_t ahead = 0) const
    {
        const std::size_t k = pos_ + ahead;
        return k < toks_.size() ? toks_[k] : toks_.back();
    }

    bool at_symbol(std::string_view s, std::size_t ahead = 0) const
    {
        const auto& t = peek(ahead);
        return t.kind == Tok::Symbol && t.text == s;
    }

    bool at_keyword(std::string_view s) const
    {
        return peek().kind == Tok::Keyword && peek().text == s;
    }

    bool at_end() const { return peek().kind == Tok::End; }

    [[noreturn]] void fail(const std::string& msg) const
    {
        const auto& t = peek();
        const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw Error(ErrorCode::SyntaxError, msg + ", found " + found, t.loc);
    }

    Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    void expect_symbol(std::string_view s)
    {
        if (!at_symbol(s))
            fail("expected '" + std::string{s} + "'");
        next();
    }

    void expect_keyword(std::string_view s)
    {
        if (!at_keyword(s))
            fail("expected '" + std::string{s} + "'");
        next();
    }

    bool accept_symbol(std::string_view s)
    {
        if (!at_symbol(s))
            return false;
        next();
        return true;
    }

    std::string ident(std::string_view what)
    {
        if (peek().kind != Tok::Ident)
            fail("expected " + std::string{what});
        return next().text;
    }

    void expect_end()
    {
        if (!at_end())
            fail("unexpected trailing input");
    }

    Int number()
    {
        if (peek().kind != Tok::Number)
            fail("expected an integer");
        return Int{next().text};
    }

    Int signed_number()
    {
        if (accept_symbol("-"))
            return -number();
        return number();
    }

    Value value()
    {
        const auto& t = peek();
        if (t.kind == Tok::Keyword && (t.text == "true" || t.text == "false"))
            return Value::boolean(next().text == "true");
        if (t.kind == Tok::Address)
            return Value::address(next().text);
        if (t.kind == Tok::Number || at_symbol("-"))
            return Value::integer(signed_number());
        fail("expected a value");
    }

    BaseType base_type()
    {
        if (at_keyword("bool"))
        {
            next();
            return BaseType::boolean();
        }
        if (at_keyword("int"))
        {
            next();
            if (!at_symbol("["))
                return BaseType::integer();
            const SourceLoc loc = next().loc;
            Int lo = signed_number();
            expect_symbol("..");
            Int hi = signed_number();
            expect_symbol("]");
            if (lo > hi)
                throw Error(ErrorCode::SyntaxError, "empty integer range", loc);
            return BaseType::range(std::move(lo), std::move(hi));
        }
        if (peek().kind == Tok::Ident)
            return BaseType::iface(next().text);
        fail("expected a type");
    }

    // ---- expressions ----

    Expr expr() { return binary(1); }

    static int prec(const Token& t)
    {
        if (t.kind == Tok::Keyword)
            return t.text == "or" ? 1 : t.text == "and" ? 2 : 0;
        if (t.kind != Tok::Symbol)
            return 0;
        const auto& s = t.text;
        if (s == "<" || s == "<=" || s == ">" || s == ">=" || s == "==")
            return 3;
        if (s == "+" || s == "-")
            return 4;
        if (s == "*" || s == "/")
            return 5;
        return 0;
    }

    static OpKind binary_op(const std::string& s)
    {
        if (s == "or")
            return OpKind::Or;
        if (s == "and")
            return OpKind::And;
        if (s == "<")
            return OpKind::Lt;
        if (s == "<=")
            return OpKind::Le;
        if (s == ">")
            return OpKind::Gt;
        if (s == ">=")
            return OpKind::Ge;
        if (s == "==")
            return OpKind::Eq;
        if (s == "+")
            return OpKind::Add;
        if (s == "-")
            return OpKind::Sub;
        if (s == "*")
            return OpKind::Mul;
        return OpKind::Div;
    }

    Expr binary(int min_prec)
    {
        if (min_prec > 5)
            return unary().e;
        Expr lhs = binary(min_prec + 1);
        while (prec(peek()) == min_prec)
        {
            const OpKind op = binary_op(next().text);
            Expr rhs = binary(min_prec + 1);
            lhs = ex::op(op, {lhs, rhs});
        }
        return lhs;
    }

    Parsed unary()
    {
        if (at_keyword("not"))
        {
            next();
            return {ex::op(OpKind::Not, {unary().e})};
        }
        if (accept_symbol("-"))
        {
            Parsed p = unary();
            if (p.literal)
                return {ex::integer(-p.e.get_if<ValExpr>()->value.as_int())};
            return {ex::op(OpKind::Neg, {p.e})};
        }
        return postfix_expr();
    }

    Parsed postfix_expr()
    {
        Parsed p = atom();
        while (at_symbol("."))
        {
            next();
            const std::string name = ident("a field name");
            if (at_symbol("("))
                fail("method calls are statements, not expressions");
            p = {ex::field(p.e, name)};
        }
        return p;
    }

    Parsed atom()
    {
        const auto& t = peek();
        switch (t.kind)
        {
        case Tok::Number:
            return {ex::integer(number()), true};
        case Tok::Address:
            return {ex::address(next().text)};
        case Tok::Ident:
            return {ex::var(next().text)};
        case Tok::Keyword:
            if (t.text == "true" || t.text == "false")
                return {ex::boolean(next().text == "true")};
            break;
        case Tok::Symbol:
            if (t.text == "(")
            {
                next();
                Expr e = expr();
                expect_symbol(")");
                return {e};
            }
            break;
        case Tok::End:
            break;
        }
        fail("expected an expression");
    }

    std::vector<Expr> call_args()
    {
        std::vector<Expr> args;
        expect_symbol("(");
        if (!at_symbol(")"))
        {
            args.push_back(expr());
            while (accept_symbol(","))
                args.push_back(expr());
        }
        expect_symbol(")");
        return args;
    }

    // ---- statements ----

    Stm stmt()
    {
        Stm first = simple();
        if (!at_symbol(";"))
            return first;
        next();
        // Tolerate a trailing separator before a closing brace or the end.
        if (at_symbol("}") || at_end())
            return first;
        return st::seq(first, stmt());
    }

    Stm simple()
    {
        if (at_keyword("skip"))
        {
            next();
            return st::skip();
        }
        if (at_keyword("throw"))
        {
            next();
            return st::throw_();
        }
        if (at_keyword("var"))
        {
            next();
            BaseType type = base_type();
            const SourceLoc loc = peek().loc;
            std::string name = ident("a variable name");
            if (is_magic_name(name))
                throw Error(ErrorCode::SyntaxError, "cannot declare the magic variable " + name, loc);
            expect_symbol(":=");
            Expr init = expr();
            expect_keyword("in");
            return st::decl(std::move(type), std::move(name), std::move(init), simple());
        }
        if (at_keyword("if"))
        {
            next();
            Expr cond = expr();
            expect_keyword("then");
            Stm t = simple();
            expect_keyword("else");
            return st::if_(std::move(cond), std::move(t), simple());
        }
        if (at_keyword("for"))
        {
            next();
            Expr guard = expr();
            expect_keyword("do");
            return st::for_(std::move(guard), simple());
        }
        if (accept_symbol("{"))
        {
            if (accept_symbol("}"))
                return st::skip();
            Stm s = stmt();
            expect_symbol("}");
            return s;
        }
        return assign_or_call();
    }

    Stm assign_or_call()
    {
        const SourceLoc loc = peek().loc;
        Expr target = atom().e;
        while (at_symbol("."))
        {
            next();
            std::string name = ident("a field or method name");
            if (at_symbol("("))
            {
                std::vector<Expr> args = call_args();
                expect_symbol(":");
                Expr amount = expr();
                return st::call(std::move(target), std::move(name), std::move(args), std::move(amount));
            }
            target = ex::field(target, std::move(name));
        }
        if (!at_symbol(":="))
            fail("expected ':=' or a method call");
        next();

        if (const auto* v = target.get_if<VarExpr>())
        {
            if (is_magic_name(v->name))
                throw Error(ErrorCode::SyntaxError, "cannot assign to " + v->name, loc);
            return st::assign_var(v->name, expr());
        }
        if (const auto* b = target.get_if<BalanceExpr>())
        {
            (void)b;
            throw Error(ErrorCode::SyntaxError, "balance cannot be assigned directly", loc);
        }
        if (const auto* f = target.get_if<FieldExpr>())
        {
            const auto* recv = f->target.get_if<VarExpr>();
            if (recv && recv->name == magic_this)
                return st::assign_field(f->field, expr());
        }
        throw Error(ErrorCode::SyntaxError, "only local variables and fields of this can be assigned", loc);
    }

    // ---- declarations ----

    InterfaceDecl interface_decl()
    {
        const SourceLoc loc = peek().loc;
        expect_keyword("interface");
        InterfaceDecl decl = make_interface(ident("an interface name"), loc);
        expect_symbol("{");
        while (!accept_symbol("}"))
        {
            const SourceLoc mloc = peek().loc;
            std::string name = ident("a member name");
            Member member = at_symbol("(") ? Member{method_type()} : Member{field_type()};
            if (!decl.members.emplace(name, std::move(member)).second)
                throw Error(ErrorCode::DuplicateMember,
                            "interface " + decl.name + " declares member " + name + " twice", mloc);
            accept_symbol(";");
        }
        return decl;
    }

    BaseType field_type()
    {
        expect_symbol(":");
        return base_type();
    }

    MethodType method_type()
    {
        MethodType m{{}, 0, int_max(), 0};
        expect_symbol("(");
        if (!at_symbol(")"))
        {
            m.params.push_back(base_type());
            while (accept_symbol(","))
                m.params.push_back(base_type());
        }
        expect_symbol(")");
        if (at_symbol("^"))
        {
            const SourceLoc loc = next().loc;
            m.hi = signed_number();
            expect_symbol("_");
            m.lo = signed_number();
            if (m.lo > m.hi)
                throw Error(ErrorCode::SyntaxError, "empty transfer range", loc);
        }
        expect_symbol(":");
        const SourceLoc nloc = peek().loc;
        m.steps = number();
        if (m.steps < 1)
            throw Error(ErrorCode::SyntaxError, "a method step bound must be at least 1", nloc);
        return m;
    }

    ContractDecl contract_decl()
    {
        ContractDecl c;
        c.loc = peek().loc;
        expect_keyword("contract");
        c.name = ident("a contract name");
        if (accept_symbol(":"))
            c.iface = ident("an interface name");
        expect_symbol("{");
        bool seen_balance = false;
        while (!accept_symbol("}"))
        {
            const SourceLoc loc = peek().loc;
            if (at_keyword("field"))
            {
                next();
                std::string name = ident("a field name");
                expect_symbol(":=");
                c.fields.push_back({std::move(name), value(), loc});
            }
            else if (peek().kind == Tok::Ident && peek().text == balance_field && at_symbol(":=", 1))
            {
                if (seen_balance)
                    throw Error(ErrorCode::DuplicateName, "balance initialised twice", loc);
                seen_balance = true;
                next();
                next();
                c.balance = signed_number();
            }
            else
            {
                MethodDecl m{ident("a member declaration"), {}, st::skip(), loc};
                expect_symbol("(");
                if (!at_symbol(")"))
                {
                    m.params.push_back(ident("a parameter name"));
                    while (accept_symbol(","))
                        m.params.push_back(ident("a parameter name"));
                }
                expect_symbol(")");
                expect_symbol("{");
                if (!accept_symbol("}"))
                {
                    m.body = stmt();
                    expect_symbol("}");
                }
                c.methods.push_back(std::move(m));
            }
            accept_symbol(";");
        }
        validate_contract_shape(c);
        return c;
    }

    Transaction transaction()
    {
        Transaction tx;
        tx.loc = peek().loc;
        tx.caller = ident("a caller address");
        expect_symbol("->");
        tx.target = ident("a target address");
        expect_symbol(".");
        tx.method = ident("a method name");
        expect_symbol("(");
        if (!at_symbol(")"))
        {
            tx.args.push_back(value());
            while (accept_symbol(","))
                tx.args.push_back(value());
        }
        expect_symbol(")");
        expect_symbol(":");
        expect_symbol("(");
        tx.amount = signed_number();
        expect_symbol(",");
        tx.gas = number();
        expect_symbol(")");
        return tx;
    }

    SourceFile program()
    {
        SourceFile file;
        std::set<std::string> iface_names;
        while (!at_end())
        {
            if (at_keyword("interface"))
            {
                InterfaceDecl i = interface_decl();
                if (i.name == top_interface_name || !iface_names.insert(i.name).second)
                    throw Error(ErrorCode::DuplicateName, "interface " + i.name + " is already declared", i.loc);
                file.interfaces.push_back(std::move(i));
            }
            else if (at_keyword("contract"))
                file.contracts.push_back(contract_decl());
            else if (peek().kind == Tok::Ident)
            {
                file.txs.push_back(transaction());
                accept_symbol(";");
            }
            else
                fail("expected an interface, a contract, or a transaction");
        }
        return file;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

template <typename F>
auto parse_whole(std::string_view text, F f)
{
    Parser p{text};
    auto result = f(p);
    p.expect_end();
    return result;
}
}  // namespace

SourceFile parse_program(std::string_view text)
{
    return parse_whole(text, [](Parser& p) { return p.program(); });
}

InterfaceDecl parse_interface(std::string_view text)
{
    return parse_whole(text, [](Parser& p) { return p.interface_decl(); });
}

Expr parse_expression(std::string_view text)
{
    return parse_whole(text, [](Parser& p) { return p.expr(); });
}

Stm parse_statement(std::string_view text)
{
    return parse_whole(text, [](Parser& p) { return p.stmt(); });
}

BaseType parse_base_type(std::string_view text)
{
    return parse_whole(text, [](Parser& p) { return p.base_type(); });
}

Value parse_value(std::string_view text)
{
    return parse_whole(text, [](Parser& p) { return p.value(); });
}

Transaction parse_transaction(std::string_view text)
{
    return parse_whole(text, [](Parser& p) {
        Transaction tx = p.transaction();
        p.accept_symbol(";");
        return tx;
    });
}

ContractDecl parse_contract(std::string_view text)
{
    return parse_whole(text, [](Parser& p) { return p.contract_decl(); });
}
}  // namespace tinysol
