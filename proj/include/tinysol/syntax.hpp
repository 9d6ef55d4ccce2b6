// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tinysol/types.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tinysol
{
inline constexpr std::string_view magic_this = "this";
inline constexpr std::string_view magic_sender = "sender";
inline constexpr std::string_view magic_value = "value";
inline constexpr std::string_view balance_field = "balance";
inline constexpr std::string_view send_method = "send";

bool is_magic_name(std::string_view name) noexcept;

enum class OpKind
{
    Add,
    Sub,
    Mul,
    Div,
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    And,
    Or,
    Not,
    Neg,
};

std::string_view to_string(OpKind op) noexcept;
std::size_t arity(OpKind op) noexcept;

struct ExprNode;

/// Immutable, shared expression tree handle.
class Expr
{
public:
    template <typename T>
    const T* get_if() const noexcept;

    const ExprNode& node() const noexcept { return *node_; }

    friend bool operator==(const Expr& a, const Expr& b);

private:
    explicit Expr(std::shared_ptr<const ExprNode> n) : node_(std::move(n)) {}
    friend Expr make_expr(ExprNode node);

    std::shared_ptr<const ExprNode> node_;
};

struct ValExpr
{
    Value value;
};

/// Local variable or one of `this`, `sender`, `value`.
struct VarExpr
{
    std::string name;
};

/// `e.balance`
struct BalanceExpr
{
    Expr target;
};

/// `e.p`, never with p == balance.
struct FieldExpr
{
    Expr target;
    std::string field;
};

struct OpExpr
{
    OpKind op;
    std::vector<Expr> args;
};

struct ExprNode
{
    std::variant<ValExpr, VarExpr, BalanceExpr, FieldExpr, OpExpr> v;
};

Expr make_expr(ExprNode node);

template <typename T>
const T* Expr::get_if() const noexcept
{
    return std::get_if<T>(&node_->v);
}

namespace ex
{
Expr val(Value v);
Expr integer(Int v);
Expr boolean(bool b);
Expr address(std::string name);
Expr var(std::string name);
Expr balance(Expr target);
Expr field(Expr target, std::string p);
/// Throws std::invalid_argument when the argument count does not match the arity.
Expr op(OpKind op, std::vector<Expr> args);
}  // namespace ex

/// Assignment target: a local variable or a field of the executing contract.
struct LVal
{
    enum class Kind
    {
        Var,
        ThisField,
    };

    Kind kind;
    std::string name;

    friend bool operator==(const LVal&, const LVal&) = default;
};

struct StmNode;

class Stm
{
public:
    template <typename T>
    const T* get_if() const noexcept;

    const StmNode& node() const noexcept { return *node_; }

    friend bool operator==(const Stm& a, const Stm& b);

private:
    explicit Stm(std::shared_ptr<const StmNode> n) : node_(std::move(n)) {}
    friend Stm make_stm(StmNode node);

    std::shared_ptr<const StmNode> node_;
};

struct SkipStm
{
};

struct ThrowStm
{
};

/// `var B x := e in S`
struct DeclVarStm
{
    BaseType type;
    std::string name;
    Expr init;
    Stm body;
};

struct AssignStm
{
    LVal target;
    Expr value;
};

struct SeqStm
{
    Stm first;
    Stm second;
};

struct IfStm
{
    Expr cond;
    Stm then_branch;
    Stm else_branch;
};

struct ForStm
{
    Expr guard;
    Stm body;
};

/// `e1.f(args):e2`
struct CallStm
{
    Expr target;
    std::string method;
    std::vector<Expr> args;
    Expr amount;
};

struct StmNode
{
    std::variant<SkipStm, ThrowStm, DeclVarStm, AssignStm, SeqStm, IfStm, ForStm, CallStm> v;
};

Stm make_stm(StmNode node);

template <typename T>
const T* Stm::get_if() const noexcept
{
    return std::get_if<T>(&node_->v);
}

namespace st
{
Stm skip();
Stm throw_();
Stm decl(BaseType type, std::string name, Expr init, Stm body);
Stm assign_var(std::string x, Expr e);
Stm assign_field(std::string p, Expr e);
Stm seq(Stm first, Stm second);
/// Right-nested sequence of one or more statements.
Stm seq(std::vector<Stm> stms);
Stm if_(Expr cond, Stm then_branch, Stm else_branch);
Stm for_(Expr guard, Stm body);
Stm call(Expr target, std::string method, std::vector<Expr> args, Expr amount);
}  // namespace st

struct FieldDecl
{
    std::string name;
    Value init;
    SourceLoc loc;

    friend bool operator==(const FieldDecl& a, const FieldDecl& b)
    {
        return a.name == b.name && a.init == b.init;
    }
};

struct MethodDecl
{
    std::string name;
    std::vector<std::string> params;
    Stm body;
    SourceLoc loc;

    friend bool operator==(const MethodDecl& a, const MethodDecl& b)
    {
        return a.name == b.name && a.params == b.params && a.body == b.body;
    }
};

/// A contract declaration. `balance` and `send() { skip }` are implicit; an
/// account is a contract with no user fields or methods.
struct ContractDecl
{
    std::string name;
    /// Interface the contract is typed by; empty means the minimal interface.
    std::string iface;
    Int balance;
    std::vector<FieldDecl> fields;
    std::vector<MethodDecl> methods;
    SourceLoc loc;

    bool is_account() const noexcept { return fields.empty() && methods.empty(); }
    std::string interface_name() const;

    friend bool operator==(const ContractDecl& a, const ContractDecl& b)
    {
        return a.name == b.name && a.iface == b.iface && a.balance == b.balance &&
               a.fields == b.fields && a.methods == b.methods;
    }
};

/// `A->X.f(v,...):(n,g)`
struct Transaction
{
    std::string caller;
    std::string target;
    std::string method;
    std::vector<Value> args;
    Int amount;
    Int gas;
    SourceLoc loc;

    friend bool operator==(const Transaction& a, const Transaction& b)
    {
        return a.caller == b.caller && a.target == b.target && a.method == b.method &&
               a.args == b.args && a.amount == b.amount && a.gas == b.gas;
    }
};

struct Blockchain
{
    std::vector<InterfaceDecl> interfaces;
    std::vector<ContractDecl> contracts;
    std::vector<Transaction> txs;

    friend bool operator==(const Blockchain&, const Blockchain&) = default;
};

/// Checks distinct field/method/parameter names and that `balance`/`send`
/// are not user-declared. Throws Error(DuplicateName | ReservedName).
void validate_contract_shape(const ContractDecl& c);

std::string pretty_print(const Expr& e);
std::string pretty_print(const Stm& s);
std::string pretty_print(const ContractDecl& c);
std::string pretty_print(const Transaction& tx);
std::string pretty_print(const InterfaceDecl& i);
std::string pretty_print(const Blockchain& b);
}  // namespace tinysol
