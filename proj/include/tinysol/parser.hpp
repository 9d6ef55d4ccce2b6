// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tinysol/syntax.hpp"

#include <string_view>

namespace tinysol
{
/// A program file: interfaces, contracts, and transactions in any order.
using SourceFile = Blockchain;

/// All parsers throw Error(SyntaxError) with the position of the offending
/// token. parse_program also checks contract shapes and duplicate interface
/// names (DuplicateName / ReservedName / DuplicateMember).
SourceFile parse_program(std::string_view text);
InterfaceDecl parse_interface(std::string_view text);
Expr parse_expression(std::string_view text);
Stm parse_statement(std::string_view text);
BaseType parse_base_type(std::string_view text);
Value parse_value(std::string_view text);
Transaction parse_transaction(std::string_view text);
ContractDecl parse_contract(std::string_view text);
}  // namespace tinysol
