// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tinysol
{
struct SourceLoc
{
    int line = 0;
    int column = 0;

    friend bool operator==(const SourceLoc&, const SourceLoc&) = default;
};

enum class ErrorCode
{
    SyntaxError,
    DuplicateName,
    ReservedName,
    DuplicateMember,
    DuplicateContract,
    Unbound,
    UnknownInterface,
    UnboundName,
    NoSuchMember,
    OperatorTypeError,
    UnboundedLoopGuard,
    TypeMismatch,
    UnknownMethod,
    AmountOutOfDeclaredRange,
    FieldTypeMismatch,
    BodyExceedsDeclaredBound,
    MissingInterfaceMember,
    ExtractionUndefined,
    MalformedSnapshot,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every user-facing failure of the toolkit (parse, elaboration, typing).
/// Runtime failures inside a transaction are not errors: they are exception
/// frames on the machine stack.
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& message, std::optional<SourceLoc> loc = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    const std::optional<SourceLoc>& loc() const noexcept { return loc_; }
    const std::string& message() const noexcept { return message_; }

private:
    ErrorCode code_;
    std::optional<SourceLoc> loc_;
    std::string message_;
};
}  // namespace tinysol
