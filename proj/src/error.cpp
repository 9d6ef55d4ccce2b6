// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tinysol/error.hpp"

namespace tinysol
{
std::string_view to_string(ErrorCode code) noexcept
{
    switch (code)
    {
    case ErrorCode::SyntaxError:
        return "SyntaxError";
    case ErrorCode::DuplicateName:
        return "DuplicateName";
    case ErrorCode::ReservedName:
        return "ReservedName";
    case ErrorCode::DuplicateMember:
        return "DuplicateMember";
    case ErrorCode::DuplicateContract:
        return "DuplicateContract";
    case ErrorCode::Unbound:
        return "Unbound";
    case ErrorCode::UnknownInterface:
        return "UnknownInterface";
    case ErrorCode::UnboundName:
        return "UnboundName";
    case ErrorCode::NoSuchMember:
        return "NoSuchMember";
    case ErrorCode::OperatorTypeError:
        return "OperatorTypeError";
    case ErrorCode::UnboundedLoopGuard:
        return "UnboundedLoopGuard";
    case ErrorCode::TypeMismatch:
        return "TypeMismatch";
    case ErrorCode::UnknownMethod:
        return "UnknownMethod";
    case ErrorCode::AmountOutOfDeclaredRange:
        return "AmountOutOfDeclaredRange";
    case ErrorCode::FieldTypeMismatch:
        return "FieldTypeMismatch";
    case ErrorCode::BodyExceedsDeclaredBound:
        return "BodyExceedsDeclaredBound";
    case ErrorCode::MissingInterfaceMember:
        return "MissingInterfaceMember";
    case ErrorCode::ExtractionUndefined:
        return "ExtractionUndefined";
    case ErrorCode::MalformedSnapshot:
        return "MalformedSnapshot";
    }
    return "Unknown";
}

namespace
{
std::string format_what(ErrorCode code, const std::string& message, const std::optional<SourceLoc>& loc)
{
    std::string out;
    if (loc)
        out += std::to_string(loc->line) + ":" + std::to_string(loc->column) + ": ";
    out += to_string(code);
    out += ": ";
    out += message;
    return out;
}
}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<SourceLoc> loc)
  : std::runtime_error(format_what(code, message, loc)), code_(code), loc_(loc), message_(message)
{}
}  // namespace tinysol
