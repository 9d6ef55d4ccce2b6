// TinySol: gas-aware smart-contract language toolkit
// Copyright 2026 The TinySol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tinysol/value.hpp"

namespace tinysol
{
std::string to_string(const Value& v)
{
    if (v.is_int())
        return v.as_int().str();
    if (v.is_bool())
        return v.as_bool() ? "true" : "false";
    return "@" + v.as_address();
}
}  // namespace tinysol
