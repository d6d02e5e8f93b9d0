// Copyright (c) 2026 The Synprune Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string_view>

namespace synprune {

/// Node kinds the Python parser can produce. Convention records may only
/// reference kinds listed here.
inline constexpr std::array<std::string_view, 51> kAstNodeKinds = {
    "Module",     "FunctionDef",   "ClassDef",  "If",        "For",
    "While",      "Try",           "With",      "Match",     "Call",
    "Lambda",     "IfExp",         "Comprehension", "Compare", "Import",
    "ImportFrom", "Assert",        "Global",    "Nonlocal",  "List",
    "Dict",       "Set",           "Tuple",     "Slice",     "Attribute",
    "Subscript",  "Name",          "Number",    "Str",       "Bytes",
    "Constant",   "BoolOp",        "UnaryOp",   "BinOp",     "Starred",
    "Await",      "Yield",         "YieldFrom", "NamedExpr", "Group",
    "ExprStmt",   "Assign",        "AugAssign", "AnnAssign", "Decorator",
    "Return",     "Pass",          "Break",     "Continue",  "Raise",
    "Del",
};

inline bool node_kind_exists(std::string_view kind) {
  for (auto k : kAstNodeKinds)
    if (k == kind) return true;
  return false;
}

}  // namespace synprune
