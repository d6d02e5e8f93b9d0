// Copyright (c) 2026 The Synprune Authors.
// SPDX-License-Identifier: Apache-2.0
//
// The syntax-convention database: <condition, consequence> rules keyed by
// AST node kind, grouped into four categories. Conventions are loaded from
// a declarative text file (one record per rule) so ablations and extensions
// need no rebuild.

#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "synprune/errors.hpp"
#include "synprune/node_kinds.hpp"

namespace synprune {

enum class ConventionCategory {
  DataModel,
  Expression,
  SingleStatement,
  CompoundStatement,
};

inline constexpr ConventionCategory kAllCategories[] = {
    ConventionCategory::DataModel,
    ConventionCategory::Expression,
    ConventionCategory::SingleStatement,
    ConventionCategory::CompoundStatement,
};

inline std::string_view to_string(ConventionCategory c) {
  switch (c) {
    case ConventionCategory::DataModel: return "DataModel";
    case ConventionCategory::Expression: return "Expression";
    case ConventionCategory::SingleStatement: return "SingleStatement";
    case ConventionCategory::CompoundStatement: return "CompoundStatement";
  }
  return "?";
}

inline std::optional<ConventionCategory> category_from_string(
    std::string_view s) {
  for (auto c : kAllCategories)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

enum class TerminalKind {
  Literal,       // a single punctuation lexeme, e.g. ")" or "->"
  Keyword,       // a word-like lexeme, e.g. "def", "in", "self"
  Space,         // [SP]
  LineBreak,     // [BR]
  Indent,        // [IND]
  ComparisonOp,  // [CMP] - the lexer's comparison-operator class
  ClosingQuote,  // [CLQ] - terminal quote run of a string/bytes literal
};

struct TerminalSpec {
  TerminalKind kind = TerminalKind::Literal;
  std::string text;  // empty for Space/LineBreak/Indent/ComparisonOp/ClosingQuote

  friend bool operator==(const TerminalSpec&, const TerminalSpec&) = default;
};

/// One element of a condition pattern: either a terminal or a nonterminal
/// placeholder. A nonterminal matches a non-empty token run unless marked
/// `may_be_empty` (spelled `<name?>` in the file format).
struct PatternItem {
  bool is_terminal = true;
  TerminalSpec terminal;       // when is_terminal
  std::string nonterminal;     // when !is_terminal
  bool may_be_empty = false;   // when !is_terminal

  friend bool operator==(const PatternItem&, const PatternItem&) = default;
};

struct SyntaxConvention {
  std::string id;
  ConventionCategory category = ConventionCategory::DataModel;
  std::string node_kind;
  std::vector<PatternItem> condition;
  std::vector<TerminalSpec> consequents;

  friend bool operator==(const SyntaxConvention&,
                         const SyntaxConvention&) = default;
};

struct ConventionSet {
  std::vector<SyntaxConvention> conventions;
  std::string version;

  std::size_t count_in_category(ConventionCategory c) const {
    return static_cast<std::size_t>(
        std::count_if(conventions.begin(), conventions.end(),
                      [c](const auto& cv) { return cv.category == c; }));
  }

  friend bool operator==(const ConventionSet&, const ConventionSet&) = default;
};

namespace detail {

inline bool is_word_terminal(std::string_view text) {
  if (text.empty()) return false;
  for (char ch : text)
    if (!(std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'))
      return false;
  return true;
}

inline std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

inline std::optional<TerminalSpec> terminal_from_token(std::string_view tok) {
  if (tok == "[SP]") return TerminalSpec{TerminalKind::Space, ""};
  if (tok == "[BR]") return TerminalSpec{TerminalKind::LineBreak, ""};
  if (tok == "[IND]") return TerminalSpec{TerminalKind::Indent, ""};
  if (tok == "[CMP]") return TerminalSpec{TerminalKind::ComparisonOp, ""};
  if (tok == "[CLQ]") return TerminalSpec{TerminalKind::ClosingQuote, ""};
  if (tok.empty() || tok.front() == '<') return std::nullopt;
  if (is_word_terminal(tok))
    return TerminalSpec{TerminalKind::Keyword, std::string(tok)};
  return TerminalSpec{TerminalKind::Literal, std::string(tok)};
}

inline std::string terminal_to_token(const TerminalSpec& t) {
  switch (t.kind) {
    case TerminalKind::Space: return "[SP]";
    case TerminalKind::LineBreak: return "[BR]";
    case TerminalKind::Indent: return "[IND]";
    case TerminalKind::ComparisonOp: return "[CMP]";
    case TerminalKind::ClosingQuote: return "[CLQ]";
    default: return t.text;
  }
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace detail

/// Parses a convention file. Throws Error(Format) on malformed records
/// (message carries the line number) and Error(Validation) on duplicate
/// ids, unknown node kinds, or an empty rule set.
inline ConventionSet load_conventions(std::string_view source) {
  ConventionSet set;
  std::set<std::string> seen_ids;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    std::size_t nl = source.find('\n', pos);
    std::string_view line = source.substr(
        pos, nl == std::string_view::npos ? source.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? source.size() + 1 : nl + 1;
    ++lineno;

    std::string stripped = detail::trim(line);
    if (stripped.empty()) continue;
    if (stripped.front() == '#') {
      constexpr std::string_view kVersionTag = "# version:";
      if (stripped.rfind(kVersionTag, 0) == 0)
        set.version = detail::trim(stripped.substr(kVersionTag.size()));
      continue;
    }

    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t bar = stripped.find('|', start);
      if (bar == std::string::npos) {
        fields.push_back(detail::trim(
            std::string_view(stripped).substr(start)));
        break;
      }
      fields.push_back(detail::trim(
          std::string_view(stripped).substr(start, bar - start)));
      start = bar + 1;
    }
    if (fields.size() != 5)
      throw Error(ErrorKind::Format,
                  "conventions line " + std::to_string(lineno) +
                      ": expected 5 '|'-separated fields, got " +
                      std::to_string(fields.size()));

    SyntaxConvention conv;
    conv.id = fields[0];
    if (conv.id.empty())
      throw Error(ErrorKind::Format, "conventions line " +
                                         std::to_string(lineno) +
                                         ": empty id");
    if (!seen_ids.insert(conv.id).second)
      throw Error(ErrorKind::Validation,
                  "duplicate convention id '" + conv.id + "' (line " +
                      std::to_string(lineno) + ")");

    auto cat = category_from_string(fields[1]);
    if (!cat)
      throw Error(ErrorKind::Format, "conventions line " +
                                         std::to_string(lineno) +
                                         ": unknown category '" + fields[1] +
                                         "'");
    conv.category = *cat;

    conv.node_kind = fields[2];
    if (!node_kind_exists(conv.node_kind))
      throw Error(ErrorKind::Validation,
                  "convention '" + conv.id + "': unknown node kind '" +
                      conv.node_kind + "'");

    for (const auto& tok : detail::split_ws(fields[3])) {
      PatternItem item;
      if (tok.front() == '<' && tok.back() == '>') {
        item.is_terminal = false;
        std::string name = tok.substr(1, tok.size() - 2);
        if (!name.empty() && name.back() == '?') {
          item.may_be_empty = true;
          name.pop_back();
        }
        if (name.empty())
          throw Error(ErrorKind::Format, "conventions line " +
                                             std::to_string(lineno) +
                                             ": empty nonterminal");
        item.nonterminal = name;
      } else {
        auto t = detail::terminal_from_token(tok);
        if (!t)
          throw Error(ErrorKind::Format, "conventions line " +
                                             std::to_string(lineno) +
                                             ": bad pattern token '" + tok +
                                             "'");
        item.terminal = *t;
      }
      conv.condition.push_back(std::move(item));
    }

    for (const auto& tok : detail::split_ws(fields[4])) {
      auto t = detail::terminal_from_token(tok);
      if (!t)
        throw Error(ErrorKind::Format, "conventions line " +
                                           std::to_string(lineno) +
                                           ": bad consequent token '" + tok +
                                           "'");
      conv.consequents.push_back(*t);
    }
    if (conv.consequents.empty())
      throw Error(ErrorKind::Validation,
                  "convention '" + conv.id + "': no consequents");

    set.conventions.push_back(std::move(conv));
  }

  if (set.conventions.empty())
    throw Error(ErrorKind::Validation,
                "convention file defines no rules (no categories populated)");
  return set;
}

/// Canonical one-record-per-line form; load_conventions round-trips it.
inline std::string serialize_conventions(const ConventionSet& set) {
  std::ostringstream out;
  out << "# version: " << set.version << "\n";
  for (const auto& conv : set.conventions) {
    out << conv.id << " | " << to_string(conv.category) << " | "
        << conv.node_kind << " | ";
    bool first = true;
    for (const auto& item : conv.condition) {
      if (!first) out << ' ';
      first = false;
      if (item.is_terminal)
        out << detail::terminal_to_token(item.terminal);
      else
        out << '<' << item.nonterminal << (item.may_be_empty ? "?" : "")
            << '>';
    }
    out << " | ";
    first = true;
    for (const auto& t : conv.consequents) {
      if (!first) out << ' ';
      first = false;
      out << detail::terminal_to_token(t);
    }
    out << "\n";
  }
  return out.str();
}

/// Returns the subset whose category differs from `removed`; the version
/// string is tagged with the ablation (idempotently).
inline ConventionSet filter_category(const ConventionSet& set,
                                     ConventionCategory removed) {
  ConventionSet out;
  std::string tag = "-without-" + std::string(to_string(removed));
  out.version = set.version;
  if (out.version.find(tag) == std::string::npos) out.version += tag;
  for (const auto& conv : set.conventions)
    if (conv.category != removed) out.conventions.push_back(conv);
  return out;
}

}  // namespace synprune
