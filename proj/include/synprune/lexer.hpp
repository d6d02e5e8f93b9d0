// Copyright (c) 2026 The Synprune Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Python 3.11 surface lexer. Every byte of the source lands in exactly one
// token (whitespace included), so concatenating token texts reproduces the
// input. Indent tokens carry the full leading whitespace of the line that
// deepens the block; Dedent tokens are zero-length markers.

#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "synprune/errors.hpp"
#include "synprune/span.hpp"

namespace synprune {

enum class LexKind {
  Keyword,
  Identifier,
  Punct,
  Operator,
  StringLit,
  NumberLit,
  Space,
  LineBreak,
  Indent,
  Dedent,
  Comment,
};

struct LexToken {
  LexKind kind = LexKind::Space;
  std::string text;
  ByteSpan span;
  std::size_t line = 1;  // 1-based
  std::size_t col = 0;   // 0-based byte column
};

struct LexResult {
  std::vector<LexToken> tokens;
  /// Indices of tokens the grammar sees: code tokens, logical newlines,
  /// indents and dedents. Spaces, comments, blank-line and in-bracket
  /// newlines are skipped.
  std::vector<std::size_t> parse_indices;
};

inline bool is_python_keyword(std::string_view word) {
  static const std::unordered_set<std::string_view> kw = {
      "False",  "None",   "True",    "and",      "as",     "assert", "async",
      "await",  "break",  "class",   "continue", "def",    "del",    "elif",
      "else",   "except", "finally", "for",      "from",   "global", "if",
      "import", "in",     "is",      "lambda",   "nonlocal", "not",  "or",
      "pass",   "raise",  "return",  "try",      "while",  "with",   "yield"};
  return kw.count(word) > 0;
}

inline bool is_comparison_op_text(std::string_view text) {
  return text == "<" || text == ">" || text == "<=" || text == ">=" ||
         text == "==" || text == "!=" || text == "in" || text == "is" ||
         text == "not";
}

namespace detail {

inline bool is_ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c >= 0x80;
}
inline bool is_ident_cont(unsigned char c) {
  return std::isalnum(c) || c == '_' || c >= 0x80;
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  LexResult run() {
    indent_stack_.push_back(0);
    while (pos_ < src_.size()) {
      if (at_line_start_ && depth_ == 0) {
        lex_line_start();
        continue;
      }
      lex_one();
    }
    // Close any open blocks with zero-length dedents at EOF.
    while (indent_stack_.size() > 1) {
      indent_stack_.pop_back();
      emit(LexKind::Dedent, pos_, pos_, "");
    }
    LexResult out;
    out.tokens = std::move(tokens_);
    for (std::size_t i = 0; i < out.tokens.size(); ++i) {
      LexKind k = out.tokens[i].kind;
      bool significant =
          k == LexKind::Keyword || k == LexKind::Identifier ||
          k == LexKind::Punct || k == LexKind::Operator ||
          k == LexKind::StringLit || k == LexKind::NumberLit ||
          k == LexKind::Indent || k == LexKind::Dedent ||
          (k == LexKind::LineBreak && logical_[i]);
      if (significant) out.parse_indices.push_back(i);
    }
    return out;
  }

 private:
  void emit(LexKind kind, std::size_t start, std::size_t end,
            std::string_view text, bool logical = false) {
    LexToken t;
    t.kind = kind;
    t.text = std::string(text);
    t.span = ByteSpan{start, end - start};
    t.line = line_;
    t.col = start - line_start_offset_;
    tokens_.push_back(std::move(t));
    logical_.push_back(logical);
  }

  void advance_line(std::size_t newline_end) {
    ++line_;
    line_start_offset_ = newline_end;
  }

  [[noreturn]] void fail(std::size_t at, const std::string& msg) {
    throw ParseError(line_, at - line_start_offset_, msg);
  }

  std::size_t newline_len(std::size_t p) const {
    if (p >= src_.size()) return 0;
    if (src_[p] == '\n') return 1;
    if (src_[p] == '\r')
      return (p + 1 < src_.size() && src_[p + 1] == '\n') ? 2 : 1;
    return 0;
  }

  void lex_line_start() {
    std::size_t ws_start = pos_;
    std::size_t col = 0;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ') {
        ++col;
      } else if (c == '\t') {
        col += 8 - col % 8;
      } else if (c == '\f') {
        col = 0;
      } else {
        break;
      }
      ++pos_;
    }
    std::string_view ws = src_.substr(ws_start, pos_ - ws_start);

    bool blank = pos_ >= src_.size() || newline_len(pos_) > 0 ||
                 src_[pos_] == '#';
    if (blank) {
      if (!ws.empty()) emit(LexKind::Space, ws_start, pos_, ws);
      if (pos_ < src_.size() && src_[pos_] == '#') lex_comment();
      std::size_t nl = newline_len(pos_);
      if (nl > 0) {
        emit(LexKind::LineBreak, pos_, pos_ + nl, src_.substr(pos_, nl));
        pos_ += nl;
        advance_line(pos_);
      }
      return;  // still at line start
    }

    if (col > indent_stack_.back()) {
      emit(LexKind::Indent, ws_start, pos_, ws);
      indent_stack_.push_back(col);
    } else if (col == indent_stack_.back()) {
      if (!ws.empty()) emit(LexKind::Space, ws_start, pos_, ws);
    } else {
      while (indent_stack_.back() > col) {
        indent_stack_.pop_back();
        emit(LexKind::Dedent, ws_start, ws_start, "");
      }
      if (indent_stack_.back() != col)
        fail(ws_start, "unindent does not match any outer indentation level");
      if (!ws.empty()) emit(LexKind::Space, ws_start, pos_, ws);
    }
    at_line_start_ = false;
  }

  void lex_comment() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && newline_len(pos_) == 0) ++pos_;
    emit(LexKind::Comment, start, pos_, src_.substr(start, pos_ - start));
  }

  void lex_one() {
    char c = src_[pos_];
    std::size_t nl = newline_len(pos_);
    if (nl > 0) {
      bool logical = depth_ == 0 && line_has_code_;
      emit(LexKind::LineBreak, pos_, pos_ + nl, src_.substr(pos_, nl),
           logical);
      pos_ += nl;
      advance_line(pos_);
      if (depth_ == 0) {
        line_has_code_ = false;
        at_line_start_ = true;
      }
      return;
    }
    if (c == ' ' || c == '\t' || c == '\f') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\f'))
        ++pos_;
      emit(LexKind::Space, start, pos_, src_.substr(start, pos_ - start));
      return;
    }
    if (c == '\\' && newline_len(pos_ + 1) > 0) {
      std::size_t n = 1 + newline_len(pos_ + 1);
      emit(LexKind::Space, pos_, pos_ + n, src_.substr(pos_, n));
      pos_ += n;
      advance_line(pos_);
      return;
    }
    if (c == '#') {
      lex_comment();
      return;
    }
    line_has_code_ = true;
    if (is_string_start()) {
      lex_string();
      return;
    }
    unsigned char uc = static_cast<unsigned char>(c);
    if (std::isdigit(uc) ||
        (c == '.' && pos_ + 1 < src_.size() &&
         std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      lex_number();
      return;
    }
    if (detail::is_ident_start(uc)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             detail::is_ident_cont(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      std::string_view word = src_.substr(start, pos_ - start);
      emit(is_python_keyword(word) ? LexKind::Keyword : LexKind::Identifier,
           start, pos_, word);
      return;
    }
    lex_operator();
  }

  bool is_string_start() const {
    std::size_t p = pos_;
    std::size_t prefix = 0;
    while (prefix < 2 && p < src_.size()) {
      char c = src_[p];
      if (c == 'r' || c == 'R' || c == 'b' || c == 'B' || c == 'u' ||
          c == 'U' || c == 'f' || c == 'F') {
        ++p;
        ++prefix;
      } else {
        break;
      }
    }
    return p < src_.size() && (src_[p] == '\'' || src_[p] == '"');
  }

  void lex_string() {
    std::size_t start = pos_;
    while (src_[pos_] != '\'' && src_[pos_] != '"') ++pos_;  // prefix
    char quote = src_[pos_];
    bool triple = pos_ + 2 < src_.size() && src_[pos_ + 1] == quote &&
                  src_[pos_ + 2] == quote;
    pos_ += triple ? 3 : 1;
    while (true) {
      if (pos_ >= src_.size())
        fail(start, "unterminated string literal");
      char c = src_[pos_];
      if (c == '\\' && pos_ + 1 < src_.size()) {
        if (newline_len(pos_ + 1) > 0) {
          std::size_t n = newline_len(pos_ + 1);
          pos_ += 1 + n;
          advance_line(pos_);
        } else {
          pos_ += 2;
        }
        continue;
      }
      std::size_t nl = newline_len(pos_);
      if (nl > 0) {
        if (!triple) fail(start, "unterminated string literal (EOL)");
        pos_ += nl;
        advance_line(pos_);
        continue;
      }
      if (c == quote) {
        if (!triple) {
          ++pos_;
          break;
        }
        if (pos_ + 2 < src_.size() && src_[pos_ + 1] == quote &&
            src_[pos_ + 2] == quote) {
          pos_ += 3;
          break;
        }
        ++pos_;
        continue;
      }
      ++pos_;
    }
    emit(LexKind::StringLit, start, pos_, src_.substr(start, pos_ - start));
  }

  void lex_number() {
    std::size_t start = pos_;
    auto digits = [&](auto pred) {
      while (pos_ < src_.size() &&
             (pred(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_'))
        ++pos_;
    };
    if (src_[pos_] == '0' && pos_ + 1 < src_.size() &&
        (src_[pos_ + 1] == 'x' || src_[pos_ + 1] == 'X' ||
         src_[pos_ + 1] == 'o' || src_[pos_ + 1] == 'O' ||
         src_[pos_ + 1] == 'b' || src_[pos_ + 1] == 'B')) {
      pos_ += 2;
      digits([](unsigned char c) { return std::isxdigit(c); });
    } else {
      digits([](unsigned char c) { return std::isdigit(c); });
      if (pos_ < src_.size() && src_[pos_] == '.' &&
          !(pos_ + 1 < src_.size() && src_[pos_ + 1] == '.')) {
        ++pos_;
        digits([](unsigned char c) { return std::isdigit(c); });
      }
      if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
        std::size_t p = pos_ + 1;
        if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
        if (p < src_.size() &&
            std::isdigit(static_cast<unsigned char>(src_[p]))) {
          pos_ = p;
          digits([](unsigned char c) { return std::isdigit(c); });
        }
      }
    }
    if (pos_ < src_.size() && (src_[pos_] == 'j' || src_[pos_] == 'J')) ++pos_;
    emit(LexKind::NumberLit, start, pos_, src_.substr(start, pos_ - start));
  }

  void lex_operator() {
    static constexpr std::array<std::string_view, 5> three = {
        "**=", "//=", ">>=", "<<=", "..."};
    static constexpr std::array<std::string_view, 19> two = {
        "**", "//", ">>", "<<", "<=", ">=", "==", "!=", "->", ":=",
        "+=", "-=", "*=", "/=", "%=", "@=", "&=", "|=", "^="};
    static constexpr std::string_view one = "+-*/%@&|^~<>=()[]{},:.;";

    std::string_view rest = src_.substr(pos_);
    std::string_view text;
    for (auto op : three)
      if (rest.rfind(op, 0) == 0) {
        text = op;
        break;
      }
    if (text.empty())
      for (auto op : two)
        if (rest.rfind(op, 0) == 0) {
          text = op;
          break;
        }
    if (text.empty() && one.find(rest[0]) != std::string_view::npos)
      text = rest.substr(0, 1);
    if (text.empty()) fail(pos_, "unexpected character");

    char c0 = text[0];
    if (c0 == '(' || c0 == '[' || c0 == '{') ++depth_;
    if ((c0 == ')' || c0 == ']' || c0 == '}') && depth_ > 0) --depth_;
    bool punct = text == "(" || text == ")" || text == "[" || text == "]" ||
                 text == "{" || text == "}" || text == "," || text == ":" ||
                 text == "." || text == ";" || text == "...";
    emit(punct ? LexKind::Punct : LexKind::Operator, pos_, pos_ + text.size(),
         text);
    pos_ += text.size();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_offset_ = 0;
  std::size_t depth_ = 0;
  bool at_line_start_ = true;
  bool line_has_code_ = false;
  std::vector<std::size_t> indent_stack_;
  std::vector<LexToken> tokens_;
  std::vector<bool> logical_;
};

}  // namespace detail

/// Lexes Python source. Throws Error(Encoding) for invalid UTF-8 and
/// ParseError for unterminated strings or inconsistent dedents.
inline LexResult lex_source(std::string_view source) {
  if (!is_valid_utf8(source))
    throw Error(ErrorKind::Encoding, "source is not valid UTF-8");
  return detail::Lexer(source).run();
}

/// Start offset and length of the opening quote run (prefix letters plus
/// quotes) of a string token, and of its terminal quote run. Used when
/// aligning model tokens with quote terminals.
struct StringQuoteRuns {
  ByteSpan opening;
  ByteSpan closing;
};

inline StringQuoteRuns string_quote_runs(const LexToken& tok) {
  std::string_view text = tok.text;
  std::size_t prefix = 0;
  while (prefix < text.size() && text[prefix] != '\'' && text[prefix] != '"')
    ++prefix;
  char quote = text[prefix];
  std::size_t run = 1;
  if (prefix + 2 < text.size() && text[prefix + 1] == quote &&
      text[prefix + 2] == quote)
    run = 3;
  StringQuoteRuns runs;
  runs.opening = ByteSpan{tok.span.start, prefix + run};
  runs.closing = ByteSpan{tok.span.end() - run, run};
  return runs;
}

inline bool string_is_bytes(const LexToken& tok) {
  for (char c : tok.text) {
    if (c == '\'' || c == '"') break;
    if (c == 'b' || c == 'B') return true;
  }
  return false;
}

}  // namespace synprune
