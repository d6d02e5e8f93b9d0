// Copyright (c) 2026 The Synprune Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace synprune {

enum class ErrorKind {
  Format,          // malformed input file
  Validation,      // structurally valid input violating a contract
  Parse,           // Python source failed to parse
  Encoding,        // invalid UTF-8
  Alignment,       // token texts do not concatenate to the source
  ProviderContract,  // inference endpoint broke its response contract
  Transport,       // network failure (retryable)
  EmptyRetainedSet,  // every token pruned; SPP undefined
  InsufficientPool,  // not enough samples for the requested ratio
  Usage,           // bad CLI/config combination
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  bool retryable() const { return kind_ == ErrorKind::Transport; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based line and 0-based column.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& message)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ":" +
                                    std::to_string(col) + ": " + message),
        line_(line),
        col_(col) {}

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

}  // namespace synprune
