/*
 *   Copyright 2026 The maxalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxalg {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of incompatible dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (reducible input where an
/// irreducible one is required, mu above one, non-Boolean entries, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An iteration hit its step cap or was cancelled before the sequence
/// settled, or a computed result failed its post-verification.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

/// Malformed matrix text. Line and column are 1-based; column counts
/// entries within a row, not characters.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace maxalg
