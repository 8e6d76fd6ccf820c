/*
 * Copyright 2026 The pqcalc Authors
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

#ifndef PQCALC_ERRORS_HPP
#define PQCALC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pqcalc {

/// Base class of every failure reported by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation
/// (division by zero, degenerate base pair, non-contracting ratio, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series or infinite product fails to contract within the configured
/// truncation budget.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// A denominator factor vanishes at some term index, so the requested
/// value does not exist.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A rewriting run exceeded its step budget without reaching normal form.
class NonterminationError : public Error {
 public:
  using Error::Error;
};

/// Malformed expression text.  Carries the byte offset of the offending
/// token in the original input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pqcalc

#endif  // PQCALC_ERRORS_HPP
