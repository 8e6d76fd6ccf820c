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

#ifndef PQCALC_SCALAR_HPP
#define PQCALC_SCALAR_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <variant>

#include "pqcalc/errors.hpp"

namespace pqcalc {

/// Number of significant decimal digits used for inexact values when no
/// explicit precision is requested.  Initially 50.
unsigned default_precision();
void set_default_precision(unsigned digits);

/// Correctly rounded binary floating-point value tagged with the decimal
/// precision it promises.  The underlying mantissa carries guard bits
/// beyond `digits()` so that every arithmetic operation (one correctly
/// rounded MPFR call) stays within one unit in the last declared decimal
/// digit.
class Real {
 public:
  Real();
  explicit Real(unsigned digits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_rational(const mpq_class& value, unsigned digits);
  static Real from_string(const std::string& text, unsigned digits);
  static Real from_long(long value, unsigned digits);

  unsigned digits() const { return digits_; }
  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw_mut() { return value_; }

  /// Same value re-declared at `digits` (rounded when narrower).
  Real rounded(unsigned digits) const;

  int sign() const;
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }

  /// Decimal string with `digits()` significant digits; round-trips
  /// through `from_string` at the same precision.
  std::string str() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real operator-() const;

  friend Real abs(const Real& x);
  friend Real sqrt(const Real& x);
  friend Real cos(const Real& x);
  friend Real pow_int(const Real& base, long exponent);

  /// Exact comparison of the underlying binary values.
  static int cmp(const Real& a, const Real& b);
  static int cmp(const Real& a, const mpq_class& b);

  /// Raises DomainError if the value is NaN or infinite.
  void ensure_finite() const;

 private:
  mpfr_t value_;
  unsigned digits_;
};

/// A number that is either an exact rational (GMP, always canonical) or a
/// precision-tagged decimal.  Mixing the two promotes the exact operand to
/// the decimal operand's precision; mixing two decimals works at the larger
/// precision.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  Scalar(long value) : v_(mpq_class(value)) {}
  Scalar(int value) : v_(mpq_class(value)) {}
  Scalar(const mpq_class& value) : v_(value) { canonicalize(); }
  Scalar(mpq_class&& value) : v_(std::move(value)) { canonicalize(); }
  Scalar(const Real& value) : v_(value) {}
  Scalar(Real&& value) : v_(std::move(value)) {}

  static Scalar exact(long num, long den = 1);
  /// Accepts "7", "-22/7", "2.5", "1e-30"; a '.' or exponent marker makes
  /// the value a decimal at `default_precision()`.
  static Scalar from_string(const std::string& text);
  static Scalar decimal_from_string(const std::string& text, unsigned digits);

  bool is_exact() const { return std::holds_alternative<mpq_class>(v_); }
  const mpq_class& rational() const;
  const Real& real() const;

  /// Declared precision: the decimal's own precision, or
  /// `default_precision()` for exact values.
  unsigned digits() const;

  Real to_real(unsigned digits) const;
  Scalar to_decimal(unsigned digits) const { return Scalar(to_real(digits)); }

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  /// Value as a machine integer.  Pre: exact integer that fits in long.
  long to_long() const;

  std::string str() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  /// Division by zero raises DomainError (exact and decimal alike).
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  /// Three-way comparison of mathematical values; exact-vs-decimal is
  /// compared without rounding either side.
  static int cmp(const Scalar& a, const Scalar& b);

  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return cmp(a, b) >= 0; }

 private:
  void canonicalize();

  std::variant<mpq_class, Real> v_;
};

Scalar abs(const Scalar& x);
/// Integer power with 0^0 = 1; negative exponent of zero raises DomainError.
Scalar pow_int(const Scalar& base, long exponent);
/// Exact when the argument is a rational perfect square, decimal otherwise
/// (at `digits`, or the argument's declared precision when `digits` is 0).
/// Negative argument raises DomainError.
Scalar sqrt_scalar(const Scalar& x, unsigned digits = 0);
/// Always decimal (at `digits`, or the argument's declared precision when
/// `digits` is 0).
Scalar cos_scalar(const Scalar& x, unsigned digits = 0);

/// Comparison slack.  `abs` and `rel` are non-negative; both zero means
/// exact equality is demanded.
struct ToleranceSpec {
  Scalar abs;
  Scalar rel;

  static ToleranceSpec exact() { return ToleranceSpec{Scalar(0), Scalar(0)}; }
  static ToleranceSpec relative(const std::string& rel_text) {
    return ToleranceSpec{Scalar(0), Scalar::from_string(rel_text)};
  }
};

/// |a - b| <= tol.abs  or  |a - b| <= tol.rel * max(|a|, |b|).
bool approx_equal(const Scalar& a, const Scalar& b, const ToleranceSpec& tol);

/// Budget for truncated series and infinite products.
struct TruncationPolicy {
  long max_terms = 100000;
  /// Target bound on the neglected tail, measured relative to the partial
  /// value; evaluators stop once their tail estimate drops below it.
  Scalar tail_target = Scalar::from_string("1e-31");
};

/// Upper bound sum_{k>=1} |last_term| * |ratio|^k = |last_term| * |ratio| /
/// (1 - |ratio|) on a geometric tail.  |ratio| >= 1 raises DomainError.
Scalar geometric_tail_bound(const Scalar& last_term, const Scalar& ratio);

}  // namespace pqcalc

#endif  // PQCALC_SCALAR_HPP
