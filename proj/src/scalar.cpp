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

#include "pqcalc/scalar.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <utility>

namespace pqcalc {

namespace {

std::atomic<unsigned> g_default_precision{50};

// Mantissa bits needed to honour `digits` decimal digits, with guard bits
// so one correctly rounded operation cannot disturb the declared digits.
mpfr_prec_t bits_for(unsigned digits) {
  if (digits < 2) digits = 2;
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

}  // namespace

unsigned default_precision() { return g_default_precision.load(); }

void set_default_precision(unsigned digits) {
  if (digits < 2) {
    throw DomainError("default precision must be at least 2 digits");
  }
  g_default_precision.store(digits);
}

// ---------------------------------------------------------------------------
// Real

Real::Real() : Real(default_precision()) {}

Real::Real(unsigned digits) : digits_(digits < 2 ? 2 : digits) {
  mpfr_init2(value_, bits_for(digits_));
  mpfr_set_zero(value_, 1);
}

Real::Real(const Real& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    mpfr_swap(value_, other.value_);
    std::swap(digits_, other.digits_);
  }
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

void Real::ensure_finite() const {
  if (!mpfr_number_p(value_)) {
    throw DomainError("operation produced a non-finite value");
  }
}

Real Real::from_rational(const mpq_class& value, unsigned digits) {
  Real out(digits);
  mpfr_set_q(out.value_, value.get_mpq_t(), MPFR_RNDN);
  return out;
}

Real Real::from_string(const std::string& text, unsigned digits) {
  Real out(digits);
  if (text.empty() ||
      mpfr_set_str(out.value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw ParseError("invalid decimal literal '" + text + "'", 0);
  }
  out.ensure_finite();
  return out;
}

Real Real::from_long(long value, unsigned digits) {
  Real out(digits);
  mpfr_set_si(out.value_, value, MPFR_RNDN);
  return out;
}

Real Real::rounded(unsigned digits) const {
  if (digits == digits_) return *this;
  Real out(digits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

int Real::sign() const { return mpfr_sgn(value_); }

std::string Real::str() const {
  char fmt[32];
  std::snprintf(fmt, sizeof fmt, "%%.%uRg", digits_);
  char* raw = nullptr;
  mpfr_asprintf(&raw, fmt, value_);
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

namespace {

using TernaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

Real real_binop(const Real& a, const Real& b, TernaryOp op);

}  // namespace

Real operator+(const Real& a, const Real& b) { return real_binop(a, b, mpfr_add); }
Real operator-(const Real& a, const Real& b) { return real_binop(a, b, mpfr_sub); }
Real operator*(const Real& a, const Real& b) { return real_binop(a, b, mpfr_mul); }

Real operator/(const Real& a, const Real& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return real_binop(a, b, mpfr_div);
}

namespace {

Real real_binop(const Real& a, const Real& b, TernaryOp op) {
  Real out(std::max(a.digits(), b.digits()));
  op(out.raw_mut(), a.raw(), b.raw(), MPFR_RNDN);
  out.ensure_finite();
  return out;
}

Real real_unop(const Real& x, int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
  Real out(x.digits());
  op(out.raw_mut(), x.raw(), MPFR_RNDN);
  out.ensure_finite();
  return out;
}

}  // namespace

Real Real::operator-() const { return real_unop(*this, mpfr_neg); }

Real abs(const Real& x) { return real_unop(x, mpfr_abs); }

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw DomainError("square root of a negative value");
  return real_unop(x, mpfr_sqrt);
}

Real cos(const Real& x) { return real_unop(x, mpfr_cos); }

Real pow_int(const Real& base, long exponent) {
  if (base.is_zero() && exponent < 0) {
    throw DomainError("negative power of zero");
  }
  Real out(base.digits());
  mpfr_pow_si(out.raw_mut(), base.raw(), exponent, MPFR_RNDN);
  out.ensure_finite();
  return out;
}

int Real::cmp(const Real& a, const Real& b) { return mpfr_cmp(a.value_, b.value_); }

int Real::cmp(const Real& a, const mpq_class& b) {
  return mpfr_cmp_q(a.value_, b.get_mpq_t());
}

// ---------------------------------------------------------------------------
// Scalar

void Scalar::canonicalize() {
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    if (q->get_den() == 0) throw DomainError("zero denominator");
    q->canonicalize();
  }
}

Scalar Scalar::exact(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::from_string(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) {
    throw ParseError("empty numeric literal", 0);
  }
  const std::string body = text.substr(begin, end - begin + 1);
  if (body.find_first_of(".eE@") != std::string::npos) {
    return Scalar(Real::from_string(body, default_precision()));
  }
  try {
    mpq_class q(body);
    if (q.get_den() == 0) throw DomainError("zero denominator");
    q.canonicalize();
    return Scalar(std::move(q));
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid numeric literal '" + body + "'", begin);
  }
}

Scalar Scalar::decimal_from_string(const std::string& text, unsigned digits) {
  return Scalar(Real::from_string(text, digits));
}

const mpq_class& Scalar::rational() const { return std::get<mpq_class>(v_); }

const Real& Scalar::real() const { return std::get<Real>(v_); }

unsigned Scalar::digits() const {
  return is_exact() ? default_precision() : real().digits();
}

Real Scalar::to_real(unsigned digits) const {
  if (is_exact()) return Real::from_rational(rational(), digits);
  return real().rounded(digits);
}

int Scalar::sign() const {
  return is_exact() ? sgn(rational()) : real().sign();
}

bool Scalar::is_integer() const {
  return is_exact() && rational().get_den() == 1;
}

long Scalar::to_long() const {
  if (!is_integer()) throw DomainError("value is not an exact integer");
  const mpz_class& num = rational().get_num();
  if (!num.fits_slong_p()) {
    throw DomainError("integer too large for machine word");
  }
  return num.get_si();
}

std::string Scalar::str() const {
  return is_exact() ? rational().get_str() : real().str();
}

namespace {

unsigned join_digits(const Scalar& a, const Scalar& b) {
  if (!a.is_exact() && !b.is_exact()) {
    return std::max(a.real().digits(), b.real().digits());
  }
  return a.is_exact() ? b.real().digits() : a.real().digits();
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    return Scalar(mpq_class(a.rational() + b.rational()));
  }
  const unsigned d = join_digits(a, b);
  return Scalar(a.to_real(d) + b.to_real(d));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    return Scalar(mpq_class(a.rational() - b.rational()));
  }
  const unsigned d = join_digits(a, b);
  return Scalar(a.to_real(d) - b.to_real(d));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    return Scalar(mpq_class(a.rational() * b.rational()));
  }
  const unsigned d = join_digits(a, b);
  return Scalar(a.to_real(d) * b.to_real(d));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  if (a.is_exact() && b.is_exact()) {
    return Scalar(mpq_class(a.rational() / b.rational()));
  }
  const unsigned d = join_digits(a, b);
  return Scalar(a.to_real(d) / b.to_real(d));
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-rational()));
  return Scalar(-real());
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return ::cmp(a.rational(), b.rational());
  if (!a.is_exact() && !b.is_exact()) return Real::cmp(a.real(), b.real());
  if (a.is_exact()) return -Real::cmp(b.real(), a.rational());
  return Real::cmp(a.real(), b.rational());
}

Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

Scalar pow_int(const Scalar& base, long exponent) {
  if (base.is_exact()) {
    const mpq_class& q = base.rational();
    if (exponent == 0) return Scalar(1);
    if (q == 0 && exponent < 0) throw DomainError("negative power of zero");
    const unsigned long mag =
        exponent < 0 ? -static_cast<unsigned long>(exponent)
                     : static_cast<unsigned long>(exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), mag);
    mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), mag);
    mpq_class out = exponent < 0 ? mpq_class(den, num) : mpq_class(num, den);
    out.canonicalize();
    return Scalar(std::move(out));
  }
  return Scalar(pow_int(base.real(), exponent));
}

Scalar sqrt_scalar(const Scalar& x, unsigned digits) {
  if (x.sign() < 0) throw DomainError("square root of a negative value");
  if (digits == 0) digits = x.digits();
  if (x.is_exact()) {
    const mpq_class& q = x.rational();
    if (mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
        mpz_perfect_square_p(q.get_den().get_mpz_t())) {
      mpz_class num, den;
      mpz_sqrt(num.get_mpz_t(), q.get_num().get_mpz_t());
      mpz_sqrt(den.get_mpz_t(), q.get_den().get_mpz_t());
      return Scalar(mpq_class(num, den));
    }
  }
  return Scalar(sqrt(x.to_real(digits)));
}

Scalar cos_scalar(const Scalar& x, unsigned digits) {
  if (digits == 0) digits = x.digits();
  return Scalar(cos(x.to_real(digits)));
}

// ---------------------------------------------------------------------------
// Comparison helpers

bool approx_equal(const Scalar& a, const Scalar& b, const ToleranceSpec& tol) {
  const Scalar diff = abs(a - b);
  if (Scalar::cmp(diff, tol.abs) <= 0) return true;
  const Scalar ma = abs(a);
  const Scalar mb = abs(b);
  const Scalar& scale = Scalar::cmp(ma, mb) >= 0 ? ma : mb;
  return Scalar::cmp(diff, tol.rel * scale) <= 0;
}

Scalar geometric_tail_bound(const Scalar& last_term, const Scalar& ratio) {
  const Scalar r = abs(ratio);
  if (Scalar::cmp(r, Scalar(1)) >= 0) {
    throw DomainError("geometric tail bound needs |ratio| < 1");
  }
  return abs(last_term) * r / (Scalar(1) - r);
}

}  // namespace pqcalc
