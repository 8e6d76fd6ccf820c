// Copyright 2026 The pqcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pqcalc/operators.hpp"

#include <algorithm>
#include <utility>

#include "pqcalc/errors.hpp"

namespace pqcalc {

FormalSeries::FormalSeries(std::vector<Scalar> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) coefficients_.assign(1, Scalar(0));
}

FormalSeries FormalSeries::zero(long order) {
  if (order < 0) throw DomainError("series order must be nonnegative");
  return FormalSeries(std::vector<Scalar>(order + 1, Scalar(0)));
}

FormalSeries FormalSeries::monomial(long degree, const Scalar& coefficient) {
  FormalSeries f = zero(degree);
  f.coefficients_[degree] = coefficient;
  return f;
}

const Scalar& FormalSeries::coeff(long n) const {
  static const Scalar kZero(0);
  if (n < 0 || n >= static_cast<long>(coefficients_.size())) return kZero;
  return coefficients_[n];
}

bool FormalSeries::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Scalar& c) { return c.is_zero(); });
}

FormalSeries operator+(const FormalSeries& f, const FormalSeries& g) {
  long order = std::min(f.order(), g.order());
  std::vector<Scalar> c;
  c.reserve(order + 1);
  for (long n = 0; n <= order; ++n) c.push_back(f.coeff(n) + g.coeff(n));
  return FormalSeries(std::move(c));
}

FormalSeries operator-(const FormalSeries& f, const FormalSeries& g) {
  long order = std::min(f.order(), g.order());
  std::vector<Scalar> c;
  c.reserve(order + 1);
  for (long n = 0; n <= order; ++n) c.push_back(f.coeff(n) - g.coeff(n));
  return FormalSeries(std::move(c));
}

FormalSeries operator*(const Scalar& s, const FormalSeries& f) {
  std::vector<Scalar> c;
  c.reserve(f.order() + 1);
  for (const Scalar& x : f.coefficients()) c.push_back(s * x);
  return FormalSeries(std::move(c));
}

FormalSeries FormalSeries::scaled_argument(const Scalar& lambda) const {
  std::vector<Scalar> c;
  c.reserve(coefficients_.size());
  Scalar power(1);
  for (const Scalar& x : coefficients_) {
    c.push_back(x * power);
    power *= lambda;
  }
  return FormalSeries(std::move(c));
}

FormalSeries FormalSeries::shifted_up() const {
  std::vector<Scalar> c;
  c.reserve(coefficients_.size() + 1);
  c.push_back(Scalar(0));
  c.insert(c.end(), coefficients_.begin(), coefficients_.end());
  return FormalSeries(std::move(c));
}

WeightFunction WeightFunction::classical() {
  return {[](long n) { return Scalar(n); }};
}

WeightFunction WeightFunction::twin_basic(const BasePair& base) {
  return {[base](long n) { return twin_basic_number(n, base); }};
}

WeightFunction WeightFunction::none() {
  return {[](long) { return Scalar(0); }};
}

FormalSeries pq_derivative(const FormalSeries& f, const BasePair& base) {
  return u_derivative(f, WeightFunction::twin_basic(base));
}

FormalSeries delta_op(const FormalSeries& f, const Scalar& alpha,
                      const Scalar& beta, const BasePair& base) {
  std::vector<Scalar> c;
  c.reserve(f.order() + 1);
  Scalar ppow(1), qpow(1);
  for (const Scalar& x : f.coefficients()) {
    c.push_back((alpha * qpow - beta * ppow) * x);
    ppow *= base.p;
    qpow *= base.q;
  }
  return FormalSeries(std::move(c));
}

FormalSeries u_derivative(const FormalSeries& f, const WeightFunction& u) {
  long order = std::max<long>(f.order() - 1, 0);
  std::vector<Scalar> c;
  c.reserve(order + 1);
  for (long n = 0; n <= order; ++n) c.push_back(u(n + 1) * f.coeff(n + 1));
  return FormalSeries(std::move(c));
}

Scalar phi_difference_residual(const SeriesSpec& spec, long N) {
  if (N < 1) throw DomainError("residual check needs order N >= 1");
  const Scalar& p = spec.base.p;
  const Scalar& q = spec.base.q;
  if (p.is_zero() || q.is_zero()) {
    throw DomainError("the displayed operators divide by both bases");
  }
  const long e = spec.shape_exponent();
  const Scalar rho = q / p;

  // Coefficient stream of Phi via the term ratio (argument power excluded).
  std::vector<Scalar> c;
  c.reserve(N + 2);
  c.push_back(Scalar(1));
  Scalar ppow(1), qpow(1), sign_pow(1);
  for (long n = 1; n <= N + 1; ++n) {
    Scalar numerator(1);
    for (const ParamDoublet& d : spec.num) numerator *= d.a * ppow - d.b * qpow;
    Scalar denominator = p * ppow - q * qpow;
    if (denominator.is_zero()) {
      throw PoleError("base factor p^n - q^n vanishes");
    }
    for (const ParamDoublet& d : spec.den) {
      Scalar f = d.a * ppow - d.b * qpow;
      if (f.is_zero()) throw PoleError("denominator doublet factor vanishes");
      denominator *= f;
    }
    Scalar ratio = numerator / denominator;
    if (e != 0) {
      ratio *= pow_int(-sign_pow, e);
      sign_pow *= rho;
    }
    c.push_back(c.back() * ratio);
    ppow *= p;
    qpow *= q;
  }
  FormalSeries phi{c};

  FormalSeries lhs = phi;
  for (const ParamDoublet& d : spec.den) {
    lhs = delta_op(lhs, d.b / q, d.a / p, spec.base);
  }
  lhs = delta_op(lhs, Scalar(1), Scalar(1), spec.base);

  // The trailing z on the right-hand side is the formal variable itself:
  // multiplying by it shifts every degree up by one.
  FormalSeries rhs = phi.scaled_argument(pow_int(rho, e));
  for (const ParamDoublet& d : spec.num) {
    rhs = delta_op(rhs, d.b, d.a, spec.base);
  }
  rhs = rhs.shifted_up();

  Scalar worst(0);
  for (long n = 0; n <= N; ++n) {
    Scalar diff = abs(lhs.coeff(n) - rhs.coeff(n));
    if (Scalar::cmp(diff, worst) > 0) worst = diff;
  }
  return worst;
}

}  // namespace pqcalc
