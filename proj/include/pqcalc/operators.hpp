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

#ifndef PQCALC_OPERATORS_HPP_
#define PQCALC_OPERATORS_HPP_

#include <functional>
#include <vector>

#include "pqcalc/pqcore.hpp"
#include "pqcalc/series.hpp"

namespace pqcalc {

// Truncated formal power series sum_{n=0..N} c[n] z^n.  The operators in
// this module act degreewise, which turns every difference-operator
// statement into an exact finite computation on the coefficient stream.
class FormalSeries {
 public:
  FormalSeries() : coefficients_(1, Scalar(0)) {}
  explicit FormalSeries(std::vector<Scalar> coefficients);
  // the zero series truncated at the given order
  static FormalSeries zero(long order);
  // the monomial z^degree, truncated at its own degree
  static FormalSeries monomial(long degree, const Scalar& coefficient = Scalar(1));

  long order() const { return static_cast<long>(coefficients_.size()) - 1; }
  // coefficient of z^n; zero beyond the truncation order
  const Scalar& coeff(long n) const;
  const std::vector<Scalar>& coefficients() const { return coefficients_; }

  bool is_zero() const;

  // Arithmetic truncates to the smaller order of the two operands.
  friend FormalSeries operator+(const FormalSeries& f, const FormalSeries& g);
  friend FormalSeries operator-(const FormalSeries& f, const FormalSeries& g);
  friend FormalSeries operator*(const Scalar& s, const FormalSeries& f);

  // f(lambda z): degreewise rescaling c_n -> c_n lambda^n, same order.
  FormalSeries scaled_argument(const Scalar& lambda) const;
  // z f(z): degree shift; the order grows by one.
  FormalSeries shifted_up() const;

 private:
  std::vector<Scalar> coefficients_;  // index n holds the z^n coefficient
};

// Degree weight u(n) for the u-derivative.  Total on all n >= 0.
struct WeightFunction {
  std::function<Scalar(long)> weight;

  Scalar operator()(long n) const { return weight(n); }

  // u(n) = n, the classical derivative weight
  static WeightFunction classical();
  // u(n) = [n]_{p,q}, the twin-basic weight
  static WeightFunction twin_basic(const BasePair& base);
  // u identically zero
  static WeightFunction none();
};

// (D_{p,q} f)(z) = (f(pz) - f(qz)) / ((p - q) z); degreewise
// c_n -> [n]_{p,q} c_n at degree n-1.  The order drops by one (a constant
// maps to the zero series of order 0).
FormalSeries pq_derivative(const FormalSeries& f, const BasePair& base);

// (Delta_{(alpha,beta)} f)(z) = alpha f(qz) - beta f(pz); degreewise
// c_n -> (alpha q^n - beta p^n) c_n.  Same order.
FormalSeries delta_op(const FormalSeries& f, const Scalar& alpha,
                      const Scalar& beta, const BasePair& base);

// Generic u-derivative: coefficient of z^{n-1} in the output is u(n) c_n.
// With the twin-basic weight this coincides with pq_derivative.
FormalSeries u_derivative(const FormalSeries& f, const WeightFunction& u);

// Coefficientwise residual of the difference equation satisfied by the
// twin-basic series Phi with doublets ((a_ip, a_iq)) over ((b_jp, b_jq)):
//
//   Delta prod_j Delta_{(b_jq/q, b_jp/p)} Phi(z)
//     = z prod_i Delta_{(a_iq, a_ip)} Phi((q/p)^{1+s-r} z),
//
// where the operators on the right act on the argument-scaled series
// (the display is read right to left).  Builds the coefficient stream of
// Phi up to degree N, applies both sides, and returns the maximum
// absolute coefficient difference over degrees 0..N — exactly zero for
// exact rational inputs.  Both bases must be nonzero since the displayed
// b-side operators divide the doublet components by them.
Scalar phi_difference_residual(const SeriesSpec& spec, long N);

}  // namespace pqcalc

#endif  // PQCALC_OPERATORS_HPP_
