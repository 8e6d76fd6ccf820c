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

#ifndef PQCALC_SERIES_HPP
#define PQCALC_SERIES_HPP

#include <cstddef>
#include <vector>

#include "pqcalc/pqcore.hpp"
#include "pqcalc/scalar.hpp"

namespace pqcalc {

/// The twin-basic hypergeometric series
///   rPhis = sum_n  prod_i ((a_i,b_i);(p,q))_n
///           / [ ((p,q);(p,q))_n prod_j ((c_j,d_j);(p,q))_n ]
///           * ((-1)^n (q/p)^(n(n-1)/2))^(1+s-r) * z^n.
struct SeriesSpec {
  std::vector<ParamDoublet> num;
  std::vector<ParamDoublet> den;
  BasePair base;
  Scalar z;

  long r() const { return static_cast<long>(num.size()); }
  long s() const { return static_cast<long>(den.size()); }
  /// Exponent of the sign/base convention factor.
  long shape_exponent() const { return 1 + s() - r(); }
};

/// Classical single-base series
///   rphis = sum_n  prod_i (alpha_i; b)_n / [ (b;b)_n prod_j (beta_j; b)_n ]
///           * ((-1)^n b^(n(n-1)/2))^(1+s-r) * z^n.
struct ClassicalSeriesSpec {
  std::vector<Scalar> num;
  std::vector<Scalar> den;
  Scalar base;
  Scalar z;

  long r() const { return static_cast<long>(num.size()); }
  long s() const { return static_cast<long>(den.size()); }
  long shape_exponent() const { return 1 + s() - r(); }
};

/// Result of a truncated or terminating summation.  `value` is exact when
/// every input was exact and the series terminated; `tail_bound` is an
/// absolute bound on the neglected tail (exact zero for terminating sums).
struct SeriesValue {
  Scalar value;
  long terms_used = 0;
  Scalar tail_bound;
  bool terminated = false;
};

/// Evaluate the twin-basic series.  Exact inputs that terminate are summed
/// exactly; otherwise the base must contract (|q| < |p|) and the sum is
/// truncated once the certified tail bound meets trunc.tail_target.
/// Vanishing denominator factors raise PoleError; a non-contracting tail
/// raises DivergenceError.
SeriesValue eval_Phi(const SeriesSpec& spec, const TruncationPolicy& trunc = {},
                     unsigned digits = 0);

/// Evaluate the classical series under the same rules (|base| < 1 when the
/// sum does not terminate).
SeriesValue eval_phi_classical(const ClassicalSeriesSpec& spec,
                               const TruncationPolicy& trunc = {},
                               unsigned digits = 0);

/// Lift a classical series to doublet form at `base` (whose ratio q/p must
/// equal the classical base): parameters alpha become doublets (1, alpha),
/// the argument becomes p * z, and when the shapes leave a convention-factor
/// imbalance the short side is padded with (0, 1) doublets, which
/// reproduces the classical sign/base factor termwise.
SeriesSpec embed_phi_to_Phi(const ClassicalSeriesSpec& spec,
                            const BasePair& base);

/// Collapse a doublet series to classical form: parameters b_i/a_i and
/// d_j/c_j at base q/p with argument z * prod a_i / (p * prod c_j).  Only
/// the shape s = r - 1 collapses (other shapes leave a base-power mismatch
/// that no argument rescaling absorbs); anything else raises DomainError,
/// as do vanishing a_i, c_j or p.
ClassicalSeriesSpec project_Phi_to_phi(const SeriesSpec& spec);

/// The SeriesSpec obtained by sending the b-component of numerator doublet
/// `num_index` to infinity while scaling the argument by 1/b: the doublet
/// becomes (0, 1) and the argument is kept, i.e.
///   lim_{b->inf} Phi(..., (a,b), ...; z/b) = Phi(..., (0,1), ...; z).
SeriesSpec confluence_limit_spec(const SeriesSpec& spec, std::size_t num_index);

/// Bilateral series  sum_{n in Z} ((a,b);(p,q))_n / ((c,d);(p,q))_n z^n.
/// Needs |q| < |p| and the convergence strip |d/b| < |z| < |c/a|.
SeriesValue eval_Psi11(const ParamDoublet& num, const ParamDoublet& den,
                       const BasePair& base, const Scalar& z,
                       const TruncationPolicy& trunc = {}, unsigned digits = 0);

/// Bibasic series
///   sum_n  prod (a_i;q)_n prod (c_j;q1)_n
///          / [ (q;q)_n prod (b_i;q)_n prod (d_j;q1)_n ] * z^n
/// over two independent classical bases.
SeriesValue eval_bibasic(const std::vector<Scalar>& num_q,
                         const std::vector<Scalar>& num_q1,
                         const std::vector<Scalar>& den_q,
                         const std::vector<Scalar>& den_q1, const Scalar& q,
                         const Scalar& q1, const Scalar& z,
                         const TruncationPolicy& trunc = {},
                         unsigned digits = 0);

}  // namespace pqcalc

#endif  // PQCALC_SERIES_HPP
