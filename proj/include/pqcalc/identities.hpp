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

#ifndef PQCALC_IDENTITIES_HPP
#define PQCALC_IDENTITIES_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pqcalc/pqcore.hpp"
#include "pqcalc/scalar.hpp"

namespace pqcalc {

/// Whether a registered identity is checked with exact rational
/// arithmetic end to end or with truncated decimal evaluation.
enum class Exactness { kExact, kNumeric };

/// Public descriptor of one registered identity.  The evaluation recipes
/// and the admissibility predicate live in the implementation; the
/// descriptor carries what a caller needs to drive verify_identity.
struct IdentityCase {
  std::string name;
  /// Parameter names in report order (empty when the case only needs the
  /// base pair).
  std::vector<std::string> params;
  /// One-line statement of what is being checked.
  std::string summary;
  /// Human-readable admissibility conditions.
  std::string domain;
  Exactness exactness = Exactness::kNumeric;
  /// Fixed notes attached to every report of this case.
  std::vector<std::string> notes;
};

/// Outcome of checking one identity at one parameter point.  Numeric
/// fields are decimal strings so reports can be serialized without loss;
/// exact zero residuals print as "0".
struct VerificationReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  BasePair base;
  unsigned precision_digits = 0;
  long truncation_terms = 0;
  std::string lhs;
  std::string rhs;
  std::string abs_residual;
  std::string rel_residual;
  std::string tolerance;
  bool pass = false;
  std::vector<std::string> notes;
};

/// Deterministic sampling grid for run_suite.
struct GridConfig {
  unsigned long long seed = 7;
  long samples = 10;
  /// Base sampling: p uniform over [p_min, p_max], ratio q/p uniform over
  /// [rho_min, rho_max]; both drawn on a rational lattice so sampled
  /// bases stay exact.
  Scalar p_min = Scalar::exact(1, 2);
  Scalar p_max = Scalar(2);
  Scalar rho_min = Scalar::exact(1, 10);
  Scalar rho_max = Scalar::exact(3, 4);
  unsigned precision = 50;
  ToleranceSpec tol = ToleranceSpec::relative("1e-30");
  TruncationPolicy trunc;
};

struct SuiteResult {
  std::vector<VerificationReport> reports;
  long passed = 0;
  long failed = 0;
};

/// The full registry, in a fixed order.
const std::vector<IdentityCase>& list_identities();

/// Check one identity at one point.  `params` must supply exactly the
/// names listed in the case descriptor.  Inadmissible parameters yield a
/// report with pass = false and an "inadmissible" note; an unknown name
/// or a missing/extra parameter raises DomainError; divergence and pole
/// failures from the evaluators propagate.
VerificationReport verify_identity(const std::string& name,
                                   const std::map<std::string, Scalar>& params,
                                   const BasePair& base,
                                   const ToleranceSpec& tol,
                                   const TruncationPolicy& trunc = {});

/// Run every registered identity over `grid.samples` admissible sample
/// points each.  Deterministic given the seed: each case draws from its
/// own generator seeded with seed ^ FNV1a(name), so cases do not disturb
/// one another.  Per-sample failures are reports, never exceptions.
SuiteResult run_suite(const GridConfig& grid = {});

/// Continuous twin-basic Hermite polynomial
///   H_n(cos theta | p,q) = sum_k [n k]_{p,q} e^(i(n-2k) theta),
/// computed as a real value by pairing k with n-k (binomial symmetry),
/// so H_n = sum_{2k<n} 2 [n k] cos((n-2k) theta) + middle term once.
Scalar hermite_pq(long n, const Scalar& theta, const BasePair& base);

}  // namespace pqcalc

#endif  // PQCALC_IDENTITIES_HPP
