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

#ifndef PQCALC_PQCORE_HPP
#define PQCALC_PQCORE_HPP

#include <vector>

#include "pqcalc/scalar.hpp"

namespace pqcalc {

/// Twin base (p, q).  Individual operations state which degeneracies
/// (p = q, zero components, ...) they accept.
struct BasePair {
  Scalar p;
  Scalar q;

  bool is_exact() const { return p.is_exact() && q.is_exact(); }
};

/// Parameter doublet (a, b): `a` rides the p-powers, `b` the q-powers.
struct ParamDoublet {
  Scalar a;
  Scalar b;

  bool is_exact() const { return a.is_exact() && b.is_exact(); }
};

/// [n]_{p,q} = (p^n - q^n) / (p - q), with the limit value n * p^(n-1)
/// when p = q.  Defined for every integer n (negative n needs invertible
/// base components).
Scalar twin_basic_number(long n, const BasePair& base);

/// [n]_{p,q}! = [1][2]...[n]; [0]! = 1.  Negative n raises DomainError.
Scalar pq_factorial(long n, const BasePair& base);

/// Twin-basic binomial coefficient.  Computed by the division-free
/// recurrence [n k] = p^k [n-1, k] + q^(n-k) [n-1, k-1], so it is defined
/// (as a polynomial in p, q) even where some [m] vanishes.  Out-of-range k
/// gives 0; negative n raises DomainError.
Scalar pq_binomial(long n, long k, const BasePair& base);

/// ((a,b); (p,q))_n.  For n >= 0 the product of (a p^k - b q^k) over
/// k = 0..n-1; for n < 0 the reciprocal 1 / prod_{j=1..-n} (a p^-j - b q^-j)
/// (PoleError when a factor vanishes, DomainError when the base is not
/// invertible).
Scalar pq_pochhammer(const ParamDoublet& d, const BasePair& base, long n);

/// Classical single-base Pochhammer (x; rho)_n, including negative n.
Scalar classical_pochhammer(const Scalar& x, const Scalar& rho, long n);

/// (x; rho)_infinity for |rho| < 1, truncated once the certified relative
/// tail bound drops below trunc.tail_target.
Scalar classical_poch_infinite(const Scalar& x, const Scalar& rho,
                               const TruncationPolicy& trunc = {},
                               unsigned digits = 0);

/// The classical form of a twin-basic Pochhammer symbol:
/// ((a,b);(p,q))_n = prefactor * (param; base)_n with param = b/a,
/// base = q/p and prefactor = a^n p^(n(n-1)/2).  Needs a != 0 and p != 0.
struct SingleBaseForm {
  Scalar param;
  Scalar base;
  Scalar prefactor;
};

SingleBaseForm reduce_to_single_base(const ParamDoublet& d,
                                     const BasePair& base, long n);

/// Ratio of infinite twin-basic Pochhammer products
///   prod_i ((a_i,b_i);(p,q))_inf / prod_j ((c_j,d_j);(p,q))_inf.
/// Defined when the base contracts (|q| < |p|), numerator and denominator
/// have the same length and matching a-products (the divergent prefactors
/// then cancel); the value is prod (b_i/a_i; q/p)_inf / prod (d_j/c_j;
/// q/p)_inf.  Identical lists short-circuit to exact 1.
Scalar poch_ratio_infinite(const std::vector<ParamDoublet>& num,
                           const std::vector<ParamDoublet>& den,
                           const BasePair& base,
                           const TruncationPolicy& trunc = {},
                           unsigned digits = 0);

/// Twin-basic exponentials
///   e_{p,q}(z) = sum p^(n(n-1)/2) z^n / [n]!   (kind Small)
///   E_{p,q}(z) = sum q^(n(n-1)/2) z^n / [n]!   (kind Big)
enum class ExpKind { Small, Big };

Scalar pq_exponential(const Scalar& z, const BasePair& base, ExpKind kind,
                      const TruncationPolicy& trunc = {}, unsigned digits = 0);

/// Coefficients c_0..c_n with
///   prod_{k=0..n-1} (x p^k - y q^k) = sum_k c_k x^(n-k) y^k,
/// i.e. c_k = (-1)^k [n k] p^C(n-k,2) q^C(k,2).
std::vector<Scalar> gbin_expand(long n, const BasePair& base);

}  // namespace pqcalc

#endif  // PQCALC_PQCORE_HPP
