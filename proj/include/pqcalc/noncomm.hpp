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

#ifndef PQCALC_NONCOMM_HPP_
#define PQCALC_NONCOMM_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pqcalc/scalar.hpp"

namespace pqcalc {

class RelationSet;

// Noncommutative polynomial: a map from words over the generator alphabet
// to Scalar coefficients.  Words are strings of single-character generator
// names, juxtaposed.  Zero coefficients are never stored.
class NCPoly {
 public:
  NCPoly() = default;
  // the single term coef * word ("" is the empty word, i.e. 1)
  static NCPoly term(const std::string& word, const Scalar& coef = Scalar(1));
  static NCPoly one() { return term(""); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::string, Scalar>& terms() const { return terms_; }
  // coefficient of the given word (zero if absent)
  Scalar coeff(const std::string& word) const;

  NCPoly& operator+=(const NCPoly& other);
  NCPoly& operator-=(const NCPoly& other);
  friend NCPoly operator+(NCPoly f, const NCPoly& g) { return f += g; }
  friend NCPoly operator-(NCPoly f, const NCPoly& g) { return f -= g; }
  // word concatenation, bilinear
  friend NCPoly operator*(const NCPoly& f, const NCPoly& g);
  friend NCPoly operator*(const Scalar& s, const NCPoly& f);

  bool operator==(const NCPoly& other) const;
  bool operator!=(const NCPoly& other) const { return !(*this == other); }

  // "coef*word" sums with words as juxtaposed generator names, e.g.
  // "1 + 2*ab"; the zero polynomial prints as "0".
  std::string str() const;

 private:
  void add_term(const std::string& word, const Scalar& coef);
  std::map<std::string, Scalar> terms_;
};

// Scan order used when looking for the next out-of-order adjacent pair.
enum class RewriteStrategy { kLeftmost, kRightmost };

// A terminating rewriting system over an ordered generator alphabet.  For
// each out-of-order adjacent pair g_j g_i (j after i in the alphabet) a
// rule g_j g_i -> factor * g_i g_j + extra applies, where the optional
// inhomogeneous tail consists of words of the same length with strictly
// smaller disorder, so exhaustive rewriting terminates.
class RelationSet {
 public:
  // generators in canonical order, one character each, e.g. "abcd"
  explicit RelationSet(std::string alphabet);

  // register g_hi g_lo -> factor * g_lo g_hi (+ extra)
  void add_rule(char hi, char lo, const Scalar& factor,
                std::optional<NCPoly> extra = std::nullopt);

  const std::string& alphabet() const { return alphabet_; }
  long rank(char generator) const;  // position in the alphabet

  struct SwapRule {
    Scalar factor;
    std::optional<NCPoly> extra;
  };
  // the rule for the adjacent pair (hi, lo); identity swap if none set
  const SwapRule& rule(char hi, char lo) const;

  // Quantum-matrix alphabet a < b < c < d with ba -> p ab, dc -> p cd,
  // ca -> q ac, db -> q bd, cb -> (q/p) bc, da -> ad - (1/p - q) bc.
  static RelationSet quantum_matrix(const Scalar& p, const Scalar& q);
  // Binomial alphabet a < b < y < x with ba -> p ab, xy -> q yx, and all
  // other pairs commuting.
  static RelationSet binomial(const Scalar& p, const Scalar& q);

 private:
  std::string alphabet_;
  std::map<std::pair<char, char>, SwapRule> rules_;
  SwapRule identity_swap_{Scalar(1), std::nullopt};
};

// Exhaustively rewrites poly until every word is sorted in alphabet order.
// The result is the canonical form; it does not depend on the strategy
// (checked as a tested property).  Throws NonterminationError when the
// number of rule applications exceeds the budget.
NCPoly normal_order(const NCPoly& poly, const RelationSet& rels,
                    RewriteStrategy strategy = RewriteStrategy::kLeftmost,
                    long budget = 10'000'000);

// Coefficientwise comparison after aligning words; the tolerance is
// applied relative to the largest coefficient magnitude in either operand.
bool nc_approx_equal(const NCPoly& f, const NCPoly& g,
                     const ToleranceSpec& tol);

struct BinomialPower {
  NCPoly lhs;            // normal-ordered (x+y)^n or (ax+by)^n
  NCPoly rhs_q_form;     // sum with y^k x^(n-k) words
  NCPoly rhs_qinv_form;  // sum with x^k y^(n-k) words, normal-ordered
};

// The two displayed operator binomial expansions.  With with_ab = false
// the generators are x, y with xy = q yx and the coefficients are the
// q- and (1/q)-binomial coefficients; with with_ab = true the generators
// are a, b, x, y with ab = (1/p) ba and xy = q yx, all other pairs
// commuting, and the coefficients are the (p,q)- and (1/p,1/q)-binomial
// coefficients.  All three parts are equal in canonical form.
BinomialPower nc_binomial_power(long n, const Scalar& p, const Scalar& q,
                                bool with_ab);

// Checks R (T x I)(I x T) = (I x T)(T x I) R entrywise over the
// quantum-matrix relations, with the R-matrix scaled to drop its global
// (pq)^(1/4) factor.  The remaining entries need (pq)^(1/2) and
// (p/q)^(1/2): exact when pq is a perfect rational square, decimal at the
// default precision otherwise (compared at relative 1e-30).
bool verify_rtt(const Scalar& p, const Scalar& q);

// With f(N) = (p^(-N) - q^N) / (1/p - q), checks the oscillator relation
// f(N+1) - q f(N) = p^(-N) exactly for all integer N in [0, N_max].
bool verify_oscillator_realization(const Scalar& p, const Scalar& q,
                                   long N_max);

}  // namespace pqcalc

#endif  // PQCALC_NONCOMM_HPP_
