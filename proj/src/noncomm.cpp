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

#include "pqcalc/noncomm.hpp"

#include <array>
#include <utility>
#include <vector>

#include "pqcalc/errors.hpp"
#include "pqcalc/pqcore.hpp"

namespace pqcalc {

NCPoly NCPoly::term(const std::string& word, const Scalar& coef) {
  NCPoly out;
  out.add_term(word, coef);
  return out;
}

Scalar NCPoly::coeff(const std::string& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void NCPoly::add_term(const std::string& word, const Scalar& coef) {
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.emplace(word, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& other) {
  for (const auto& [word, coef] : other.terms_) add_term(word, coef);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& other) {
  for (const auto& [word, coef] : other.terms_) add_term(word, -coef);
  return *this;
}

NCPoly operator*(const NCPoly& f, const NCPoly& g) {
  NCPoly out;
  for (const auto& [wf, cf] : f.terms_) {
    for (const auto& [wg, cg] : g.terms_) {
      out.add_term(wf + wg, cf * cg);
    }
  }
  return out;
}

NCPoly operator*(const Scalar& s, const NCPoly& f) {
  NCPoly out;
  for (const auto& [word, coef] : f.terms_) out.add_term(word, s * coef);
  return out;
}

bool NCPoly::operator==(const NCPoly& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  auto it = other.terms_.begin();
  for (const auto& [word, coef] : terms_) {
    if (word != it->first || !(coef == it->second)) return false;
    ++it;
  }
  return true;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [word, coef] : terms_) {
    if (!out.empty()) out += " + ";
    if (word.empty()) {
      out += coef.str();
    } else if (coef == Scalar(1)) {
      out += word;
    } else {
      out += coef.str() + "*" + word;
    }
  }
  return out;
}

RelationSet::RelationSet(std::string alphabet)
    : alphabet_(std::move(alphabet)) {
  if (alphabet_.empty()) throw DomainError("alphabet must be nonempty");
}

long RelationSet::rank(char generator) const {
  auto pos = alphabet_.find(generator);
  if (pos == std::string::npos) {
    throw DomainError(std::string("unknown generator '") + generator + "'");
  }
  return static_cast<long>(pos);
}

void RelationSet::add_rule(char hi, char lo, const Scalar& factor,
                           std::optional<NCPoly> extra) {
  if (rank(hi) <= rank(lo)) {
    throw DomainError("swap rule must rewrite an out-of-order pair");
  }
  rules_[{hi, lo}] = SwapRule{factor, std::move(extra)};
}

const RelationSet::SwapRule& RelationSet::rule(char hi, char lo) const {
  auto it = rules_.find({hi, lo});
  return it == rules_.end() ? identity_swap_ : it->second;
}

RelationSet RelationSet::quantum_matrix(const Scalar& p, const Scalar& q) {
  if (p.is_zero() || q.is_zero()) {
    throw DomainError("quantum-matrix relations need nonzero p and q");
  }
  RelationSet rels("abcd");
  rels.add_rule('b', 'a', p);
  rels.add_rule('d', 'c', p);
  rels.add_rule('c', 'a', q);
  rels.add_rule('d', 'b', q);
  rels.add_rule('c', 'b', q / p);
  Scalar kappa = Scalar(1) / p - q;
  rels.add_rule('d', 'a', Scalar(1), NCPoly::term("bc", -kappa));
  return rels;
}

RelationSet RelationSet::binomial(const Scalar& p, const Scalar& q) {
  RelationSet rels("abyx");
  rels.add_rule('b', 'a', p);
  rels.add_rule('x', 'y', q);
  return rels;
}

namespace {

// position of the next out-of-order adjacent pair, or -1 if sorted
long find_descent(const std::string& word, const RelationSet& rels,
                  RewriteStrategy strategy) {
  if (strategy == RewriteStrategy::kLeftmost) {
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (rels.rank(word[i]) > rels.rank(word[i + 1])) return i;
    }
  } else {
    for (std::size_t i = word.size(); i-- > 1;) {
      if (rels.rank(word[i - 1]) > rels.rank(word[i])) return i - 1;
    }
  }
  return -1;
}

}  // namespace

NCPoly normal_order(const NCPoly& poly, const RelationSet& rels,
                    RewriteStrategy strategy, long budget) {
  NCPoly canonical;
  std::vector<std::pair<std::string, Scalar>> work(poly.terms().begin(),
                                                   poly.terms().end());
  long steps = 0;
  while (!work.empty()) {
    auto [word, coef] = std::move(work.back());
    work.pop_back();
    long at = find_descent(word, rels, strategy);
    if (at < 0) {
      canonical += NCPoly::term(word, coef);
      continue;
    }
    if (++steps > budget) {
      throw NonterminationError("rewrite budget exceeded");
    }
    const char hi = word[at], lo = word[at + 1];
    const RelationSet::SwapRule& rule = rels.rule(hi, lo);
    std::string swapped = word;
    swapped[at] = lo;
    swapped[at + 1] = hi;
    work.emplace_back(std::move(swapped), coef * rule.factor);
    if (rule.extra) {
      const std::string prefix = word.substr(0, at);
      const std::string suffix = word.substr(at + 2);
      for (const auto& [mid, c] : rule.extra->terms()) {
        work.emplace_back(prefix + mid + suffix, coef * c);
      }
    }
  }
  return canonical;
}

bool nc_approx_equal(const NCPoly& f, const NCPoly& g,
                     const ToleranceSpec& tol) {
  Scalar scale(0);
  for (const auto& [word, coef] : f.terms()) {
    Scalar m = abs(coef);
    if (Scalar::cmp(m, scale) > 0) scale = m;
  }
  for (const auto& [word, coef] : g.terms()) {
    Scalar m = abs(coef);
    if (Scalar::cmp(m, scale) > 0) scale = m;
  }
  NCPoly diff = f - g;
  for (const auto& [word, coef] : diff.terms()) {
    Scalar err = abs(coef);
    bool ok = Scalar::cmp(err, tol.abs) <= 0 ||
              Scalar::cmp(err, tol.rel * scale) <= 0;
    if (!ok) return false;
  }
  return true;
}

BinomialPower nc_binomial_power(long n, const Scalar& p, const Scalar& q,
                                bool with_ab) {
  if (n < 0) throw DomainError("binomial power needs n >= 0");
  if (p.is_zero() || q.is_zero()) {
    throw DomainError("binomial power needs nonzero p and q");
  }
  RelationSet rels = RelationSet::binomial(p, q);
  const Scalar one(1);
  const Scalar pinv = one / p, qinv = one / q;

  NCPoly base = with_ab ? NCPoly::term("ax") + NCPoly::term("by")
                        : NCPoly::term("x") + NCPoly::term("y");
  NCPoly lhs = NCPoly::one();
  for (long i = 0; i < n; ++i) lhs = normal_order(lhs * base, rels);

  BinomialPower out;
  out.lhs = lhs;
  NCPoly straight, inverted;
  for (long k = 0; k <= n; ++k) {
    std::string w_q, w_qinv;
    if (with_ab) {
      w_q.append(n - k, 'a').append(k, 'b');
      w_qinv.append(n - k, 'b').append(k, 'a');
    }
    w_q.append(k, 'y').append(n - k, 'x');
    w_qinv.append(k, 'x').append(n - k, 'y');
    if (with_ab) {
      straight += NCPoly::term(w_q, pq_binomial(n, k, {p, q}));
      inverted += NCPoly::term(w_qinv, pq_binomial(n, k, {pinv, qinv}));
    } else {
      straight += NCPoly::term(w_q, pq_binomial(n, k, {one, q}));
      inverted += NCPoly::term(w_qinv, pq_binomial(n, k, {one, qinv}));
    }
  }
  out.rhs_q_form = normal_order(straight, rels);
  out.rhs_qinv_form = normal_order(inverted, rels);
  return out;
}

bool verify_rtt(const Scalar& p, const Scalar& q) {
  if (p.sign() <= 0 || q.sign() <= 0) {
    throw DomainError("RTT check needs p > 0 and q > 0");
  }
  RelationSet rels = RelationSet::quantum_matrix(p, q);

  const Scalar s = sqrt_scalar(p * q);  // exact when pq is a perfect square
  const Scalar t = p / s;               // (p/q)^(1/2)
  const Scalar zero(0), sinv = Scalar(1) / s, tinv = Scalar(1) / t;
  // the global (pq)^(1/4) factor is dropped: it scales both sides alike
  const std::array<std::array<Scalar, 4>, 4> R = {{
      {sinv, zero, zero, zero},
      {zero, tinv, zero, zero},
      {zero, sinv - s, t, zero},
      {zero, zero, zero, sinv},
  }};

  const std::array<std::array<const char*, 2>, 2> T = {{{"a", "b"},
                                                        {"c", "d"}}};
  // row/column index (i,k) -> 2i + k
  std::array<std::array<NCPoly, 4>, 4> A, B;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) {
          A[2 * i + k][2 * j + l] =
              NCPoly::term(std::string(T[i][j]) + T[k][l]);
          B[2 * i + k][2 * j + l] =
              NCPoly::term(std::string(T[k][l]) + T[i][j]);
        }

  const bool exact = s.is_exact() && p.is_exact() && q.is_exact();
  const ToleranceSpec tol = ToleranceSpec::relative("1e-30");
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) {
      NCPoly lhs, rhs;
      for (int mid = 0; mid < 4; ++mid) {
        lhs += R[row][mid] * A[mid][col];
        rhs += R[mid][col] * B[row][mid];
      }
      lhs = normal_order(lhs, rels);
      rhs = normal_order(rhs, rels);
      if (exact ? !(lhs == rhs) : !nc_approx_equal(lhs, rhs, tol)) {
        return false;
      }
    }
  }
  return true;
}

bool verify_oscillator_realization(const Scalar& p, const Scalar& q,
                                   long N_max) {
  if (p.is_zero()) throw DomainError("oscillator realization needs p != 0");
  const Scalar pinv = Scalar(1) / p;
  if (pinv == q) {
    throw DomainError("realization denominator 1/p - q vanishes");
  }
  const Scalar den = pinv - q;
  auto f = [&](long N) {
    return (pow_int(pinv, N) - pow_int(q, N)) / den;
  };
  for (long N = 0; N <= N_max; ++N) {
    if (!(f(N + 1) - q * f(N) == pow_int(pinv, N))) return false;
  }
  return true;
}

}  // namespace pqcalc
