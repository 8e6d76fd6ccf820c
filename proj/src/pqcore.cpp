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

#include "pqcalc/pqcore.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "tail_monitor.hpp"

namespace pqcalc {

Scalar twin_basic_number(long n, const BasePair& base) {
  if (n == 0) return Scalar(0);
  if (base.p == base.q) {
    return Scalar(n) * pow_int(base.p, n - 1);
  }
  return (pow_int(base.p, n) - pow_int(base.q, n)) / (base.p - base.q);
}

Scalar pq_factorial(long n, const BasePair& base) {
  if (n < 0) throw DomainError("factorial needs n >= 0");
  Scalar out(1);
  for (long k = 2; k <= n; ++k) {
    out *= twin_basic_number(k, base);
  }
  return n >= 1 ? out * twin_basic_number(1, base) : out;
}

namespace {

// Row n of the twin-basic Pascal triangle via
// [n k] = p^k [n-1, k] + q^(n-k) [n-1, k-1]; no divisions, so the row is
// well defined for every base.
std::vector<Scalar> binomial_row(long n, const BasePair& base) {
  std::vector<Scalar> row{Scalar(1)};
  std::vector<Scalar> ppow{Scalar(1)}, qpow{Scalar(1)};
  for (long m = 1; m <= n; ++m) {
    ppow.push_back(ppow.back() * base.p);
    qpow.push_back(qpow.back() * base.q);
    std::vector<Scalar> next(m + 1, Scalar(0));
    for (long j = 0; j <= m; ++j) {
      if (j < m) next[j] += ppow[j] * row[j];
      if (j > 0) next[j] += qpow[m - j] * row[j - 1];
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace

Scalar pq_binomial(long n, long k, const BasePair& base) {
  if (n < 0) throw DomainError("binomial needs n >= 0");
  if (k < 0 || k > n) return Scalar(0);
  return binomial_row(n, base)[k];
}

Scalar pq_pochhammer(const ParamDoublet& d, const BasePair& base, long n) {
  Scalar out(1);
  if (n >= 0) {
    Scalar pk(1), qk(1);
    for (long k = 0; k < n; ++k) {
      out *= d.a * pk - d.b * qk;
      pk *= base.p;
      qk *= base.q;
    }
    return out;
  }
  if (base.p.is_zero() || base.q.is_zero()) {
    throw DomainError("negative Pochhammer index needs an invertible base");
  }
  const Scalar pinv = Scalar(1) / base.p;
  const Scalar qinv = Scalar(1) / base.q;
  Scalar pj(1), qj(1);
  for (long j = 1; j <= -n; ++j) {
    pj *= pinv;
    qj *= qinv;
    const Scalar factor = d.a * pj - d.b * qj;
    if (factor.is_zero()) {
      throw PoleError("Pochhammer symbol has a pole at negative index");
    }
    out *= factor;
  }
  return Scalar(1) / out;
}

Scalar classical_pochhammer(const Scalar& x, const Scalar& rho, long n) {
  Scalar out(1);
  if (n >= 0) {
    Scalar power = x;
    for (long k = 0; k < n; ++k) {
      out *= Scalar(1) - power;
      power *= rho;
    }
    return out;
  }
  if (rho.is_zero()) {
    throw DomainError("negative Pochhammer index needs an invertible base");
  }
  const Scalar rinv = Scalar(1) / rho;
  Scalar power = x;
  for (long j = 1; j <= -n; ++j) {
    power *= rinv;
    const Scalar factor = Scalar(1) - power;
    if (factor.is_zero()) {
      throw PoleError("Pochhammer symbol has a pole at negative index");
    }
    out *= factor;
  }
  return Scalar(1) / out;
}

Scalar classical_poch_infinite(const Scalar& x, const Scalar& rho,
                               const TruncationPolicy& trunc,
                               unsigned digits) {
  const Scalar contraction = abs(rho);
  if (Scalar::cmp(contraction, Scalar(1)) >= 0) {
    throw DomainError("infinite product needs |rho| < 1");
  }
  if (x.is_zero()) return Scalar(1);

  const unsigned d = digits ? digits : std::max(x.digits(), rho.digits());
  const Scalar one(1);
  const Scalar half = Scalar::exact(1, 2);
  Scalar product = Scalar(1).to_decimal(d);
  Scalar power = x.to_decimal(d);
  const Scalar r = rho.to_decimal(d);
  for (long k = 0; k < trunc.max_terms; ++k) {
    const Scalar factor = one - power;
    if (factor.is_zero()) return Scalar(0);
    product *= factor;
    power *= r;
    // The log of the remaining factors is bounded by
    // S = sum_{j>k} |x rho^j| / (1 - |rho|); once S <= 1/2 the relative
    // truncation error is at most 2S.
    const Scalar S = abs(power) / (one - contraction);
    if (Scalar::cmp(S, half) <= 0 &&
        Scalar::cmp(S + S, trunc.tail_target) <= 0) {
      return product;
    }
  }
  throw DivergenceError("infinite product did not reach its tail target");
}

SingleBaseForm reduce_to_single_base(const ParamDoublet& d,
                                     const BasePair& base, long n) {
  if (d.a.is_zero()) {
    throw DomainError("single-base reduction needs a nonzero a-component");
  }
  if (base.p.is_zero()) {
    throw DomainError("single-base reduction needs a nonzero p");
  }
  SingleBaseForm out;
  out.param = d.b / d.a;
  out.base = base.q / base.p;
  out.prefactor = pow_int(d.a, n) * pow_int(base.p, n * (n - 1) / 2);
  return out;
}

Scalar poch_ratio_infinite(const std::vector<ParamDoublet>& num,
                           const std::vector<ParamDoublet>& den,
                           const BasePair& base, const TruncationPolicy& trunc,
                           unsigned digits) {
  if (num.size() != den.size()) {
    throw DomainError(
        "infinite product ratio needs equally many numerator and denominator "
        "doublets");
  }
  if (Scalar::cmp(abs(base.q), abs(base.p)) >= 0) {
    throw DomainError("infinite product ratio needs |q| < |p|");
  }
  Scalar num_a(1), den_a(1);
  for (const ParamDoublet& d : num) {
    if (d.a.is_zero()) {
      throw DomainError("infinite product doublets need nonzero a-components");
    }
    num_a *= d.a;
  }
  for (const ParamDoublet& d : den) {
    if (d.a.is_zero()) {
      throw DomainError("infinite product doublets need nonzero a-components");
    }
    den_a *= d.a;
  }
  if (num_a != den_a) {
    throw DomainError(
        "a-components do not balance, so the divergent prefactors cannot "
        "cancel");
  }

  bool identical = true;
  for (std::size_t i = 0; identical && i < num.size(); ++i) {
    identical = num[i].a == den[i].a && num[i].b == den[i].b;
  }
  if (identical) return Scalar(1);

  const Scalar rho = base.q / base.p;
  TruncationPolicy per = trunc;
  per.tail_target =
      trunc.tail_target / Scalar(static_cast<long>(2 * (num.size() + den.size())));

  Scalar value(1);
  for (const ParamDoublet& d : num) {
    value *= classical_poch_infinite(d.b / d.a, rho, per, digits);
  }
  Scalar denominator(1);
  for (const ParamDoublet& d : den) {
    denominator *= classical_poch_infinite(d.b / d.a, rho, per, digits);
  }
  if (denominator.is_zero()) {
    throw PoleError("denominator of the infinite product ratio vanishes");
  }
  return value / denominator;
}

Scalar pq_exponential(const Scalar& z, const BasePair& base, ExpKind kind,
                      const TruncationPolicy& trunc, unsigned digits) {
  if (z.is_zero()) return Scalar(1);
  const unsigned d =
      digits ? digits
             : std::max({z.digits(), base.p.digits(), base.q.digits()});
  const Scalar p = base.p.to_decimal(d);
  const Scalar q = base.q.to_decimal(d);
  const Scalar zz = z.to_decimal(d);
  const Scalar g = kind == ExpKind::Small ? p : q;
  const bool degenerate = p == q;

  // Limit of |t_n / t_{n-1}|: the g-powers cancel against the dominant
  // base power of [n], so the e-kind has radius |p / (p-q)| when |p| >= |q|
  // (and dually for the E-kind); in every other combination the ratio
  // tends to zero.
  std::optional<Scalar> limit = Scalar(0);
  if (!degenerate) {
    const bool p_dominant = Scalar::cmp(abs(p), abs(q)) >= 0;
    if (kind == ExpKind::Small && p_dominant) {
      limit = zz * (p - q) / p;
    } else if (kind == ExpKind::Big && !p_dominant) {
      limit = zz * (p - q) / q;
    }
  }

  detail::TailMonitor monitor(trunc.tail_target, limit);
  Scalar term = Scalar(1).to_decimal(d);
  Scalar sum = term;
  Scalar gpow(1), pn(1), qn(1);
  for (long n = 1; n <= trunc.max_terms; ++n) {
    Scalar ratio;
    if (degenerate) {
      ratio = zz / Scalar(n);
    } else {
      pn *= p;
      qn *= q;
      const Scalar denom = (pn - qn) / (p - q);
      if (denom.is_zero()) {
        throw PoleError("twin-basic integer [n] vanishes for this base");
      }
      ratio = gpow * zz / denom;
    }
    gpow *= g;
    term *= ratio;
    sum += term;
    monitor.observe(ratio);
    if (monitor.can_stop(term, sum)) return sum;
  }
  throw DivergenceError("exponential series did not reach its tail target");
}

std::vector<Scalar> gbin_expand(long n, const BasePair& base) {
  if (n < 0) throw DomainError("expansion needs n >= 0");
  const std::vector<Scalar> row = binomial_row(n, base);
  std::vector<Scalar> out;
  out.reserve(n + 1);
  for (long k = 0; k <= n; ++k) {
    const long cp = (n - k) * (n - k - 1) / 2;
    const long cq = k * (k - 1) / 2;
    Scalar c = row[k] * pow_int(base.p, cp) * pow_int(base.q, cq);
    out.push_back(k % 2 == 0 ? std::move(c) : -c);
  }
  return out;
}

}  // namespace pqcalc
