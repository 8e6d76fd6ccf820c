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

#include "pqcalc/series.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>

#include "tail_monitor.hpp"

namespace pqcalc {

namespace {

// Smallest k in [0, limit] with a p^k == b q^k (exact inputs), or -1.
// Small k is scanned directly; larger candidates come from a double-
// precision logarithm estimate verified exactly.
long termination_index(const Scalar& a, const Scalar& b, const Scalar& p,
                       const Scalar& q, long limit) {
  const long small = std::min(limit, 64L);
  Scalar pk(1), qk(1);
  for (long k = 0; k <= small; ++k) {
    if (a * pk == b * qk) return k;
    pk *= p;
    qk *= q;
  }
  if (limit <= 64 || a.is_zero() || b.is_zero() || p.is_zero() || q.is_zero()) {
    return -1;
  }
  const double x = std::fabs(a.rational().get_d() / b.rational().get_d());
  const double r = std::fabs(q.rational().get_d() / p.rational().get_d());
  if (!std::isfinite(x) || !std::isfinite(r) || x <= 0.0 || r <= 0.0 ||
      r == 1.0) {
    return -1;
  }
  const double estimate = std::log(x) / std::log(r);
  if (!std::isfinite(estimate)) return -1;
  const long center = std::lround(estimate);
  for (long k = center - 1; k <= center + 1; ++k) {
    if (k > 64 && k <= limit &&
        a * pow_int(p, k) == b * pow_int(q, k)) {
      return k;
    }
  }
  return -1;
}

unsigned max_digits(std::initializer_list<const Scalar*> values,
                    unsigned digits) {
  if (digits) return digits;
  unsigned d = 2;
  for (const Scalar* v : values) d = std::max(d, v->digits());
  return d;
}

// Shared term loop.  `step(n)` returns the ratio t_n / t_{n-1}, or nullopt
// when the numerator vanished (the series terminates with t_n = 0).  In
// exact mode the loop runs until termination; otherwise the TailMonitor
// decides when the truncated tail is certified small enough.
template <typename Step>
SeriesValue sum_terms(Step&& step, long max_steps, bool exact_mode,
                      std::optional<Scalar> limit_ratio, const Scalar& one,
                      const TruncationPolicy& trunc, bool include_unit) {
  SeriesValue out;
  out.value = include_unit ? one : Scalar(0);
  out.terms_used = include_unit ? 1 : 0;
  out.tail_bound = Scalar(0);
  Scalar term = one;
  detail::TailMonitor monitor(trunc.tail_target, std::move(limit_ratio));
  for (long n = 1; n <= max_steps; ++n) {
    std::optional<Scalar> ratio = step(n);
    if (!ratio) {
      out.terminated = true;
      return out;
    }
    term *= *ratio;
    out.value += term;
    ++out.terms_used;
    if (exact_mode) continue;
    monitor.observe(*ratio);
    if (monitor.can_stop(term, out.value)) {
      out.tail_bound = monitor.bound();
      return out;
    }
  }
  if (exact_mode) {
    throw DivergenceError("termination scan and summation disagree");
  }
  throw DivergenceError("series did not reach its tail target within max_terms");
}

std::vector<ParamDoublet> to_decimal(const std::vector<ParamDoublet>& in,
                                     unsigned d) {
  std::vector<ParamDoublet> out;
  out.reserve(in.size());
  for (const ParamDoublet& x : in) {
    out.push_back({x.a.to_decimal(d), x.b.to_decimal(d)});
  }
  return out;
}

std::vector<Scalar> to_decimal(const std::vector<Scalar>& in, unsigned d) {
  std::vector<Scalar> out;
  out.reserve(in.size());
  for (const Scalar& x : in) out.push_back(x.to_decimal(d));
  return out;
}

bool all_exact(const std::vector<ParamDoublet>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const ParamDoublet& d) { return d.is_exact(); });
}

bool all_exact(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& s) { return s.is_exact(); });
}

SeriesValue run_phi_loop(const std::vector<ParamDoublet>& num,
                         const std::vector<ParamDoublet>& den, const Scalar& p,
                         const Scalar& q, const Scalar& z, long e,
                         bool exact_mode, long max_steps,
                         std::optional<Scalar> limit_ratio, const Scalar& one,
                         const TruncationPolicy& trunc) {
  Scalar ppow = one, qpow = one, sign_pow = one;
  std::optional<Scalar> rho;
  if (e != 0) rho = q / p;  // callers guarantee p != 0 when e != 0
  auto step = [&, e](long) -> std::optional<Scalar> {
    Scalar numerator = z;
    for (const ParamDoublet& d : num) {
      Scalar f = d.a * ppow - d.b * qpow;
      if (f.is_zero()) return std::nullopt;
      numerator *= f;
    }
    Scalar denominator = p * ppow - q * qpow;  // p^n - q^n
    if (denominator.is_zero()) {
      throw PoleError("base factor p^n - q^n vanishes");
    }
    for (const ParamDoublet& d : den) {
      Scalar f = d.a * ppow - d.b * qpow;
      if (f.is_zero()) {
        throw PoleError("denominator doublet factor vanishes");
      }
      denominator *= f;
    }
    Scalar ratio = numerator / denominator;
    if (e != 0) {
      if (e < 0 && sign_pow.is_zero()) {
        throw PoleError("convention factor vanishes at negative shape exponent");
      }
      ratio *= pow_int(-sign_pow, e);
      sign_pow *= *rho;
    }
    ppow *= p;
    qpow *= q;
    return ratio;
  };
  return sum_terms(step, max_steps, exact_mode, std::move(limit_ratio), one,
                   trunc, true);
}

}  // namespace

SeriesValue eval_Phi(const SeriesSpec& spec, const TruncationPolicy& trunc,
                     unsigned digits) {
  if (spec.z.is_zero()) return {Scalar(1), 1, Scalar(0), true};
  const long e = spec.shape_exponent();

  // Termination only depends on the numerator doublets and the base, so the
  // scan runs whenever those are exact; z and the denominator merely decide
  // whether the finite sum itself comes out exact.
  long kstar = -1;
  if (spec.base.is_exact() && all_exact(spec.num)) {
    for (const ParamDoublet& d : spec.num) {
      long k = termination_index(d.a, d.b, spec.base.p, spec.base.q,
                                 trunc.max_terms - 1);
      if (k >= 0 && (kstar < 0 || k < kstar)) kstar = k;
    }
  }

  if (e != 0 && spec.base.p.is_zero()) {
    throw DomainError("shape exponent needs p != 0");
  }

  if (kstar >= 0) {
    return run_phi_loop(spec.num, spec.den, spec.base.p, spec.base.q, spec.z,
                        e, /*exact_mode=*/true, kstar + 1, std::nullopt,
                        Scalar(1), trunc);
  }

  // truncated evaluation: the base must contract
  if (Scalar::cmp(abs(spec.base.q), abs(spec.base.p)) >= 0) {
    throw DomainError("non-terminating series needs |q| < |p|");
  }
  if (e < 0) {
    throw DomainError(
        "negative shape exponent diverges unless the series terminates");
  }

  unsigned d = digits;
  if (!d) {
    d = std::max(spec.base.p.digits(), spec.base.q.digits());
    d = std::max(d, spec.z.digits());
    for (const ParamDoublet& x : spec.num) {
      d = std::max({d, x.a.digits(), x.b.digits()});
    }
    for (const ParamDoublet& x : spec.den) {
      d = std::max({d, x.a.digits(), x.b.digits()});
    }
  }
  const Scalar p = spec.base.p.to_decimal(d);
  const Scalar q = spec.base.q.to_decimal(d);
  const Scalar z = spec.z.to_decimal(d);
  const std::vector<ParamDoublet> num = to_decimal(spec.num, d);
  const std::vector<ParamDoublet> den = to_decimal(spec.den, d);

  std::optional<Scalar> limit = Scalar(0);  // e > 0: ratios tend to zero
  if (e == 0) {
    Scalar L = z / p;
    bool known = true;
    for (const ParamDoublet& x : num) L *= x.a;
    for (const ParamDoublet& x : den) {
      if (x.a.is_zero()) {
        known = false;
        break;
      }
      L /= x.a;
    }
    limit = known ? std::optional<Scalar>(L) : std::nullopt;
  }

  return run_phi_loop(num, den, p, q, z, e, /*exact_mode=*/false,
                      trunc.max_terms, std::move(limit),
                      Scalar(1).to_decimal(d), trunc);
}

SeriesValue eval_phi_classical(const ClassicalSeriesSpec& spec,
                               const TruncationPolicy& trunc,
                               unsigned digits) {
  if (spec.z.is_zero()) return {Scalar(1), 1, Scalar(0), true};
  const long e = spec.shape_exponent();

  // Termination only depends on the numerator parameters and the base.
  long kstar = -1;
  if (spec.base.is_exact() && all_exact(spec.num)) {
    const Scalar one(1);
    for (const Scalar& alpha : spec.num) {
      long k = termination_index(one, alpha, one, spec.base,
                                 trunc.max_terms - 1);
      if (k >= 0 && (kstar < 0 || k < kstar)) kstar = k;
    }
  }

  const bool exact_mode = kstar >= 0;
  unsigned d = digits;
  if (!d) {
    d = std::max(spec.base.digits(), spec.z.digits());
    for (const Scalar& x : spec.num) d = std::max(d, x.digits());
    for (const Scalar& x : spec.den) d = std::max(d, x.digits());
  }

  Scalar b = spec.base, z = spec.z;
  std::vector<Scalar> num = spec.num, den = spec.den;
  if (!exact_mode) {
    if (Scalar::cmp(abs(spec.base), Scalar(1)) >= 0) {
      throw DomainError("non-terminating series needs |base| < 1");
    }
    if (e < 0) {
      throw DomainError(
          "negative shape exponent diverges unless the series terminates");
    }
    b = b.to_decimal(d);
    z = z.to_decimal(d);
    num = to_decimal(num, d);
    den = to_decimal(den, d);
  }
  const Scalar one = exact_mode ? Scalar(1) : Scalar(1).to_decimal(d);

  Scalar bpow = one;      // base^(n-1)
  Scalar bp_full = b;     // base^n
  Scalar sign_pow = one;  // base^(n-1) for the convention factor
  auto step = [&](long) -> std::optional<Scalar> {
    Scalar numerator = z;
    for (const Scalar& alpha : num) {
      Scalar f = one - alpha * bpow;
      if (f.is_zero()) return std::nullopt;
      numerator *= f;
    }
    Scalar denominator = one - bp_full;
    if (denominator.is_zero()) {
      throw PoleError("base factor 1 - base^n vanishes");
    }
    for (const Scalar& beta : den) {
      Scalar f = one - beta * bpow;
      if (f.is_zero()) {
        throw PoleError("denominator parameter factor vanishes");
      }
      denominator *= f;
    }
    Scalar ratio = numerator / denominator;
    if (e != 0) {
      if (e < 0 && sign_pow.is_zero()) {
        throw PoleError("convention factor vanishes at negative shape exponent");
      }
      ratio *= pow_int(-sign_pow, e);
      sign_pow *= b;
    }
    bpow *= b;
    bp_full *= b;
    return ratio;
  };

  std::optional<Scalar> limit;
  if (!exact_mode) limit = e == 0 ? z : Scalar(0);
  return sum_terms(step, exact_mode ? kstar + 1 : trunc.max_terms, exact_mode,
                   std::move(limit), one, trunc, true);
}

SeriesSpec embed_phi_to_Phi(const ClassicalSeriesSpec& spec,
                            const BasePair& base) {
  if (base.p.is_zero()) throw DomainError("embedding needs p != 0");
  if (base.q / base.p != spec.base) {
    throw DomainError("embedding needs q/p equal to the classical base");
  }
  SeriesSpec out;
  out.base = base;
  out.z = base.p * spec.z;
  out.num.reserve(spec.num.size());
  for (const Scalar& alpha : spec.num) {
    out.num.push_back({Scalar(1), alpha});
  }
  out.den.reserve(spec.den.size());
  for (const Scalar& beta : spec.den) {
    out.den.push_back({Scalar(1), beta});
  }
  const long e = spec.shape_exponent();
  for (long i = 0; i < e; ++i) out.num.push_back({Scalar(0), Scalar(1)});
  for (long i = 0; i < -e; ++i) out.den.push_back({Scalar(0), Scalar(1)});
  return out;
}

ClassicalSeriesSpec project_Phi_to_phi(const SeriesSpec& spec) {
  if (spec.shape_exponent() != 0) {
    throw DomainError("only the shape s = r - 1 collapses to a single base");
  }
  if (spec.base.p.is_zero()) throw DomainError("projection needs p != 0");
  ClassicalSeriesSpec out;
  out.base = spec.base.q / spec.base.p;
  Scalar scale = spec.z / spec.base.p;
  out.num.reserve(spec.num.size());
  for (const ParamDoublet& d : spec.num) {
    if (d.a.is_zero()) {
      throw DomainError("projection needs nonzero a-components");
    }
    out.num.push_back(d.b / d.a);
    scale *= d.a;
  }
  out.den.reserve(spec.den.size());
  for (const ParamDoublet& d : spec.den) {
    if (d.a.is_zero()) {
      throw DomainError("projection needs nonzero a-components");
    }
    out.den.push_back(d.b / d.a);
    scale /= d.a;
  }
  out.z = scale;
  return out;
}

SeriesSpec confluence_limit_spec(const SeriesSpec& spec,
                                 std::size_t num_index) {
  if (num_index >= spec.num.size()) {
    throw DomainError("confluence limit needs a valid numerator index");
  }
  SeriesSpec out = spec;
  out.num[num_index] = {Scalar(0), Scalar(1)};
  return out;
}

SeriesValue eval_Psi11(const ParamDoublet& num, const ParamDoublet& den,
                       const BasePair& base, const Scalar& z,
                       const TruncationPolicy& trunc, unsigned digits) {
  if (z.is_zero()) throw DomainError("bilateral series needs z != 0");
  if (base.q.is_zero()) {
    throw DomainError("bilateral series needs an invertible base");
  }
  if (Scalar::cmp(abs(base.q), abs(base.p)) >= 0) {
    throw DomainError("bilateral series needs |q| < |p|");
  }
  // convergence strip |d/b| < |z| < |c/a|
  if (Scalar::cmp(abs(den.b), abs(num.b * z)) >= 0 ||
      Scalar::cmp(abs(num.a * z), abs(den.a)) >= 0) {
    throw DomainError(
        "argument outside the bilateral convergence strip |d/b| < |z| < "
        "|c/a|");
  }

  const unsigned d =
      max_digits({&num.a, &num.b, &den.a, &den.b, &base.p, &base.q, &z},
                 digits);
  const Scalar p = base.p.to_decimal(d);
  const Scalar q = base.q.to_decimal(d);
  const Scalar a = num.a.to_decimal(d), b = num.b.to_decimal(d);
  const Scalar c = den.a.to_decimal(d), dd = den.b.to_decimal(d);
  const Scalar zz = z.to_decimal(d);
  const Scalar one = Scalar(1).to_decimal(d);

  TruncationPolicy half = trunc;
  half.tail_target = trunc.tail_target / Scalar(2);

  // n >= 0 side
  Scalar ppow = one, qpow = one;
  auto pos_step = [&](long) -> std::optional<Scalar> {
    Scalar f = a * ppow - b * qpow;
    if (f.is_zero()) return std::nullopt;
    Scalar g = c * ppow - dd * qpow;
    if (g.is_zero()) throw PoleError("denominator doublet factor vanishes");
    ppow *= p;
    qpow *= q;
    return f / g * zz;
  };
  SeriesValue pos = sum_terms(pos_step, half.max_terms, false,
                              abs(a * zz / c), one, half, true);

  // n <= -1 side
  const Scalar pinv = one / p;
  const Scalar qinv = one / q;
  Scalar pm = one, qm = one;
  auto neg_step = [&](long) -> std::optional<Scalar> {
    pm *= pinv;
    qm *= qinv;
    Scalar f = c * pm - dd * qm;
    if (f.is_zero()) return std::nullopt;
    Scalar g = a * pm - b * qm;
    if (g.is_zero()) throw PoleError("denominator doublet factor vanishes");
    return f / (g * zz);
  };
  SeriesValue neg = sum_terms(neg_step, half.max_terms, false,
                              abs(dd / (b * zz)), one, half, false);

  SeriesValue out;
  out.value = pos.value + neg.value;
  out.terms_used = pos.terms_used + neg.terms_used;
  out.tail_bound = pos.tail_bound + neg.tail_bound;
  out.terminated = pos.terminated && neg.terminated;
  return out;
}

SeriesValue eval_bibasic(const std::vector<Scalar>& num_q,
                         const std::vector<Scalar>& num_q1,
                         const std::vector<Scalar>& den_q,
                         const std::vector<Scalar>& den_q1, const Scalar& q,
                         const Scalar& q1, const Scalar& z,
                         const TruncationPolicy& trunc, unsigned digits) {
  if (z.is_zero()) return {Scalar(1), 1, Scalar(0), true};

  // Termination only depends on the numerator parameters and their bases.
  long kstar = -1;
  const Scalar one_exact(1);
  if (q.is_exact() && all_exact(num_q)) {
    for (const Scalar& alpha : num_q) {
      long k = termination_index(one_exact, alpha, one_exact, q,
                                 trunc.max_terms - 1);
      if (k >= 0 && (kstar < 0 || k < kstar)) kstar = k;
    }
  }
  if (q1.is_exact() && all_exact(num_q1)) {
    for (const Scalar& gamma : num_q1) {
      long k = termination_index(one_exact, gamma, one_exact, q1,
                                 trunc.max_terms - 1);
      if (k >= 0 && (kstar < 0 || k < kstar)) kstar = k;
    }
  }
  const bool exact_mode = kstar >= 0;

  unsigned d = digits;
  if (!d) {
    d = std::max({q.digits(), q1.digits(), z.digits()});
    for (const Scalar& x : num_q) d = std::max(d, x.digits());
    for (const Scalar& x : num_q1) d = std::max(d, x.digits());
    for (const Scalar& x : den_q) d = std::max(d, x.digits());
    for (const Scalar& x : den_q1) d = std::max(d, x.digits());
  }

  Scalar qq = q, qq1 = q1, zz = z;
  std::vector<Scalar> nq = num_q, nq1 = num_q1, dq = den_q, dq1 = den_q1;
  if (!exact_mode) {
    if (Scalar::cmp(abs(q), Scalar(1)) >= 0 ||
        Scalar::cmp(abs(q1), Scalar(1)) >= 0) {
      throw DomainError("non-terminating bibasic series needs |q| < 1 and |q1| < 1");
    }
    qq = qq.to_decimal(d);
    qq1 = qq1.to_decimal(d);
    zz = zz.to_decimal(d);
    nq = to_decimal(nq, d);
    nq1 = to_decimal(nq1, d);
    dq = to_decimal(dq, d);
    dq1 = to_decimal(dq1, d);
  }
  const Scalar one = exact_mode ? Scalar(1) : Scalar(1).to_decimal(d);

  Scalar qpow = one, q1pow = one, qfull = qq;
  auto step = [&](long) -> std::optional<Scalar> {
    Scalar numerator = zz;
    for (const Scalar& alpha : nq) {
      Scalar f = one - alpha * qpow;
      if (f.is_zero()) return std::nullopt;
      numerator *= f;
    }
    for (const Scalar& gamma : nq1) {
      Scalar f = one - gamma * q1pow;
      if (f.is_zero()) return std::nullopt;
      numerator *= f;
    }
    Scalar denominator = one - qfull;
    if (denominator.is_zero()) {
      throw PoleError("base factor 1 - q^n vanishes");
    }
    for (const Scalar& beta : dq) {
      Scalar f = one - beta * qpow;
      if (f.is_zero()) throw PoleError("denominator parameter factor vanishes");
      denominator *= f;
    }
    for (const Scalar& delta : dq1) {
      Scalar f = one - delta * q1pow;
      if (f.is_zero()) throw PoleError("denominator parameter factor vanishes");
      denominator *= f;
    }
    qpow *= qq;
    q1pow *= qq1;
    qfull *= qq;
    return numerator / denominator;
  };

  std::optional<Scalar> limit;
  if (!exact_mode) limit = zz;
  return sum_terms(step, exact_mode ? kstar + 1 : trunc.max_terms, exact_mode,
                   std::move(limit), one, trunc, true);
}

}  // namespace pqcalc
