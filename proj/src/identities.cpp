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

#include "pqcalc/identities.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pqcalc/noncomm.hpp"
#include "pqcalc/series.hpp"

namespace pqcalc {
namespace {

using Params = std::map<std::string, Scalar>;

// ---------------------------------------------------------------------------
// Small utilities
// ---------------------------------------------------------------------------

unsigned long long fnv1a(const std::string& text) {
  unsigned long long h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

long rand_long(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() %
                                static_cast<unsigned long long>(hi - lo + 1));
}

// Uniform draw from the rational lattice {lo + (hi-lo) k/64 : k = 0..64}.
// Kept rational so sampled points stay exact and reproducible everywhere.
Scalar ratq(std::mt19937_64& rng, const Scalar& lo, const Scalar& hi) {
  return lo + (hi - lo) * Scalar::exact(rand_long(rng, 0, 64), 64);
}

Scalar rand_sign(std::mt19937_64& rng, const Scalar& magnitude) {
  return (rng() & 1) ? magnitude : -magnitude;
}

const Scalar& scalar_max(const Scalar& x, const Scalar& y) {
  return Scalar::cmp(x, y) >= 0 ? x : y;
}

const Scalar& scalar_min(const Scalar& x, const Scalar& y) {
  return Scalar::cmp(x, y) <= 0 ? x : y;
}

bool is_contracting(const BasePair& base) { return abs(base.q) < abs(base.p); }

Scalar rho_of(const BasePair& base) { return base.q / base.p; }

const Scalar& arg(const Params& m, const char* name) {
  auto it = m.find(name);
  if (it == m.end()) {
    throw DomainError(std::string("missing parameter '") + name + "'");
  }
  return it->second;
}

long int_arg(const Params& m, const char* name) { return arg(m, name).to_long(); }

std::string check_int(const Params& m, const char* name, long lo, long hi) {
  const Scalar& v = arg(m, name);
  if (!v.is_exact() || !v.is_integer()) {
    return std::string(name) + " must be an exact integer";
  }
  const long n = v.to_long();
  if (n < lo || n > hi) {
    return std::string(name) + " must lie in [" + std::to_string(lo) + ", " +
           std::to_string(hi) + "]";
  }
  return "";
}

BasePair sample_base(std::mt19937_64& rng, const GridConfig& grid) {
  const Scalar p = ratq(rng, grid.p_min, grid.p_max);
  const Scalar rho = ratq(rng, grid.rho_min, grid.rho_max);
  return BasePair{p, p * rho};
}

// True when positive x keeps a 1/16 multiplicative clearance from every
// power rho^m, so products with factors (1 - x rho^k) stay away from zero.
bool clear_of_powers(const Scalar& x, const Scalar& rho) {
  if (x.sign() <= 0) return true;
  const Scalar margin = Scalar::exact(1, 16);
  Scalar pw = pow_int(rho, -90);
  for (int m = -90; m <= 90; ++m) {
    if (abs(x / pw - Scalar(1)) < margin) return false;
    pw *= rho;
  }
  return true;
}

// Clearance from the half-integer powers rho^(k + 1/2), k >= 0, where the
// triple-product theta value vanishes.
bool clear_of_half_powers(const Scalar& w, const Scalar& rho,
                          unsigned digits) {
  if (w.sign() <= 0) return true;
  const Scalar margin = Scalar::exact(1, 16);
  Scalar pw = sqrt_scalar(rho, digits);
  for (int k = 0; k <= 200; ++k) {
    if (abs(w / pw - Scalar(1)) < margin) return false;
    if (pw < w * Scalar::exact(1, 8)) break;
    pw *= rho;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Case plumbing
// ---------------------------------------------------------------------------

// What a single verification run produced: value pairs that must agree to
// tolerance, plus free-form notes.  `inequality_ok` carries side conditions
// that are asserted as strict inequalities rather than equalities.
struct Sides {
  std::vector<std::pair<Scalar, Scalar>> comparisons;
  std::vector<std::string> notes;
  long terms = 0;
  bool inequality_ok = true;
};

struct CaseImpl {
  IdentityCase meta;
  // Relative-tolerance floor applied by run_suite ("" = none); identities
  // whose certified truncation error is coarser than the default grid
  // tolerance declare it here.
  std::string rel_floor;
  std::function<std::string(const Params&, const BasePair&)> admissible;
  std::function<Sides(const Params&, const BasePair&, const TruncationPolicy&)>
      run;
  std::function<void(std::mt19937_64&, const GridConfig&, Params&, BasePair&)>
      sample;
};

std::string tol_to_string(const ToleranceSpec& tol) {
  if (tol.abs.is_zero() && tol.rel.is_zero()) return "exact";
  return "abs=" + tol.abs.str() + ";rel=" + tol.rel.str();
}

void fill_report(VerificationReport& rep, const Sides& s,
                 const ToleranceSpec& tol) {
  rep.truncation_terms = s.terms;
  for (const std::string& n : s.notes) rep.notes.push_back(n);
  if (!s.comparisons.empty()) {
    rep.lhs = s.comparisons.front().first.str();
    rep.rhs = s.comparisons.front().second.str();
  }
  bool ok = s.inequality_ok;
  Scalar worst_abs(0);
  Scalar worst_rel(0);
  for (const auto& [x, y] : s.comparisons) {
    if (!approx_equal(x, y, tol)) ok = false;
    const Scalar d = abs(x - y);
    if (Scalar::cmp(d, worst_abs) > 0) worst_abs = d;
    const Scalar m = scalar_max(abs(x), abs(y));
    if (!m.is_zero()) {
      const Scalar r = d / m;
      if (Scalar::cmp(r, worst_rel) > 0) worst_rel = r;
    }
  }
  rep.abs_residual = worst_abs.str();
  rep.rel_residual = worst_rel.str();
  rep.pass = ok;
}

// ---------------------------------------------------------------------------
// Specialized certified sums shared by a few cases
// ---------------------------------------------------------------------------

// sum_{n in Z} (-1)^n rho^(n^2/2) w^n with the tail certified through
// |t_(n+1)| <= |t_n| * rho^(n + 1/2) * max(|w|, 1/|w|).
Scalar theta_sum_bilateral(const Scalar& w, const Scalar& rho,
                           const TruncationPolicy& trunc, long& terms_out) {
  const unsigned digits = default_precision();
  const Scalar sr = sqrt_scalar(rho, digits);
  const Scalar aw = abs(w);
  const Scalar big = scalar_max(aw, Scalar(1) / aw);
  Scalar sum(1);
  Scalar wn(1), wninv(1);
  for (long n = 1; n <= trunc.max_terms; ++n) {
    wn = wn * w;
    wninv = wninv / w;
    const Scalar t = pow_int(sr, n * n) * (wn + wninv);
    sum = (n % 2 != 0) ? sum - t : sum + t;
    const Scalar r = pow_int(sr, 2 * n + 1) * big;
    if (Scalar::cmp(r, Scalar(1)) < 0) {
      if (geometric_tail_bound(abs(t), r) <= trunc.tail_target * abs(sum)) {
        terms_out = n;
        return sum;
      }
    }
  }
  throw DivergenceError("bilateral theta sum did not meet its tail target");
}

// prod_{n>=1} (p^n - q^n)(p^(n-1/2) - q^(n-1/2) w)(p^(n-1/2) w - q^(n-1/2))
//             / (p^(3n-1) w)
// with the remaining factors bounded through |f_k - 1| <= 3 M rho^(k-1/2).
Scalar theta_product_explicit(const BasePair& base, const Scalar& w,
                              const TruncationPolicy& trunc, long& terms_out) {
  const unsigned digits = default_precision();
  const Scalar sp = sqrt_scalar(base.p, digits);
  const Scalar sq = sqrt_scalar(base.q, digits);
  const Scalar rho = rho_of(base);
  const Scalar srho = sqrt_scalar(rho, digits);
  const Scalar aw = abs(w);
  const Scalar big = scalar_max(scalar_max(aw, Scalar(1) / aw), Scalar(1));
  Scalar prod(1);
  for (long n = 1; n <= trunc.max_terms; ++n) {
    const Scalar pn = pow_int(base.p, n);
    const Scalar qn = pow_int(base.q, n);
    const Scalar ph = pn / sp;
    const Scalar qh = qn / sq;
    prod = prod * (pn - qn) * (ph - qh * w) * (ph * w - qh) /
           (pow_int(base.p, 3 * n - 1) * w);
    const Scalar dev = Scalar(3) * big * pow_int(rho, n) * srho;
    if (Scalar::cmp(dev, Scalar::exact(1, 100)) <= 0) {
      const Scalar remaining = Scalar(8) * dev / (Scalar(1) - rho);
      if (Scalar::cmp(remaining, trunc.tail_target) <= 0) {
        terms_out = n;
        return prod;
      }
    }
  }
  throw DivergenceError("explicit theta product did not meet its tail target");
}

// 1 + sum_{n>=1} (-1)^n (qc^((3n^2-n)/2) + qc^((3n^2+n)/2)) for 0 < qc < 1,
// exact in qc, with the tail certified via the term ratio bound qc^(3n+1).
Scalar alternating_exponent_sum(const Scalar& qc, const TruncationPolicy& trunc,
                                long& terms_out) {
  Scalar sum(1);
  for (long n = 1; n <= trunc.max_terms; ++n) {
    const Scalar t =
        pow_int(qc, (3 * n * n - n) / 2) * (Scalar(1) + pow_int(qc, n));
    sum = (n % 2 != 0) ? sum - t : sum + t;
    const Scalar r = pow_int(qc, 3 * n + 1);
    if (geometric_tail_bound(abs(t), r) <= trunc.tail_target * abs(sum)) {
      terms_out = n;
      return sum;
    }
  }
  throw DivergenceError(
      "alternating exponent sum did not meet its tail target");
}

// Largest coefficient magnitude of a noncommutative polynomial.
Scalar max_coeff(const NCPoly& f) {
  Scalar m(0);
  for (const auto& [word, coef] : f.terms()) {
    (void)word;
    const Scalar a = abs(coef);
    if (Scalar::cmp(a, m) > 0) m = a;
  }
  return m;
}

// ---------------------------------------------------------------------------
// 1. pq_binomial_theorem
// ---------------------------------------------------------------------------

CaseImpl make_pq_binomial_theorem() {
  CaseImpl c;
  c.meta.name = "pq_binomial_theorem";
  c.meta.params = {"a", "b", "z"};
  c.meta.summary =
      "1Phi0 with numerator doublet (a,b) equals the infinite product ratio "
      "((p,bz);(p,q))_inf / ((p,az);(p,q))_inf";
  c.meta.domain = "|q| < |p|, |a z / p| < 1";
  c.admissible = [](const Params& m, const BasePair& B) -> std::string {
    if (!is_contracting(B)) return "base must contract (|q| < |p|)";
    if (!(abs(arg(m, "a") * arg(m, "z") / B.p) < Scalar(1))) {
      return "|a z / p| must be < 1";
    }
    return "";
  };
  c.run = [](const Params& m, const BasePair& B,
             const TruncationPolicy& trunc) -> Sides {
    const Scalar& a = arg(m, "a");
    const Scalar& b = arg(m, "b");
    const Scalar& z = arg(m, "z");
    const SeriesValue lhs = eval_Phi({{{a, b}}, {}, B, z}, trunc);
    const Scalar rhs =
        poch_ratio_infinite({{B.p, b * z}}, {{B.p, a * z}}, B, trunc);
    Sides s;
    s.comparisons.push_back({lhs.value, rhs});
    s.terms = lhs.terms_used;
    return s;
  };
  c.sample = [](std::mt19937_64& rng, const GridConfig& grid, Params& m,
                BasePair& B) {
    B = sample_base(rng, grid);
    const Scalar a = ratq(rng, Scalar::exact(1, 4), Scalar(2));
    const Scalar b = ratq(rng, Scalar::exact(1, 4), Scalar(2));
    const Scalar cap = scalar_max(scalar_max(a, b), Scalar(1));
    const Scalar z = rand_sign(
        rng, ratq(rng, Scalar::exact(1, 20), Scalar::exact(9, 10)) * B.p / cap);
    m = {{"a", a}, {"b", b}, {"z", z}};
  };
  return c;
}

// ---------------------------------------------------------------------------
// 2. permutation_product_law
// ---------------------------------------------------------------------------

CaseImpl make_permutation_product_law() {
  CaseImpl c;
  c.meta.name = "permutation_product_law";
  c.meta.params = {"u1p", "u1q", "u2p", "u2q", "u3p", "u3q", "z"};
  c.meta.summary =
      "prod_i 1Phi0((u_ip, u_iq); z) is invariant under independent "
      "permutations of the p-components and of the q-components, and equals 1 "
      "when the q-components are a permutation of the p-components";
  c.meta.domain = "|q| < |p|, max_i |u_ip z / p| < 1";
  c.admissible = [](const Params& m, const BasePair& B) -> std::string {
    if (!is_contracting(B)) return "base must contract (|q| < |p|)";
    for (const char* name : {"u1p", "u2p", "u3p"}) {
      if (!(abs(arg(m, name) * arg(m, "z") / B.p) < Scalar(1))) {
        return std::string("|") + name + " z / p| must be < 1";
      }
    }
    return "";
  };
  c.run = [](const Params& m, const BasePair& B,
             const TruncationPolicy& trunc) -> Sides {
    static constexpr int kPerm3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    const std::array<Scalar, 3> up = {arg(m, "u1p"), arg(m, "u2p"),
                                      arg(m, "u3p")};
    const std::array<Scalar, 3> uq = {arg(m, "u1q"), arg(m, "u2q"),
                                      arg(m, "u3q")};
    const Scalar& z = arg(m, "z");
    Sides s;
    auto product_for = [&](const int* sp, const int* sq) {
      Scalar v(1);
      for (int i = 0; i < 3; ++i) {
        const SeriesValue r =
            eval_Phi({{{up[sp[i]], uq[sq[i]]}}, {}, B, z}, trunc);
        v = v * r.value;
        s.terms = std::max(s.terms, r.terms_used);
      }
      return v;
    };
    const Scalar reference = product_for(kPerm3[0], kPerm3[0]);
    for (int si = 0; si < 6; ++si) {
      for (int ti = 0; ti < 6; ++ti) {
        if (si == 0 && ti == 0) continue;
        s.comparisons.push_back({reference, product_for(kPerm3[si], kPerm3[ti])});
      }
    }
    Scalar matched(1);
    for (int i = 0; i < 3; ++i) {
      const SeriesValue r =
          eval_Phi({{{up[i], up[(i + 1) % 3]}}, {}, B, z}, trunc);
      matched = matched * r.value;
      s.terms = std::max(s.terms, r.terms_used);
    }
    s.comparisons.push_back({matched, Scalar(1)});
    s.notes.push_back(
        "all 36 permutation pairs compared; matched q-components give 1");
    return s;
  };
  c.sample = [](std::mt19937_64& rng, const GridConfig& grid, Params& m,
                BasePair& B) {
    B = sample_base(rng, grid);
    std::array<Scalar, 3> up, uq;
    Scalar cap(1);
    for (int i = 0; i < 3; ++i) {
      up[i] = ratq(rng, Scalar::exact(1, 4), Scalar(2));
      uq[i] = ratq(rng, Scalar::exact(1, 4), Scalar(2));
      cap = scalar_max(cap, up[i]);
    }
    const Scalar z = rand_sign(
        rng, ratq(rng, Scalar::exact(1, 20), Scalar::exact(9, 10)) * B.p / cap);
    m = {{"u1p", up[0]}, {"u1q", uq[0]}, {"u2p", up[1]}, {"u2q", uq[1]},
         {"u3p", up[2]}, {"u3q", uq[2]}, {"z", z}};
  };
  return c;
}

// ---------------------------------------------------------------------------
// 3. exp_product
// ---------------------------------------------------------------------------

CaseImpl make_exp_product() {
  CaseImpl c;
  c.meta.name = "exp_product";
  c.meta.params = {"z"};
  c.meta.summary = "e_{p,q}(z) * E_{p,q}(-z) = 1";
  c.meta.domain = "|q| < |p| and |z (p - q) / p| < 1, or z = 0";
  c.admissible = [](const Params& m, const BasePair& B) -> std::string {
    const Scalar& z = arg(m, "z");
    if (z.is_zero()) return "";
    if (!is_contracting(B)) return "base must contract (|q| < |p|)";
    if (!(abs(z * (B.p - B.q) / B.p) < Scalar(1))) {
      return "|z (p - q) / p| must be < 1";
    }
    return "";
  };
  c.run = [](const Params& m, const BasePair& B,
             const TruncationPolicy& trunc) -> Sides {
    const Scalar& z = arg(m, "z");
    const Scalar small = pq_exponential(z, B, ExpKind::Small, trunc);
    const Scalar big = pq_exponential(-z, B, ExpKind::Big, trunc);
    Sides s;
    s.comparisons.push_back({small * big, Scalar(1)});
    return s;
  };
  c.sample = [](std::mt19937_64& rng, const GridConfig& grid, Params& m,
                BasePair& B) {
    B = sample_base(rng, grid);
    const Scalar z =
        rand_sign(rng, ratq(rng, Scalar::exact(1, 20), Scalar::exact(9, 10)) *
                           B.p / (B.p - B.q));
    m = {{"z", z}};
  };
  return c;
}

// ---------------------------------------------------------------------------
// 4. product_formula_1phi0
// ---------------------------------------------------------------------------

CaseImpl make_product_formula_1phi0() {
  CaseImpl c;
  c.meta.name = "product_formula_1phi0";
  c.meta.params = {"a", "b", "z"};
  c.meta.summary =
      "1phi0(a; z) * 1phi0(b; a z) = 1phi0(a b; z) at the contracted ratio "
      "rho = q/p";
  c.meta.domain = "0 < |q/p| < 1, |z| < 1, |a z| < 1";
  c.admissible = [](const Params& m, const BasePair& B) -> std::string {
    if (B.p.is_zero()) return "p must be nonzero";
    const Scalar rho = rho_of(B);
    if (!(abs(rho) < Scalar(1))) return "|q/p| must be < 1";
    if (!(abs(arg(m, "z")) < Scalar(1))) return "|z| must be < 1";
    if (!(abs(arg(m, "a") * arg(m, "z")) < Scalar(1))) {
      return "|a z| must be < 1";
    }
    return "";
  };
  c.run = [](const Params& m, const BasePair& B,
             const TruncationPolicy& trunc) -> Sides {
    const Scalar& a = arg(m, "a");
    const Scalar& b = arg(m, "b");
    const Scalar& z = arg(m, "z");
    const Scalar rho = rho_of(B);
    const SeriesValue fa = eval_phi_classical({{a}, {}, rho, z}, trunc);
    const SeriesValue fb = eval_phi_classical({{b}, {}, rho, a * z}, trunc);
    const SeriesValue fab = eval_phi_classical({{a * b}, {}, rho, z}, trunc);
    Sides s;
    s.comparisons.push_back({fa.value * fb.value, fab.value});
    s.terms = std::max({fa.terms_used, fb.terms_used, fab.terms_used});
    s.notes.push_back("single-base identity evaluated at rho = q/p");
    return s;
  };
  c.sample = [](std::mt19937_64& rng, const GridConfig& grid, Params& m,
                BasePair& B) {
    B = sample_base(rng, grid);
    const Scalar a = ratq(rng, Scalar::exact(1, 4), Scalar(2));
    const Scalar b = ratq(rng, Scalar::exact(1, 4), Scalar(2));
    const Scalar z =
        rand_sign(rng, ratq(rng, Scalar::exact(1, 20), Scalar::exact(9, 10)) /
                           scalar_max(Scalar(1), a));
    m = {{"a", a}, {"b", b}, {"z", z}};
  };
  return c;
}

// ---------------------------------------------------------------------------
// 5. pqbin_family
// ---------------------------------------------------------------------------

CaseImpl make_pqbin_family() {
  CaseImpl c;
  c.meta.name = "pqbin_family";
  c.meta.params = {"n", "z"};
  c.meta.summary =
      "1Phi0((p^n, q^n); z) equals both closed forms (shifted-binomial "
      "generating function), with the p = 0, p = q and (1/q, q) branches";
  c.meta.domain = "integer 1 <= n <= 10; 0 < |z| < 1 (z is the normalized "
                  "term ratio, the argument is rescaled per branch); p > q > 0";
  c.admissible = [](const Params& m, const BasePair& B) -> std::string {
    const std::string in = check_int(m, "n", 1, 10);
    if (!in.empty()) return in;
    const Scalar& w = arg(m, "z");
    if (w.is_zero() || !(abs(w) < Scalar(1))) return "need 0 < |z| < 1";
    if (!(B.q.sign() > 0 && B.q < B.p)) return "need p > q > 0";
    return "";
  };
  c.run = [](const Params& m, const BasePair& B,
             const TruncationPolicy& trunc) -> Sides {
    const long n = int_arg(m, "n");
    const Scalar& w = arg(m, "z");
    Sides s;
    auto closed_form = [&](const BasePair& bb, const Scalar& zz) {
      return pow_int(bb.p, n * (n + 1) / 2) /
             pq_pochhammer({bb.p, pow_int(bb.p, n) * zz}, bb, n);
    };
    auto reciprocal_sum = [&](const BasePair& bb, const Scalar& zz) {
      Scalar sum(0);
      for (long k = 0; k <= n; ++k) {
        sum = sum + pq_binomial(n, k, bb) *
                        pow_int(bb.p * bb.q, k * (k - 1) / 2) *
                        pow_int(-zz, k);
      }
      return sum;
    };
    {
      // Main branch: closed form, reciprocal sum, series value, coefficients.
      const Scalar zm = w / pow_int(B.p, n - 1);
      const Scalar closed = closed_form(B, zm);
      s.comparisons.push_back({closed, Scalar(1) / reciprocal_sum(B, zm)});
      const SeriesValue v =
          eval_Phi({{{pow_int(B.p, n), pow_int(B.q, n)}}, {}, B, zm}, trunc);
      s.comparisons.push_back({v.value, closed});
      s.terms = std::max(s.terms, v.terms_used);
      Scalar ck(1);
      for (long k = 1; k <= 12; ++k) {
        ck = ck * (pow_int(B.p, n + k - 1) - pow_int(B.q, n + k - 1)) /
             (pow_int(B.p, k) - pow_int(B.q, k));
        s.comparisons.push_back({ck, pq_binomial(n - 1 + k, k, B)});
      }
    }
    {
      // p = 0: the series collapses to a geometric one.
      const BasePair b0{Scalar(0), B.q};
      const Scalar z0 = w / pow_int(B.q, n - 1);
      const Scalar qn1 = pow_int(B.q, n - 1);
      s.comparisons.push_back(
          {reciprocal_sum(b0, z0), Scalar(1) - qn1 * z0});
      s.comparisons.push_back({pq_binomial(n, 1, b0), qn1});
      for (long k = 1; k <= 12; ++k) {
        const Scalar ck = pq_pochhammer({Scalar(0), pow_int(B.q, n)}, b0, k) /
                          pq_pochhammer({Scalar(0), B.q}, b0, k);
        s.comparisons.push_back({ck, pow_int(qn1, k)});
      }
    }
    {
      // p = q limit: ordinary binomial series against the exact power.
      const BasePair bq{B.q, B.q};
      Scalar bin(1);
      for (long k = 1; k <= 12; ++k) {
        bin = bin * Scalar(n - 1 + k) / Scalar(k);
        s.comparisons.push_back(
            {pq_binomial(n - 1 + k, k, bq), bin * pow_int(B.q, k * (n - 1))});
      }
      const unsigned digits = default_precision();
      const Scalar x = w.to_decimal(digits);
      const Scalar ax = abs(x);
      Scalar term(1), sum(1);
      long used = 1;
      bool done = false;
      for (long k = 1; k <= trunc.max_terms && !done; ++k) {
        term = term * Scalar(n - 1 + k) / Scalar(k) * x;
        sum = sum + term;
        ++used;
        const Scalar r = Scalar(n + k) / Scalar(k + 1) * ax;
        if (Scalar::cmp(r, Scalar(1)) < 0 &&
            geometric_tail_bound(abs(term), r) <=
                trunc.tail_target * abs(sum)) {
          done = true;
        }
      }
      if (!done) {
        throw DivergenceError(
            "limit-branch binomial series did not meet its tail target");
      }
      s.comparisons.push_back({sum, pow_int(Scalar(1) - w, -n)});
      s.terms = std::max(s.terms, used);
    }
    {
      // Base (1/qc, qc) with qc = q/p: p q = 1 kills the inner power.
      const Scalar qc = rho_of(B);
      const BasePair b2{Scalar(1) / qc, qc};
      const Scalar z2 = w * pow_int(qc, n - 1);
      const Scalar closed = closed_form(b2, z2);
      s.comparisons.push_back({closed, Scalar(1) / reciprocal_sum(b2, z2)});
      const SeriesValue v =
          eval_Phi({{{pow_int(b2.p, n), pow_int(b2.q, n)}}, {}, b2, z2}, trunc);
      s.comparisons.push_back({v.value, closed});
      s.terms = std::max(s.terms, v.terms_used);
    }
    s.notes.push_back(
        "branches checked: closed form, p = 0, p = q limit, base (1/q, q)");
    return s;
  };
  c.sample = [](std::mt19937_64& rng, const GridConfig& grid, Params& m,
                BasePair& B) {
    B = sample_base(rng, grid);
    const long n = rand_long(rng, 1, 8);
    const Scalar w = rand_sign(
        rng, ratq(rng, Scalar::exact(1, 20), Scalar::exact(9, 10)));
    m = {{"n", Scalar(n)}, {"z", w}};
  };
  return c;
}

// ---------------------------------------------------------------------------
// 6. gbin_equality
// ---------------------------------------------------------------------------

CaseImpl make_gbin_equality() {
  CaseImpl c;
  c.meta.name = "gbin_equality";
  c.meta.params = {"n", "a", "b"};
  c.meta.summary =
      "((a,b);(p,q))_n equals sum_k c_k a^(n-k) b^k with the expansion "
      "coefficients c_k = (-1)^k [n k] p^C(n-k,2) q^C(k,2), exactly";
  c.meta.domain = "integer 0 <= n <= 16; any exact base and arguments";
  c.meta.exactness = Exactness::kExact;
  c.admissible = [](const Params& m, const BasePair&) -> std::string {
    return check_int(m, "n", 0, 16);
  };
  c.run = [](const Params& m, const BasePair& B,
             const TruncationPolicy&) -> Sides {
    const long n = int_arg(m, "n");
    const Scalar& a = arg(m, "a");
    const Scalar& b = arg(m, "b");
    const Scalar product = pq_pochhammer({a, b}, B, n);
    const std::vector<Scalar> coeffs = gbin_expand(n, B);
    Scalar sum(0);
    for (long k = 0; k <= n; ++k) {
      sum = sum + coeffs[static_cast<std::size_t>(k)] * pow_int(a, n - k) *
                      pow_int(b, k);
    }
    Sides s;
    s.comparisons.push_back({product, sum});
    return s;
  };
  c.sample = [](std::mt19937_64& rng, const GridConfig& grid, Params& m,
                BasePair& B) {
    B = sample_base(rng, grid);
    const long n = rand_long(rng, 0, 12);
    const Scalar a = rand_sign(rng, ratq(rng, Scalar::exact(1, 4), Scalar(2)));
    const Scalar b = rand_sign(rng, ratq(rng, Scalar::exact(1, 4), Scalar(2)));
    m = {{"n", Scalar(n)}, {"a", a}, {"b", b}};
  };
  return c;
}

// ---------------------------------------------------------------------------
// 7. heine_transformation
// ---------------------------------------------------------------------------

CaseImpl make_heine_transformation() {
  CaseImpl c;
  c.meta.name = "heine_transformation";
  c.meta.params = {"a", "b", "c", "d", "e", "f", "z"};
  c.meta.summary =
      "2Phi1((a,b),(c,d);(e,f); z) equals the product prefactor times "
      "2Phi1((de,cf),(pe,acz);(pe,bcz); p/(ce))";
  c.meta.domain = "|q| < |p|; p, a, c, e nonzero; |a c z / (p e)| < 1; "
                  "|d / c| < 1";
  c.admissible = [](const Params& m, const BasePair& B) -> std::string {
    if (!is_contracting(B)) return "base must contract (|q| < |p|)";
    for (const char* name : {"a", "c", "e"}) {
      if (arg(m, name).is_zero()) {
        return std::string(name) + " must be nonzero";
      }
    }
    if (B.p.is_zero()) return "p must be nonzero";
    if (!(abs(arg(m, "a") * arg(m, "c") * arg(m, "z") / (B.p * arg(m, "e"))) <
          Scalar(1))) {
      return "|a c z / (p e)| must be < 1";
    }
    if (!(abs(arg(m, "d") / arg(m, "c")) < Scalar(1))) {
      return "|d / c| must be < 1";
    }
    return "";
  };
  c.run = [](const Params& m, const BasePair& B,
             const TruncationPolicy& trunc) -> Sides {
    const Scalar& a = arg(m, "a");
    const Scalar& b = arg(m, "b");
    const Scalar& cc = arg(m, "c");
    const Scalar& d = arg(m, "d");
    const Scalar& e = arg(m, "e");
    const Scalar& f = arg(m, "f");
    const Scalar& z = arg(m, "z");
    const SeriesValue lhs =
        eval_Phi({{{a, b}, {cc, d}}, {{e, f}}, B, z}, trunc);
    const Scalar pref = poch_ratio_infinite(
        {{cc * e, d * e}, {B.p * e, b * cc * z}},
        {{cc * e, cc * f}, {B.p * e, a * cc * z}}, B, trunc);
    const SeriesValue rhs =
        eval_Phi({{{d * e, cc * f}, {B.p * e, a * cc * z}},
                  {{B.p * e, b * cc * z}},
                  B,
                  B.p / (cc * e)},
                 trunc);
    Sides s;
    s.comparisons.push_back({lhs.value, pref * rhs.value});
    s.terms = std::max(lhs.terms_used, rhs.terms_used);
    s.notes.push_back("argument of the transformed series is p/(c e)");
    return s;
  };
  c.sample = [](std::mt19937_64& rng, const GridConfig& grid, Params& m,
                BasePair& B) {
    B = sample_base(rng, grid);
    const Scalar a = ratq(rng, Scalar::exact(1, 4), Scalar(2));
    const Scalar b = ratq(rng, Scalar::exact(1, 4), Scalar(2));
    const Scalar cc = ratq(rng, Scalar::exact(1, 4), Scalar(2));
    const Scalar e = ratq(rng, Scalar::exact(1, 4), Scalar(2));
    const Scalar f =
        e * ratq(rng, Scalar::exact(1, 20), Scalar::exact(9, 10));
    const Scalar d = rand_sign(
        rng, cc * ratq(rng, Scalar::exact(1, 20), Scalar::exact(9, 10)));
    const Scalar z =
        rand_sign(rng, ratq(rng, Scalar::exact(1, 20), Scalar::exact(9, 10)) *
                           B.p * e / (cc * scalar_max(a, b)));
    m = {{"a", a}, {"b", b}, {"c", cc}, {"d", d},
         {"e", e}, {"f", f}, {"z", z}};
  };
  return c;
}

// ---------------------------------------------------------------------------
// 8. phi11_transformation
// ---------------------------------------------------------------------------

CaseImpl make_phi11_transformation() {
  CaseImpl c;
  c.meta.name = "phi11_transformation";
  c.meta.params = {"a", "b", "z"};
  c.meta.summary =
      "1phi1(a; b; rho, z) = (a; rho)_inf (z; rho)_inf / (b; rho)_inf * "
      "2phi1(0, b/a; z; rho, a)";
  c.meta.domain = "0 < |q/p| < 1; a nonzero; |a| < 1, |b| < 1, |z| < 1";
  c.admissible = [](const Params& m, const BasePair& B) -> std::string {
    if (B.p.is_zero()) return "p must be nonzero";
    const Scalar rho = rho_of(B);
    if (!(abs(rho) < Scalar(1)) || rho.is_zero()) {
      return "need 0 < |q/p| < 1";
    }
    if (arg(m, "a").is_zero()) return "a must be nonzero";
    if (!(abs(arg(m, "a")) < Scalar(1))) return "|a| must be < 1";
    if (!(abs(arg(m, "b")) < Scalar(1))) return "|b| must be < 1";
    if (!(abs(arg(m, "z")) < Scalar(1))) return "|z| must be < 1";
    return "";
  };
  c.run = [](const Params& m, const BasePair& B,
             const TruncationPolicy& trunc) -> Sides {
    const Scalar& a = arg(m, "a");
    const Scalar& b = arg(m, "b");
    const Scalar& z = arg(m, "z");
    const Scalar rho = rho_of(B);
    const SeriesValue lhs = eval_phi_classical({{a}, {b}, rho, z}, trunc);
    const Scalar pref = classical_poch_infinite(a, rho, trunc) *
                        classical_poch_infinite(z, rho, trunc) /
                        classical_poch_infinite(b, rho, trunc);
    const SeriesValue rhs =
        eval_phi_classical({{Scalar(0), b / a}, {z}, rho, a}, trunc);
    Sides s;
    s.comparisons.push_back({lhs.value, pref * rhs.value});
    s.terms = std::max(lhs.terms_used, rhs.terms_used);
    s.notes.push_back("single-base identity evaluated at rho = q/p");
    return s;
  };
  c.sample = [](std::mt19937_64& rng, const GridConfig& grid, Params& m,
                BasePair& B) {
    B = sample_base(rng, grid);
    const Scalar a = rand_sign(
        rng, ratq(rng, Scalar::exact(1, 20), Scalar::exact(9, 10)));
    const Scalar b = rand_sign(
        rng, ratq(rng, Scalar::exact(1, 20), Scalar::exact(9, 10)));
    const Scalar z = rand_sign(
        rng, ratq(rng, Scalar::exact(1, 20), Scalar::exact(9, 10)));
    m = {{"a", a}, {"b", b}, {"z", z}};
  };
  return c;
}

// ---------------------------------------------------------------------------
// 9. phi11_summation
// ---------------------------------------------------------------------------

CaseImpl make_phi11_summation() {
  CaseImpl c;
  c.meta.name = "phi11_summation";
  c.meta.params = {"a", "b"};
  c.meta.summary =
      "1phi1(a; b; rho, b/a) = (b/a; rho)_inf / (b; rho)_inf";
  c.meta.domain = "0 < |q/p| < 1; a nonzero; |b| < 1";
  c.admissible = [](const Params& m, const BasePair& B) -> std::string {
    if (B.p.is_zero()) return "p must be nonzero";
    const Scalar rho = rho_of(B);
    if (!(abs(rho) < Scalar(1)) || rho.is_zero()) {
      return "need 0 < |q/p| < 1";
    }
    if (arg(m, "a").is_zero()) return "a must be nonzero";
    if (!(abs(arg(m, "b")) < Scalar(1))) return "|b| must be < 1";
    return "";
  };
  c.run = [](const Params& m, const BasePair& B,
             const TruncationPolicy& trunc) -> Sides {
    const Scalar& a = arg(m, "a");
    const Scalar& b = arg(m, "b");
    const Scalar rho = rho_of(B);
    const SeriesValue lhs = eval_phi_classical({{a}, {b}, rho, b / a}, trunc);
    const Scalar rhs = classical_poch_infinite(b / a, rho, trunc) /
                       classical_poch_infinite(b, rho, trunc);
    Sides s;
    s.comparisons.push_back({lhs.value, rhs});
    s.terms = lhs.terms_used;
    s.notes.push_back("single-base identity evaluated at rho = q/p");
    return s;
  };
  c.sample = [](std::mt19937_64& rng, const GridConfig& grid, Params& m,
                BasePair& B) {
    B = sample_base(rng, grid);
    const Scalar a =
        rand_sign(rng, ratq(rng, Scalar::exact(1, 4), Scalar(2)));
    const Scalar b =
        rand_sign(rng, ratq(rng, Scalar::exact(1, 20), Scalar::exact(9, 10)) *
                           scalar_min(abs(a), Scalar(1)));
    m = {{"a", a}, {"b", b}};
  };
  return c;
}

// ---------------------------------------------------------------------------
// 10. gauss_sum
// ---------------------------------------------------------------------------

CaseImpl make_gauss_sum() {
  CaseImpl c;
  c.meta.name = "gauss_sum";
  c.meta.params = {"a", "b", "c", "d", "e", "f"};
  c.meta.summary =
      "2Phi1((a,b),(c,d);(e,f); p f / (b d)) equals the infinite product "
      "((be,af);(p,q))_inf ((de,cf);(p,q))_inf / [((e,f);(p,q))_inf "
      "((bde,acf);(p,q))_inf]";
  c.meta.domain = "|q| < |p|; b, d, e nonzero; |a c f / (b d e)| < 1";
  c.admissible = [](const Params& m, const BasePair& B) -> std::string {
    if (!is_contracting(B)) return "base must contract (|q| < |p|)";
    for (const char* name : {"b", "d", "e"}) {
      if (arg(m, name).is_zero()) {
        return std::string(name) + " must be nonzero";
      }
    }
    if (!(abs(arg(m, "a") * arg(m, "c") * arg(m, "f") /
              (arg(m, "b") * arg(m, "d") * arg(m, "e"))) < Scalar(1))) {
      return "|a c f / (b d e)| must be < 1";
    }
    return "";
  };
  c.run = [](const Params& m, const BasePair& B,
             const TruncationPolicy& trunc) -> Sides {
    const Scalar& a = arg(m, "a");
    const Scalar& b = arg(m, "b");
    const Scalar& cc = arg(m, "c");
    const Scalar& d = arg(m, "d");
    const Scalar& e = arg(m, "e");
    const Scalar& f = arg(m, "f");
    const Scalar z = B.p * f / (b * d);
    const SeriesValue lhs =
        eval_Phi({{{a, b}, {cc, d}}, {{e, f}}, B, z}, trunc);
    const Scalar rhs = poch_ratio_infinite(
        {{b * e, a * f}, {d * e, cc * f}},
        {{e, f}, {b * d * e, a * cc * f}}, B, trunc);
    Sides s;
    s.comparisons.push_back({lhs.value, rhs});
    s.terms = lhs.terms_used;
    if (B.p == Scalar(1)) {
      const Scalar rho = B.q;
      const Scalar alpha = b / a;
      const Scalar beta = d / cc;
      const Scalar gamma = f / e;
      const Scalar cls =
          classical_poch_infinite(gamma / alpha, rho, trunc) *
          classical_poch_infinite(gamma / beta, rho, trunc) /
          (classical_poch_infinite(gamma, rho, trunc) *
           classical_poch_infinite(gamma / (alpha * beta), rho, trunc));
      s.comparisons.push_back({lhs.value, cls});
      s.notes.push_back("cross-checked against the single-base product at p = 1");
    }
    return s;
  };
  c.sample = [](std::mt19937_64& rng, const GridConfig& grid, Params& m,
                BasePair& B) {
    B = sample_base(rng, grid);
    const Scalar a = ratq(rng, Scalar(1), Scalar(2));
    const Scalar cc = ratq(rng, Scalar(1), Scalar(2));
    const Scalar b = a * ratq(rng, Scalar::exact(1, 4), Scalar(1));
    const Scalar d = cc * ratq(rng, Scalar::exact(1, 4), Scalar(1));
    const Scalar e = ratq(rng, Scalar::exact(1, 2), Scalar(2));
    const Scalar w = ratq(rng, Scalar::exact(1, 20), Scalar::exact(9, 10));
    const Scalar f = w * b * d * e / (a * cc);
    m = {{"a", a}, {"b", b}, {"c", cc}, {"d", d}, {"e", e}, {"f", f}};
  };
  return c;
}

// ---------------------------------------------------------------------------
// 11. sigma_form
// ---------------------------------------------------------------------------

CaseImpl make_sigma_form() {
  CaseImpl c;
  c.meta.name = "sigma_form";
  c.meta.params = {"a", "b", "c", "d", "sigma"};
  c.meta.summary =
      "2Phi1((a,1),(b,c);(d,sigma c); sigma p) equals "
      "((d,sigma a c);(p,q))_inf ((d,sigma b);(p,q))_inf / "
      "[((d,sigma c);(p,q))_inf ((d,sigma a b);(p,q))_inf]";
  c.meta.domain = "|q| < |p|; d nonzero; |sigma a b / d| < 1";
  c.admissible = [](const Params& m, const BasePair& B) -> std::string {
    if (!is_contracting(B)) return "base must contract (|q| < |p|)";
    if (arg(m, "d").is_zero()) return "d must be nonzero";
    if (!(abs(arg(m, "sigma") * arg(m, "a") * arg(m, "b") / arg(m, "d")) <
          Scalar(1))) {
      return "|sigma a b / d| must be < 1";
    }
    return "";
  };
  c.run = [](const Params& m, const BasePair& B,
             const TruncationPolicy& trunc) -> Sides {
    const Scalar& a = arg(m, "a");
    const Scalar& b = arg(m, "b");
    const Scalar& cc = arg(m, "c");
    const Scalar& d = arg(m, "d");
    const Scalar& sg = arg(m, "sigma");
    const SeriesValue lhs = eval_Phi(
        {{{a, Scalar(1)}, {b, cc}}, {{d, sg * cc}}, B, sg * B.p}, trunc);
    const Scalar rhs = poch_ratio_infinite(
        {{d, sg * a * cc}, {d, sg * b}},
        {{d, sg * cc}, {d, sg * a * b}}, B, trunc);
    Sides s;
    s.comparisons.push_back({lhs.value, rhs});
    s.terms = lhs.terms_used;
    return s;
  };
  c.sample = [](std::mt19937_64& rng, const GridConfig& grid, Params& m,
                BasePair& B) {
    B = sample_base(rng, grid);
    Scalar a = ratq(rng, Scalar::exact(1, 2), Scalar(2));
    while (abs(a - Scalar(1)) < Scalar::exact(1, 8)) {
      a = ratq(rng, Scalar::exact(1, 2), Scalar(2));
    }
    const Scalar b = ratq(rng, Scalar::exact(1, 2), Scalar(2));
    const Scalar cc = ratq(rng, Scalar::exact(1, 2), Scalar(2));
    const Scalar d = ratq(rng, Scalar::exact(1, 2), Scalar(2));
    Scalar cap = scalar_max(a * b, a * cc);
    cap = scalar_max(cap, b);
    cap = scalar_max(cap, cc);
    const Scalar sg = rand_sign(
        rng,
        ratq(rng, Scalar::exact(1, 20), Scalar::exact(9, 10)) * d / cap);
    m = {{"a", a}, {"b", b}, {"c", cc}, {"d", d}, {"sigma", sg}};
  };
  return c;
}

// ---------------------------------------------------------------------------
// 12-13. Corollaries of the summation formulas
// ---------------------------------------------------------------------------

CaseImpl make_gauss_corollary_qsquare() {
  CaseImpl c;
  c.meta.name = "gauss_corollary_qsquare";
  c.meta.params = {"z"};
  c.meta.summary =
      "sum_n rho^(n^2) z^n / ((rho;rho)_n (rho z;rho)_n) = 1 / "
      "(rho z; rho)_inf, with rho = q/p";
  c.meta.domain = "0 < q/p < 1; |z q/p| < 1";
  c.admissible = [](const Params& m, const BasePair& B) -> std::string {
    if (B.p.is_zero()) return "p must be nonzero";
    const Scalar rho = rho_of(B);
    if (!(rho.sign() > 0 && rho < Scalar(1))) return "need 0 < q/p < 1";
    if (!(abs(arg(m, "z") * rho) < Scalar(1))) return "|z q/p| must be < 1";
    return "";
  };
  c.run = [](const Params& m, const BasePair& B,
             const TruncationPolicy& trunc) -> Sides {
    const Scalar& z = arg(m, "z");
    const Scalar rho = rho_of(B);
    const BasePair single{Scalar(1), rho};
    const SeriesValue lhs =
        eval_Phi({{{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(1)}},
                  {{Scalar(1), rho * z}},
                  single,
                  rho * z},
                 trunc);
    const Scalar rhs =
        Scalar(1) / classical_poch_infinite(rho * z, rho, trunc);
    Sides s;
    s.comparisons.push_back({lhs.value, rhs});
    s.terms = lhs.terms_used;
    s.notes.push_back("single-base corollary evaluated at rho = q/p");
    return s;
  };
  c.sample = [](std::mt19937_64& rng, const GridConfig& grid, Params& m,
                BasePair& B) {
    B = sample_base(rng, grid);
    const Scalar z = rand_sign(
        rng, ratq(rng, Scalar::exact(1, 20), Scalar::exact(9, 10)));
    m = {{"z", z}};
  };
  return c;
}

CaseImpl make_gauss_corollary_sqrtq() {
  CaseImpl c;
  c.meta.name = "gauss_corollary_sqrtq";
  c.meta.params = {"z"};
  c.meta.summary =
      "sum_n (-1)^n rho^(n^2/2) z^n / (rho;rho)_n = (sqrt(rho) z; rho)_inf, "
      "with rho = q/p";
  c.meta.domain = "0 < q/p < 1; |z| sqrt(q/p) < 1";
  c.admissible = [](const Params& m, const BasePair& B) -> std::string {
    if (B.p.is_zero()) return "p must be nonzero";
    const Scalar rho = rho_of(B);
    if (!(rho.sign() > 0 && rho < Scalar(1))) return "need 0 < q/p < 1";
    const Scalar sq = sqrt_scalar(rho, default_precision());
    if (!(abs(arg(m, "z")) * sq < Scalar(1))) {
      return "|z| sqrt(q/p) must be < 1";
    }
    return "";
  };
  c.run = [](const Params& m, const BasePair& B,
             const TruncationPolicy& trunc) -> Sides {
    const Scalar& z = arg(m, "z");
    const Scalar rho = rho_of(B);
    const Scalar sq = sqrt_scalar(rho, default_precision());
    const BasePair single{Scalar(1), rho};
    const SeriesValue lhs =
        eval_Phi({{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}},
                  {{Scalar(1), Scalar(0)}},
                  single,
                  sq * z},
                 trunc);
    const Scalar rhs = classical_poch_infinite(sq * z, rho, trunc);
    Sides s;
    s.comparisons.push_back({lhs.value, rhs});
    s.terms = lhs.terms_used;
    s.notes.push_back("single-base corollary evaluated at rho = q/p");
    return s;
  };
  c.sample = [](std::mt19937_64& rng, const GridConfig& grid, Params& m,
                BasePair& B) {
    B = sample_base(rng, grid);
    const Scalar z = rand_sign(
        rng, ratq(rng, Scalar::exact(1, 20), Scalar::exact(9, 10)));
    m = {{"z", z}};
  };
  return c;
}

// ---------------------------------------------------------------------------
// 14. ramanujan_sum
// ---------------------------------------------------------------------------

CaseImpl make_ramanujan_sum() {
  CaseImpl c;
  c.meta.name = "ramanujan_sum";
  c.meta.params = {"a", "b", "c", "d", "z"};
  c.meta.summary =
      "1Psi1((a,b);(c,d); z) equals the eight-factor infinite product ratio; "
      "cross-checked against the single-base product form";
  c.meta.domain = "|q| < |p|; a, b, c nonzero; |a d / (b c)| < |z| < 1 and "
                  "|d / b| < |z| < |c / a|";
  c.meta.notes = {
      "base typo corrected: the infinite-product base is taken as (p,q)"};
  c.rel_floor = "1e-25";
  c.admissible = [](const Params& m, const BasePair& B) -> std::string {
    if (!is_contracting(B)) return "base must contract (|q| < |p|)";
    for (const char* name : {"a", "b", "c"}) {
      if (arg(m, name).is_zero()) {
        return std::string(name) + " must be nonzero";
      }
    }
    const Scalar az = abs(arg(m, "z"));
    if (az.is_zero() || !(az < Scalar(1))) return "need 0 < |z| < 1";
    if (!(abs(arg(m, "a") * arg(m, "d") / (arg(m, "b") * arg(m, "c"))) < az)) {
      return "|a d / (b c)| must be < |z|";
    }
    if (!(abs(arg(m, "d") / arg(m, "b")) < az)) {
      return "|d / b| must be < |z|";
    }
    if (!(az < abs(arg(m, "c") / arg(m, "a")))) {
      return "|z| must be < |c / a|";
    }
    return "";
  };
  c.run = [](const Params& m, const BasePair& B,
             const TruncationPolicy& trunc) -> Sides {
    const Scalar& a = arg(m, "a");
    const Scalar& b = arg(m, "b");
    const Scalar& cc = arg(m, "c");
    const Scalar& d = arg(m, "d");
    const Scalar& z = arg(m, "z");
    const Scalar& p = B.p;
    const Scalar& q = B.q;
    const SeriesValue lhs = eval_Psi11({a, b}, {cc, d}, B, z, trunc);
    const Scalar prod = poch_ratio_infinite(
        {{p, q}, {b * cc, a * d}, {cc, b * z}, {p * b * z, q * cc}},
        {{cc, d}, {p * b, q * a}, {cc, a * z}, {p * b * z, p * d}}, B, trunc);
    const Scalar rho = rho_of(B);
    const Scalar alpha = b / a;
    const Scalar beta = d / cc;
    const Scalar zeta = z * a / cc;
    auto cpi = [&](const Scalar& x) {
      return classical_poch_infinite(x, rho, trunc);
    };
    const Scalar cls = (cpi(rho) * cpi(beta / alpha) * cpi(alpha * zeta) *
                        cpi(rho / (alpha * zeta))) /
                       (cpi(beta) * cpi(rho / alpha) * cpi(zeta) *
                        cpi(beta / (alpha * zeta)));
    Sides s;
    s.comparisons.push_back({lhs.value, prod});
    s.comparisons.push_back({lhs.value, cls});
    s.terms = lhs.terms_used;
    return s;
  };
  c.sample = [](std::mt19937_64& rng, const GridConfig& grid, Params& m,
                BasePair& B) {
    B = sample_base(rng, grid);
    const Scalar rho = rho_of(B);
    for (int attempt = 0; attempt < 500; ++attempt) {
      const Scalar b = ratq(rng, Scalar::exact(1, 2), Scalar(2));
      const Scalar cc = ratq(rng, Scalar::exact(1, 2), Scalar(2));
      const Scalar z = ratq(rng, Scalar::exact(3, 10), Scalar::exact(7, 10));
      const Scalar u = ratq(rng, Scalar::exact(6, 5), Scalar::exact(5, 2));
      const Scalar a = cc / (z * u);
      const Scalar t0 = ratq(rng, Scalar::exact(1, 10), Scalar::exact(9, 10));
      const Scalar d = b * Scalar::exact(81, 100) * z *
                       scalar_min(Scalar(1), z * u) * t0;
      const Scalar alpha = b / a;
      const Scalar beta = d / cc;
      const Scalar eta = z * b / cc;
      if (!clear_of_powers(alpha, rho) || !clear_of_powers(beta, rho) ||
          !clear_of_powers(eta, rho)) {
        continue;
      }
      m = {{"a", a}, {"b", b}, {"c", cc}, {"d", d}, {"z", z}};
      return;
    }
    throw DomainError("could not sample an admissible bilateral point");
  };
  return c;
}

// ---------------------------------------------------------------------------
// 15. jacobi_triple_product
// ---------------------------------------------------------------------------

CaseImpl make_jacobi_triple_product() {
  CaseImpl c;
  c.meta.name = "jacobi_triple_product";
  c.meta.params = {"ca", "z"};
  c.meta.summary =
      "the bilateral theta sum in w = z/ca equals the doublet product ratio, "
      "the explicit factor product and the single-base triple product";
  c.meta.domain = "p > q > 0; ca, z nonzero; w = z/ca off the half-integer "
                  "powers of q/p";
  c.admissible = [](const Params& m, const BasePair& B) -> std::string {
    if (!(B.q.sign() > 0 && B.q < B.p)) return "need p > q > 0";
    if (arg(m, "ca").is_zero()) return "ca must be nonzero";
    if (arg(m, "z").is_zero()) return "z must be nonzero";
    return "";
  };
  c.run = [](const Params& m, const BasePair& B,
             const TruncationPolicy& trunc) -> Sides {
    const Scalar& ca = arg(m, "ca");
    const Scalar& z = arg(m, "z");
    const Scalar w = z / ca;
    const Scalar rho = rho_of(B);
    const unsigned digits = default_precision();
    Sides s;
    long theta_terms = 0;
    const Scalar v1 = theta_sum_bilateral(w, rho, trunc, theta_terms);
    const Scalar sp = sqrt_scalar(B.p, digits);
    const Scalar sq = sqrt_scalar(B.q, digits);
    const Scalar v2 = poch_ratio_infinite(
        {{B.p, B.q}, {sp * ca, sq * z}, {sp * z, sq * ca}},
        {{B.p, Scalar(0)}, {sp * ca, Scalar(0)}, {sp * z, Scalar(0)}}, B,
        trunc);
    long prod_terms = 0;
    const Scalar v3 = theta_product_explicit(B, w, trunc, prod_terms);
    const Scalar srho = sqrt_scalar(rho, digits);
    const Scalar v4 = classical_poch_infinite(rho, rho, trunc) *
                      classical_poch_infinite(srho * w, rho, trunc) *
                      classical_poch_infinite(srho / w, rho, trunc);
    s.comparisons.push_back({v1, v2});
    s.comparisons.push_back({v1, v3});
    s.comparisons.push_back({v1, v4});
    s.terms = theta_terms;
    s.notes.push_back(
        "forms compared: bilateral sum, doublet product ratio, explicit "
        "product, single-base product");
    return s;
  };
  c.sample = [](std::mt19937_64& rng, const GridConfig& grid, Params& m,
                BasePair& B) {
    B = sample_base(rng, grid);
    const Scalar rho = rho_of(B);
    const Scalar ca = ratq(rng, Scalar::exact(1, 2), Scalar(2));
    Scalar w(0);
    for (int attempt = 0; attempt < 500; ++attempt) {
      w = rand_sign(rng,
                    ratq(rng, Scalar::exact(1, 5), Scalar::exact(9, 10)));
      if (w.sign() < 0 || clear_of_half_powers(w, rho, grid.precision)) break;
    }
    m = {{"ca", ca}, {"z", w * ca}};
  };
  return c;
}

// ---------------------------------------------------------------------------
// 16. euler_identity
// ---------------------------------------------------------------------------

CaseImpl make_euler_identity() {
  CaseImpl c;
  c.meta.name = "euler_identity";
  c.meta.params = {};
  c.meta.summary =
      "1 + sum_n (-1)^n (rho^((3n^2-n)/2) + rho^((3n^2+n)/2)) = "
      "(rho; rho)_inf with rho = q/p";
  c.meta.domain = "0 < q/p < 1";
  c.admissible = [](const Params&, const BasePair& B) -> std::string {
    if (B.p.is_zero()) return "p must be nonzero";
    const Scalar rho = rho_of(B);
    if (!(rho.sign() > 0 && rho < Scalar(1))) return "need 0 < q/p < 1";
    return "";
  };
  c.run = [](const Params&, const BasePair& B,
             const TruncationPolicy& trunc) -> Sides {
    const Scalar rho = rho_of(B);
    Sides s;
    long used = 0;
    const Scalar sum = alternating_exponent_sum(rho, trunc, used);
    const Scalar prod = classical_poch_infinite(rho, rho, trunc);
    s.comparisons.push_back({sum, prod});
    s.terms = used;
    s.notes.push_back("single-base identity evaluated at rho = q/p");
    return s;
  };
  c.sample = [](std::mt19937_64& rng, const GridConfig& grid, Params& m,
                BasePair& B) {
    B = sample_base(rng, grid);
    m = {};
  };
  return c;
}

// ---------------------------------------------------------------------------
// 17. oscillator_realization
// ---------------------------------------------------------------------------

CaseImpl make_oscillator_realization() {
  CaseImpl c;
  c.meta.name = "oscillator_realization";
  c.meta.params = {};
  c.meta.summary =
      "f(N) = (p^(-N) - q^N) / (1/p - q) satisfies f(N+1) - q f(N) = p^(-N) "
      "exactly for N = 0..20";
  c.meta.domain = "p nonzero and 1/p != q";
  c.meta.exactness = Exactness::kExact;
  c.admissible = [](const Params&, const BasePair& B) -> std::string {
    if (B.p.is_zero()) return "p must be nonzero";
    if (Scalar(1) / B.p == B.q) return "need 1/p != q";
    return "";
  };
  c.run = [](const Params&, const BasePair& B,
             const TruncationPolicy&) -> Sides {
    const Scalar pinv = Scalar(1) / B.p;
    const Scalar den = pinv - B.q;
    Sides s;
    Scalar fN(0);
    for (long N = 0; N <= 20; ++N) {
      const Scalar fN1 =
          (pow_int(pinv, N + 1) - pow_int(B.q, N + 1)) / den;
      s.comparisons.push_back({fN1 - B.q * fN, pow_int(pinv, N)});
      fN = fN1;
    }
    const bool ok = verify_oscillator_realization(B.p, B.q, 20);
    s.comparisons.push_back({Scalar(ok ? 1 : 0), Scalar(1)});
    return s;
  };
  c.sample = [](std::mt19937_64& rng, const GridConfig& grid, Params& m,
                BasePair& B) {
    do {
      B = sample_base(rng, grid);
    } while (Scalar(1) / B.p == B.q);
    m = {};
  };
  return c;
}

// ---------------------------------------------------------------------------
// 18. operator_binomials
// ---------------------------------------------------------------------------

CaseImpl make_operator_binomials() {
  CaseImpl c;
  c.meta.name = "operator_binomials";
  c.meta.params = {"n"};
  c.meta.summary =
      "the normal-ordered (x+y)^n and (ax+by)^n match their binomial "
      "expansions in both the q-form and the 1/q-form, exactly";
  c.meta.domain = "integer 0 <= n <= 12; p, q nonzero";
  c.meta.exactness = Exactness::kExact;
  c.admissible = [](const Params& m, const BasePair& B) -> std::string {
    const std::string in = check_int(m, "n", 0, 12);
    if (!in.empty()) return in;
    if (B.p.is_zero() || B.q.is_zero()) return "p and q must be nonzero";
    return "";
  };
  c.run = [](const Params& m, const BasePair& B,
             const TruncationPolicy&) -> Sides {
    const long n = int_arg(m, "n");
    Sides s;
    Scalar scale(1);
    Scalar worst(0);
    for (const bool with_ab : {false, true}) {
      const BinomialPower bp = nc_binomial_power(n, B.p, B.q, with_ab);
      scale = scalar_max(scale, max_coeff(bp.lhs));
      worst = scalar_max(worst, max_coeff(bp.lhs - bp.rhs_q_form));
      worst = scalar_max(worst, max_coeff(bp.lhs - bp.rhs_qinv_form));
    }
    s.comparisons.push_back({scale + worst, scale});
    s.notes.push_back(
        "residual measured against the largest canonical coefficient");
    return s;
  };
  c.sample = [](std::mt19937_64& rng, const GridConfig& grid, Params& m,
                BasePair& B) {
    B = sample_base(rng, grid);
    m = {{"n", Scalar(rand_long(rng, 1, 8))}};
  };
  return c;
}

// ---------------------------------------------------------------------------
// 19. rtt
// ---------------------------------------------------------------------------

CaseImpl make_rtt() {
  CaseImpl c;
  c.meta.name = "rtt";
  c.meta.params = {};
  c.meta.summary =
      "R (T x I)(I x T) = (I x T)(T x I) R over the quantum-matrix "
      "relations, entrywise";
  c.meta.domain = "p > 0, q > 0 (exact when p q is a perfect rational square)";
  c.meta.exactness = Exactness::kExact;
  c.admissible = [](const Params&, const BasePair& B) -> std::string {
    if (!(B.p.sign() > 0 && B.q.sign() > 0)) return "need p > 0 and q > 0";
    return "";
  };
  c.run = [](const Params&, const BasePair& B,
             const TruncationPolicy&) -> Sides {
    const RelationSet rels = RelationSet::quantum_matrix(B.p, B.q);
    const Scalar sroot = sqrt_scalar(B.p * B.q, default_precision());
    const Scalar t = B.p / sroot;
    Scalar R[4][4];
    R[0][0] = Scalar(1) / sroot;
    R[1][1] = Scalar(1) / t;
    R[2][1] = Scalar(1) / sroot - sroot;
    R[2][2] = t;
    R[3][3] = Scalar(1) / sroot;
    const char* T[2][2] = {{"a", "b"}, {"c", "d"}};
    NCPoly A[4][4], Bm[4][4];
    for (int i = 0; i < 2; ++i) {
      for (int k = 0; k < 2; ++k) {
        for (int j = 0; j < 2; ++j) {
          for (int l = 0; l < 2; ++l) {
            A[2 * i + k][2 * j + l] =
                NCPoly::term(std::string(T[i][j]) + T[k][l]);
            Bm[2 * i + k][2 * j + l] =
                NCPoly::term(std::string(T[k][l]) + T[i][j]);
          }
        }
      }
    }
    Scalar worst(0);
    Scalar scale(1);
    for (int row = 0; row < 4; ++row) {
      for (int col = 0; col < 4; ++col) {
        NCPoly lhs, rhs;
        for (int mid = 0; mid < 4; ++mid) {
          lhs += R[row][mid] * A[mid][col];
          rhs += R[mid][col] * Bm[row][mid];
        }
        const NCPoly ln = normal_order(lhs, rels);
        const NCPoly rn = normal_order(rhs, rels);
        scale = scalar_max(scale, max_coeff(ln));
        worst = scalar_max(worst, max_coeff(ln - rn));
      }
    }
    Sides s;
    s.comparisons.push_back({scale + worst, scale});
    const bool ok = verify_rtt(B.p, B.q);
    s.comparisons.push_back({Scalar(ok ? 1 : 0), Scalar(1)});
    if (sroot.is_exact()) {
      s.notes.push_back("p q is a perfect square: entries handled exactly");
    } else {
      s.notes.push_back(
          "p q is not a perfect square: entries handled in decimal");
    }
    s.notes.push_back(
        "residual measured against the largest canonical coefficient");
    return s;
  };
  c.sample = [](std::mt19937_64& rng, const GridConfig&, Params& m,
                BasePair& B) {
    // Sample bases with p q a perfect rational square so the run is exact.
    const Scalar u = ratq(rng, Scalar::exact(9, 8), Scalar(2));
    const Scalar v = ratq(rng, Scalar::exact(1, 2), Scalar(2));
    B = BasePair{u * v, v / u};
    m = {};
  };
  return c;
}

// ---------------------------------------------------------------------------
// 20. hermite_specialization
// ---------------------------------------------------------------------------

CaseImpl make_hermite_specialization() {
  CaseImpl c;
  c.meta.name = "hermite_specialization";
  c.meta.params = {"n", "theta"};
  c.meta.summary =
      "at base (1, rho) the twin-basic binomials reduce to the classical "
      "Gaussian ones and H_n(cos theta) satisfies the classical three-term "
      "recurrence";
  c.meta.domain = "integer 0 <= n <= 10; 0 < q/p < 1";
  c.admissible = [](const Params& m, const BasePair& B) -> std::string {
    const std::string in = check_int(m, "n", 0, 10);
    if (!in.empty()) return in;
    if (B.p.is_zero()) return "p must be nonzero";
    const Scalar rho = rho_of(B);
    if (!(rho.sign() > 0 && rho < Scalar(1))) return "need 0 < q/p < 1";
    return "";
  };
  c.run = [](const Params& m, const BasePair& B,
             const TruncationPolicy&) -> Sides {
    const long n = int_arg(m, "n");
    const Scalar& theta = arg(m, "theta");
    const Scalar rho = rho_of(B);
    const BasePair single{Scalar(1), rho};
    Sides s;
    for (long k = 0; k <= n; ++k) {
      const Scalar gauss = classical_pochhammer(rho, rho, n) /
                           (classical_pochhammer(rho, rho, k) *
                            classical_pochhammer(rho, rho, n - k));
      s.comparisons.push_back({pq_binomial(n, k, single), gauss});
    }
    const Scalar x = cos_scalar(theta);
    if (n == 0) {
      s.comparisons.push_back({hermite_pq(0, theta, single), Scalar(1)});
    } else {
      Scalar prev(1);
      Scalar cur = Scalar(2) * x;
      for (long mm = 1; mm < n; ++mm) {
        const Scalar next =
            Scalar(2) * x * cur - (Scalar(1) - pow_int(rho, mm)) * prev;
        prev = cur;
        cur = next;
      }
      s.comparisons.push_back({hermite_pq(n, theta, single), cur});
    }
    s.notes.push_back("evaluated at the single-base specialization (1, q/p)");
    return s;
  };
  c.sample = [](std::mt19937_64& rng, const GridConfig& grid, Params& m,
                BasePair& B) {
    B = sample_base(rng, grid);
    const long n = rand_long(rng, 0, 10);
    const Scalar theta = ratq(rng, Scalar::exact(1, 10), Scalar::exact(3, 2));
    m = {{"n", Scalar(n)}, {"theta", theta}};
  };
  return c;
}

// ---------------------------------------------------------------------------
// 21. hermite_rescale
// ---------------------------------------------------------------------------

CaseImpl make_hermite_rescale() {
  CaseImpl c;
  c.meta.name = "hermite_rescale";
  c.meta.params = {"n", "theta"};
  c.meta.summary =
      "[n k]_{p,q} = [n n-k]_{p,q} = p^(k(n-k)) [n k]_{1,q/p} exactly; the "
      "rescaling changes the polynomial itself, not just the angle (witness "
      "at n = 3)";
  c.meta.domain = "integer 0 <= n <= 12; p nonzero";
  c.admissible = [](const Params& m, const BasePair& B) -> std::string {
    const std::string in = check_int(m, "n", 0, 12);
    if (!in.empty()) return in;
    if (B.p.is_zero()) return "p must be nonzero";
    return "";
  };
  c.run = [](const Params& m, const BasePair& B,
             const TruncationPolicy&) -> Sides {
    const long n = int_arg(m, "n");
    const Scalar& theta = arg(m, "theta");
    const Scalar rho = rho_of(B);
    const BasePair single{Scalar(1), rho};
    Sides s;
    for (long k = 0; k <= n; ++k) {
      s.comparisons.push_back(
          {pq_binomial(n, k, B), pq_binomial(n, n - k, B)});
      s.comparisons.push_back({pq_binomial(n, k, B),
                               pow_int(B.p, k * (n - k)) *
                                   pq_binomial(n, k, single)});
    }
    Scalar direct(0);
    for (long k = 0; k <= n; ++k) {
      direct = direct + pow_int(B.p, k * (n - k)) *
                            pq_binomial(n, k, single) *
                            cos_scalar(Scalar(n - 2 * k) * theta);
    }
    s.comparisons.push_back({hermite_pq(n, theta, B), direct});
    const Scalar x = cos_scalar(theta);
    if (abs(B.p - Scalar(1)) >= Scalar::exact(1, 8) &&
        abs(x) >= Scalar::exact(1, 10)) {
      const Scalar h_pq = hermite_pq(3, theta, B);
      const Scalar h_single = hermite_pq(3, theta, single);
      const Scalar scale =
          scalar_max(scalar_max(abs(h_pq), abs(h_single)), Scalar(1));
      if (abs(h_pq - h_single) > Scalar::from_string("1e-10") * scale) {
        s.notes.push_back(
            "witness: H_3 at (p,q) differs from H_3 at (1, q/p)");
      } else {
        s.inequality_ok = false;
        s.notes.push_back("rescaling witness failed: the two values coincide");
      }
    } else {
      s.notes.push_back(
          "rescaling witness skipped (p near 1 or degenerate angle)");
    }
    return s;
  };
  c.sample = [](std::mt19937_64& rng, const GridConfig& grid, Params& m,
                BasePair& B) {
    do {
      B = sample_base(rng, grid);
    } while (abs(B.p - Scalar(1)) < Scalar::exact(1, 8));
    const long n = rand_long(rng, 0, 12);
    const Scalar theta = ratq(rng, Scalar::exact(1, 10), Scalar::exact(6, 5));
    m = {{"n", Scalar(n)}, {"theta", theta}};
  };
  return c;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

std::vector<CaseImpl> build_registry() {
  std::vector<CaseImpl> v;
  v.push_back(make_pq_binomial_theorem());
  v.push_back(make_permutation_product_law());
  v.push_back(make_exp_product());
  v.push_back(make_product_formula_1phi0());
  v.push_back(make_pqbin_family());
  v.push_back(make_gbin_equality());
  v.push_back(make_heine_transformation());
  v.push_back(make_phi11_transformation());
  v.push_back(make_phi11_summation());
  v.push_back(make_gauss_sum());
  v.push_back(make_sigma_form());
  v.push_back(make_gauss_corollary_qsquare());
  v.push_back(make_gauss_corollary_sqrtq());
  v.push_back(make_ramanujan_sum());
  v.push_back(make_jacobi_triple_product());
  v.push_back(make_euler_identity());
  v.push_back(make_oscillator_realization());
  v.push_back(make_operator_binomials());
  v.push_back(make_rtt());
  v.push_back(make_hermite_specialization());
  v.push_back(make_hermite_rescale());
  return v;
}

const std::vector<CaseImpl>& registry() {
  static const std::vector<CaseImpl> cases = build_registry();
  return cases;
}

const CaseImpl& find_case(const std::string& name) {
  for (const CaseImpl& c : registry()) {
    if (c.meta.name == name) return c;
  }
  throw DomainError("unknown identity '" + name + "'");
}

}  // namespace

// ---------------------------------------------------------------------------
// Public interface
// ---------------------------------------------------------------------------

const std::vector<IdentityCase>& list_identities() {
  static const std::vector<IdentityCase> cases = [] {
    std::vector<IdentityCase> v;
    for (const CaseImpl& c : registry()) v.push_back(c.meta);
    return v;
  }();
  return cases;
}

Scalar hermite_pq(long n, const Scalar& theta, const BasePair& base) {
  if (n < 0) throw DomainError("hermite_pq needs n >= 0");
  Scalar sum(0);
  for (long k = 0; 2 * k < n; ++k) {
    sum = sum + Scalar(2) * pq_binomial(n, k, base) *
                    cos_scalar(Scalar(n - 2 * k) * theta);
  }
  if (n % 2 == 0) sum = sum + pq_binomial(n, n / 2, base);
  return sum;
}

VerificationReport verify_identity(const std::string& name,
                                   const std::map<std::string, Scalar>& params,
                                   const BasePair& base,
                                   const ToleranceSpec& tol,
                                   const TruncationPolicy& trunc) {
  const CaseImpl& c = find_case(name);
  for (const std::string& pname : c.meta.params) {
    if (!params.count(pname)) {
      throw DomainError("identity '" + name + "' needs parameter '" + pname +
                        "'");
    }
  }
  for (const auto& kv : params) {
    if (std::find(c.meta.params.begin(), c.meta.params.end(), kv.first) ==
        c.meta.params.end()) {
      throw DomainError("identity '" + name + "' does not take parameter '" +
                        kv.first + "'");
    }
  }
  VerificationReport rep;
  rep.identity = name;
  rep.base = base;
  rep.precision_digits = default_precision();
  rep.tolerance = tol_to_string(tol);
  for (const std::string& pname : c.meta.params) {
    rep.params.push_back({pname, params.at(pname).str()});
  }
  rep.notes = c.meta.notes;
  const std::string why = c.admissible(params, base);
  if (!why.empty()) {
    rep.pass = false;
    rep.notes.push_back("inadmissible: " + why);
    return rep;
  }
  const Sides sides = c.run(params, base, trunc);
  fill_report(rep, sides, tol);
  return rep;
}

SuiteResult run_suite(const GridConfig& grid) {
  struct PrecisionGuard {
    unsigned saved;
    explicit PrecisionGuard(unsigned digits) : saved(default_precision()) {
      set_default_precision(digits);
    }
    ~PrecisionGuard() { set_default_precision(saved); }
  } guard(grid.precision);

  SuiteResult out;
  for (const CaseImpl& c : registry()) {
    std::mt19937_64 rng(grid.seed ^ fnv1a(c.meta.name));
    ToleranceSpec tol = grid.tol;
    if (!c.rel_floor.empty()) {
      const Scalar floor = Scalar::from_string(c.rel_floor);
      if (Scalar::cmp(tol.rel, floor) < 0) tol.rel = floor;
    }
    for (long i = 0; i < grid.samples; ++i) {
      Params params;
      BasePair base{Scalar(1), Scalar(0)};
      VerificationReport rep;
      try {
        c.sample(rng, grid, params, base);
        rep = verify_identity(c.meta.name, params, base, tol, grid.trunc);
      } catch (const Error& err) {
        rep.identity = c.meta.name;
        rep.base = base;
        rep.precision_digits = default_precision();
        rep.tolerance = tol_to_string(tol);
        for (const std::string& pname : c.meta.params) {
          if (params.count(pname)) {
            rep.params.push_back({pname, params.at(pname).str()});
          }
        }
        rep.pass = false;
        rep.notes.push_back(std::string("evaluation error: ") + err.what());
      }
      if (rep.pass) {
        ++out.passed;
      } else {
        ++out.failed;
      }
      out.reports.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace pqcalc
