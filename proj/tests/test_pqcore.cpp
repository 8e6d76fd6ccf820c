#include <doctest.h>

#include <random>
#include <vector>

#include "pqcalc/pqcore.hpp"

using namespace pqcalc;

namespace {

constexpr int kIterations = 120;

mpq_class random_rational(std::mt19937_64& rng, long lo_num = -8,
                          long hi_num = 8, long hi_den = 8) {
  std::uniform_int_distribution<long> num(lo_num, hi_num);
  std::uniform_int_distribution<long> den(1, hi_den);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Scalar nonzero_rational(std::mt19937_64& rng) {
  for (;;) {
    mpq_class q = random_rational(rng);
    if (q != 0) return Scalar(q);
  }
}

ToleranceSpec rel_tol(const char* text) { return ToleranceSpec::relative(text); }

}  // namespace

TEST_CASE("twin-basic integers at pinned points") {
  CHECK(twin_basic_number(3, {Scalar(2), Scalar(1)}) == Scalar(7));
  CHECK(twin_basic_number(3, {Scalar(2), Scalar(2)}) == Scalar(12));
  CHECK(twin_basic_number(1, {Scalar(0), Scalar(0)}) == Scalar(1));
  CHECK(twin_basic_number(4, {Scalar(1), Scalar::exact(1, 2)}) ==
        Scalar::exact(15, 8));
  CHECK(twin_basic_number(0, {Scalar(2), Scalar(3)}) == Scalar(0));
  CHECK(twin_basic_number(-1, {Scalar(2), Scalar(1)}) == Scalar::exact(-1, 2));
}

TEST_CASE("negative index reflection [-n] = -[n]/(pq)^n") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < kIterations; ++i) {
    BasePair base{nonzero_rational(rng), nonzero_rational(rng)};
    long n = std::uniform_int_distribution<long>(1, 6)(rng);
    Scalar lhs = twin_basic_number(-n, base);
    Scalar rhs = -twin_basic_number(n, base) / pow_int(base.p * base.q, n);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("factorials") {
  BasePair base{Scalar(2), Scalar(1)};
  CHECK(pq_factorial(0, base) == Scalar(1));
  CHECK(pq_factorial(3, base) == Scalar(21));
  CHECK_THROWS_AS(pq_factorial(-1, base), DomainError);

  // p = 1 gives the classical single-base factorial
  BasePair classical{Scalar(1), Scalar::exact(1, 2)};
  CHECK(pq_factorial(2, classical) == Scalar::exact(3, 2));
}

TEST_CASE("binomials at pinned points") {
  CHECK(pq_binomial(4, 2, {Scalar(1), Scalar(2)}) == Scalar(35));
  CHECK(pq_binomial(4, 2, {Scalar(2), Scalar(1)}) == Scalar(35));
  CHECK(pq_binomial(5, 0, {Scalar(3), Scalar(7)}) == Scalar(1));
  CHECK(pq_binomial(5, 5, {Scalar(3), Scalar(7)}) == Scalar(1));
  CHECK(pq_binomial(5, 6, {Scalar(3), Scalar(7)}) == Scalar(0));
  CHECK(pq_binomial(5, -1, {Scalar(3), Scalar(7)}) == Scalar(0));
  CHECK_THROWS_AS(pq_binomial(-2, 0, {Scalar(1), Scalar(1)}), DomainError);
  // p = q = 1 collapses to ordinary binomials
  CHECK(pq_binomial(6, 3, {Scalar(1), Scalar(1)}) == Scalar(20));
}

TEST_CASE("binomials survive degenerate bases where [m] vanishes") {
  // at q = -p the twin-basic integer [2] is zero, yet the binomial is the
  // polynomial value p^2
  CHECK(pq_binomial(3, 1, {Scalar(2), Scalar(-2)}) == Scalar(4));
  CHECK(pq_binomial(3, 2, {Scalar(2), Scalar(-2)}) == Scalar(4));
}

TEST_CASE("binomial recurrence row matches the factorial quotient") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < kIterations; ++i) {
    BasePair base{nonzero_rational(rng), nonzero_rational(rng)};
    long n = std::uniform_int_distribution<long>(0, 8)(rng);
    bool degenerate = false;
    for (long m = 1; m <= n && !degenerate; ++m) {
      degenerate = twin_basic_number(m, base).is_zero();
    }
    if (degenerate) continue;
    Scalar nf = pq_factorial(n, base);
    for (long k = 0; k <= n; ++k) {
      Scalar quotient =
          nf / (pq_factorial(k, base) * pq_factorial(n - k, base));
      CHECK(pq_binomial(n, k, base) == quotient);
    }
  }
}

TEST_CASE("binomials are symmetric in k <-> n-k") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < kIterations; ++i) {
    BasePair base{Scalar(random_rational(rng)), Scalar(random_rational(rng))};
    long n = std::uniform_int_distribution<long>(0, 8)(rng);
    long k = std::uniform_int_distribution<long>(0, n)(rng);
    CHECK(pq_binomial(n, k, base) == pq_binomial(n, n - k, base));
  }
}

TEST_CASE("Pochhammer symbols at pinned points") {
  BasePair base{Scalar(2), Scalar(1)};
  CHECK(pq_pochhammer({Scalar(3), Scalar(1)}, base, 0) == Scalar(1));
  CHECK(pq_pochhammer({Scalar(3), Scalar(1)}, base, 2) == Scalar(10));
  CHECK(pq_pochhammer({Scalar(3), Scalar(1)}, base, -1) == Scalar(2));
  CHECK_THROWS_AS(
      pq_pochhammer({Scalar(1), Scalar(1)}, {Scalar(2), Scalar(2)}, -1),
      PoleError);
  CHECK_THROWS_AS(
      pq_pochhammer({Scalar(1), Scalar(1)}, {Scalar(0), Scalar(1)}, -1),
      DomainError);
}

TEST_CASE("Pochhammer shift law across positive and negative indices") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < kIterations; ++i) {
    BasePair base{nonzero_rational(rng), nonzero_rational(rng)};
    ParamDoublet d{Scalar(random_rational(rng)), Scalar(random_rational(rng))};
    long m = std::uniform_int_distribution<long>(-4, 4)(rng);
    long n = std::uniform_int_distribution<long>(-4, 4)(rng);
    Scalar lhs, rhs;
    try {
      lhs = pq_pochhammer(d, base, m + n);
      ParamDoublet shifted{d.a * pow_int(base.p, m), d.b * pow_int(base.q, m)};
      rhs = pq_pochhammer(d, base, m) * pq_pochhammer(shifted, base, n);
    } catch (const Error&) {
      continue;  // pole or zero division at this sample
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("classical Pochhammer matches the doublet form at a = 1, p = 1") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < kIterations; ++i) {
    Scalar x{random_rational(rng)};
    Scalar rho = nonzero_rational(rng);
    long n = std::uniform_int_distribution<long>(-4, 6)(rng);
    Scalar lhs, rhs;
    try {
      lhs = classical_pochhammer(x, rho, n);
      rhs = pq_pochhammer({Scalar(1), x}, {Scalar(1), rho}, n);
    } catch (const Error&) {
      continue;
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("single-base reduction at the pinned point") {
  SingleBaseForm f =
      reduce_to_single_base({Scalar(2), Scalar(1)}, {Scalar(3), Scalar(1)}, 2);
  CHECK(f.param == Scalar::exact(1, 2));
  CHECK(f.base == Scalar::exact(1, 3));
  CHECK(f.prefactor == Scalar(12));
  CHECK(f.prefactor * classical_pochhammer(f.param, f.base, 2) == Scalar(5));
  CHECK(pq_pochhammer({Scalar(2), Scalar(1)}, {Scalar(3), Scalar(1)}, 2) ==
        Scalar(5));
  CHECK_THROWS_AS(
      reduce_to_single_base({Scalar(0), Scalar(1)}, {Scalar(2), Scalar(1)}, 2),
      DomainError);
}

TEST_CASE("single-base reduction reproduces the doublet symbol") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < kIterations; ++i) {
    BasePair base{nonzero_rational(rng), nonzero_rational(rng)};
    ParamDoublet d{nonzero_rational(rng), Scalar(random_rational(rng))};
    long n = std::uniform_int_distribution<long>(-4, 6)(rng);
    Scalar direct, reduced;
    try {
      direct = pq_pochhammer(d, base, n);
      SingleBaseForm f = reduce_to_single_base(d, base, n);
      reduced = f.prefactor * classical_pochhammer(f.param, f.base, n);
    } catch (const Error&) {
      continue;
    }
    CHECK(direct == reduced);
  }
}

TEST_CASE("infinite classical product at pinned points") {
  ToleranceSpec tol = rel_tol("1e-28");
  Scalar half = Scalar::exact(1, 2);
  // independently computed: (1/2; 1/2)_inf
  Scalar expected = Scalar::from_string(
      "0.288788095086602421278899721929230780088911904840685784114741");
  CHECK(approx_equal(classical_poch_infinite(half, half), expected, tol));
  CHECK(classical_poch_infinite(Scalar(0), half) == Scalar(1));
  // x = 1 hits a vanishing factor: the product is exactly zero
  CHECK(classical_poch_infinite(Scalar(1), half) == Scalar(0));
  CHECK_THROWS_AS(classical_poch_infinite(half, Scalar(1)), DomainError);
}

TEST_CASE("infinite product ratio") {
  BasePair base{Scalar(1), Scalar::exact(1, 2)};
  std::vector<ParamDoublet> num{{Scalar(2), Scalar(1)}};
  std::vector<ParamDoublet> den{{Scalar(2), Scalar::exact(3, 2)}};
  // independently computed: (1/2; 1/2)_inf / (3/4; 1/2)_inf
  Scalar expected = Scalar::from_string(
      "2.76093875310240274541333901745773480030928001024534614899223");
  CHECK(approx_equal(poch_ratio_infinite(num, den, base), expected,
                     rel_tol("1e-28")));

  Scalar one = poch_ratio_infinite(num, num, base);
  CHECK(one.is_exact());
  CHECK(one == Scalar(1));

  std::vector<ParamDoublet> unbalanced{{Scalar(3), Scalar(1)}};
  CHECK_THROWS_AS(poch_ratio_infinite(num, unbalanced, base), DomainError);
  CHECK_THROWS_AS(
      poch_ratio_infinite(num, den, {Scalar(1), Scalar(2)}), DomainError);
  std::vector<ParamDoublet> shorter;
  CHECK_THROWS_AS(poch_ratio_infinite(num, shorter, base), DomainError);
}

TEST_CASE("twin-basic exponentials at pinned points") {
  ToleranceSpec tol = rel_tol("1e-28");
  BasePair classical{Scalar(1), Scalar::exact(1, 2)};
  Scalar z = Scalar::exact(1, 5);
  // independently computed values of e_{1,1/2}(1/5) and E_{1,1/2}(1/5)
  CHECK(approx_equal(
      pq_exponential(z, classical, ExpKind::Small),
      Scalar::from_string(
          "1.23007671249054895395607430294840982889322684504091642604191"),
      tol));
  CHECK(approx_equal(
      pq_exponential(z, classical, ExpKind::Big),
      Scalar::from_string(
          "1.21371939795365837902041171453737832101223416110310502064684"),
      tol));

  BasePair twin{Scalar::exact(3, 2), Scalar::exact(1, 2)};
  Scalar w = Scalar::exact(1, 4);
  CHECK(approx_equal(
      pq_exponential(w, twin, ExpKind::Small),
      Scalar::from_string(
          "1.30663205748366164714884560949944559463729041556489521094087"),
      tol));
  CHECK(approx_equal(
      pq_exponential(w, twin, ExpKind::Big),
      Scalar::from_string(
          "1.26592736265687924915031798892951811920665304771031858342392"),
      tol));

  CHECK(pq_exponential(Scalar(0), twin, ExpKind::Small) == Scalar(1));
  // equal bases collapse to the ordinary exponential
  BasePair flat{Scalar(1), Scalar(1)};
  Scalar ez = pq_exponential(Scalar(1), flat, ExpKind::Small);
  CHECK(approx_equal(
      ez,
      Scalar::from_string(
          "2.71828182845904523536028747135266249775724709369996"),
      rel_tol("1e-28")));
}

TEST_CASE("exponential series diverges outside its radius") {
  // e_{1,1/2} has radius 2, so z = 3 must be rejected
  BasePair base{Scalar(1), Scalar::exact(1, 2)};
  CHECK_THROWS_AS(pq_exponential(Scalar(3), base, ExpKind::Small),
                  DivergenceError);
}

TEST_CASE("difference-product expansion at the pinned point") {
  std::vector<Scalar> c = gbin_expand(2, {Scalar(5), Scalar(3)});
  REQUIRE(c.size() == 3);
  CHECK(c[0] == Scalar(5));
  CHECK(c[1] == Scalar(-8));
  CHECK(c[2] == Scalar(3));
  std::vector<Scalar> c0 = gbin_expand(0, {Scalar(5), Scalar(3)});
  REQUIRE(c0.size() == 1);
  CHECK(c0[0] == Scalar(1));
  CHECK_THROWS_AS(gbin_expand(-1, {Scalar(1), Scalar(1)}), DomainError);
}

TEST_CASE("difference-product expansion matches the direct product") {
  std::mt19937_64 rng(83);
  for (int i = 0; i < kIterations; ++i) {
    BasePair base{Scalar(random_rational(rng)), Scalar(random_rational(rng))};
    long n = std::uniform_int_distribution<long>(0, 7)(rng);
    Scalar x{random_rational(rng)};
    Scalar y{random_rational(rng)};
    Scalar direct(1);
    Scalar pk(1), qk(1);
    for (long k = 0; k < n; ++k) {
      direct *= x * pk - y * qk;
      pk *= base.p;
      qk *= base.q;
    }
    std::vector<Scalar> c = gbin_expand(n, base);
    Scalar summed(0);
    for (long k = 0; k <= n; ++k) {
      summed += c[k] * pow_int(x, n - k) * pow_int(y, k);
    }
    CHECK(direct == summed);
  }
}
