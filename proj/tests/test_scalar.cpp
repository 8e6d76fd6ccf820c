#include <doctest.h>

#include <random>
#include <string>

#include "pqcalc/scalar.hpp"

using namespace pqcalc;

namespace {

mpq_class random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-64, 64);
  std::uniform_int_distribution<long> den(1, 64);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

ToleranceSpec rel_tol(const char* text) { return ToleranceSpec::relative(text); }

}  // namespace

TEST_CASE("exact rationals are canonical and print as num/den") {
  Scalar x = Scalar::exact(22, 7);
  CHECK(x.is_exact());
  CHECK(x.str() == "22/7");
  CHECK(Scalar::exact(-4, 8).str() == "-1/2");
  CHECK(Scalar::exact(6, 3).str() == "2");
  CHECK(Scalar::from_string(" -3 ").to_long() == -3);
  CHECK_THROWS_AS(Scalar::exact(1, 0), DomainError);
  CHECK_THROWS_AS(Scalar::from_string("abc"), ParseError);
  CHECK_THROWS_AS(Scalar::from_string(""), ParseError);
}

TEST_CASE("decimal literals carry their declared precision") {
  Scalar x = Scalar::from_string("0.125");
  CHECK(!x.is_exact());
  CHECK(x.digits() == default_precision());
  CHECK(Scalar::cmp(x, Scalar::exact(1, 8)) == 0);

  Scalar y = Scalar::decimal_from_string("6.25e-2", 30);
  CHECK(y.digits() == 30);
  CHECK(Scalar::cmp(y, Scalar::exact(1, 16)) == 0);

  Scalar z = Scalar::decimal_from_string("2.5e-3", 30);
  CHECK(approx_equal(z, Scalar::exact(1, 400), rel_tol("1e-28")));
}

TEST_CASE("exact arithmetic stays exact") {
  Scalar a = Scalar::exact(1, 3);
  Scalar b = Scalar::exact(1, 6);
  Scalar sum = a + b;
  CHECK(sum.is_exact());
  CHECK(sum == Scalar::exact(1, 2));
  CHECK((a * b).str() == "1/18");
  CHECK((a - b) == b);
  CHECK((a / b) == Scalar(2));
  CHECK_THROWS_AS(a / Scalar(0), DomainError);
}

TEST_CASE("mixing exact and decimal promotes to the decimal precision") {
  Scalar e = Scalar::exact(1, 2);
  Scalar d = Scalar::decimal_from_string("0.25", 35);
  Scalar sum = e + d;
  CHECK(!sum.is_exact());
  CHECK(sum.digits() == 35);
  CHECK(Scalar::cmp(sum, Scalar::exact(3, 4)) == 0);

  Scalar d2 = Scalar::decimal_from_string("0.5", 60);
  CHECK((d + d2).digits() == 60);
  CHECK_THROWS_AS(d / Scalar::decimal_from_string("0", 35), DomainError);
}

TEST_CASE("integer powers") {
  CHECK(pow_int(Scalar::exact(2, 3), -2) == Scalar::exact(9, 4));
  CHECK(pow_int(Scalar(0), 0) == Scalar(1));
  CHECK(pow_int(Scalar(5), 0) == Scalar(1));
  CHECK(pow_int(Scalar(-2), 3) == Scalar(-8));
  CHECK_THROWS_AS(pow_int(Scalar(0), -1), DomainError);

  Scalar d = Scalar::decimal_from_string("0.5", 40);
  CHECK(Scalar::cmp(pow_int(d, 3), Scalar::exact(1, 8)) == 0);
  CHECK(pow_int(d, 0) == Scalar(1));
}

TEST_CASE("square roots take the exact branch on perfect squares") {
  Scalar r = sqrt_scalar(Scalar::exact(9, 16));
  CHECK(r.is_exact());
  CHECK(r == Scalar::exact(3, 4));

  Scalar s = sqrt_scalar(Scalar(2));
  CHECK(!s.is_exact());
  CHECK(approx_equal(s * s, Scalar(2), rel_tol("1e-45")));

  CHECK_THROWS_AS(sqrt_scalar(Scalar(-1)), DomainError);
  CHECK_THROWS_AS(sqrt_scalar(Scalar::decimal_from_string("-2", 30)),
                  DomainError);
}

TEST_CASE("cosine is always decimal") {
  Scalar c = cos_scalar(Scalar(0));
  CHECK(!c.is_exact());
  CHECK(approx_equal(c, Scalar(1), rel_tol("1e-45")));
}

TEST_CASE("mixed comparison does not round either side") {
  Scalar exact_half = Scalar::exact(1, 2);
  Scalar dec_half = Scalar::decimal_from_string("0.5", 50);
  CHECK(Scalar::cmp(exact_half, dec_half) == 0);

  Scalar third = Scalar::exact(1, 3);
  Scalar dec_third = third.to_decimal(50);
  CHECK(Scalar::cmp(third, dec_third) != 0);
  CHECK(approx_equal(third, dec_third, rel_tol("1e-45")));
}

TEST_CASE("approx_equal honours absolute and relative slack") {
  ToleranceSpec exact = ToleranceSpec::exact();
  CHECK(approx_equal(Scalar::exact(1, 3), Scalar::exact(1, 3), exact));
  CHECK(!approx_equal(Scalar::exact(1, 3), Scalar::exact(1, 3) + pow_int(Scalar::exact(1, 10), 40), exact));

  Scalar one = Scalar(1);
  Scalar bumped = one + pow_int(Scalar::exact(1, 10), 40);
  CHECK(approx_equal(one, bumped, rel_tol("1e-30")));
  CHECK(!approx_equal(one, bumped, rel_tol("1e-50")));

  ToleranceSpec abs_only{Scalar::from_string("1/1000"), Scalar(0)};
  CHECK(approx_equal(Scalar(0), Scalar::exact(1, 2000), abs_only));
}

TEST_CASE("geometric tail bound") {
  CHECK(geometric_tail_bound(Scalar(1), Scalar::exact(1, 2)) == Scalar(1));
  CHECK(geometric_tail_bound(Scalar(3), Scalar::exact(-1, 2)) == Scalar(3));
  CHECK(geometric_tail_bound(Scalar(0), Scalar::exact(9, 10)) == Scalar(0));
  CHECK_THROWS_AS(geometric_tail_bound(Scalar(1), Scalar(1)), DomainError);
  CHECK_THROWS_AS(geometric_tail_bound(Scalar(1), Scalar::exact(-3, 2)),
                  DomainError);
}

TEST_CASE("tail bound grows with the ratio") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<long> pick(1, 98);
    long r1 = pick(rng);
    long r2 = r1 + std::uniform_int_distribution<long>(0, 99 - r1)(rng);
    Scalar t = Scalar(random_rational(rng));
    Scalar b1 = geometric_tail_bound(t, Scalar::exact(r1, 100));
    Scalar b2 = geometric_tail_bound(t, Scalar::exact(r2, 100));
    CHECK(Scalar::cmp(b1, b2) <= 0);
  }
}

TEST_CASE("rational field laws hold exactly under random sampling") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    Scalar a{random_rational(rng)};
    Scalar b{random_rational(rng)};
    Scalar c{random_rational(rng)};
    CHECK((a + b) - b == a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(-(-a) == a);
  }
}

TEST_CASE("decimal arithmetic tracks exact arithmetic to declared precision") {
  std::mt19937_64 rng(7);
  ToleranceSpec tol = rel_tol("1e-45");
  for (int i = 0; i < 200; ++i) {
    Scalar a{random_rational(rng)};
    Scalar b{random_rational(rng)};
    Scalar exact = a * b + a - b;
    Scalar decimal = a.to_decimal(50) * b.to_decimal(50) + a.to_decimal(50) -
                     b.to_decimal(50);
    CHECK(approx_equal(exact, decimal, tol));
  }
}

TEST_CASE("decimal strings round-trip at the declared precision") {
  Scalar x = Scalar::decimal_from_string("2.5", 40);
  CHECK(Scalar::cmp(Scalar::decimal_from_string(x.str(), 40), x) == 0);

  Scalar third = Scalar::exact(1, 3).to_decimal(50);
  Scalar back = Scalar::decimal_from_string(third.str(), 50);
  CHECK(approx_equal(third, back, rel_tol("1e-45")));
}

TEST_CASE("default precision is adjustable") {
  unsigned before = default_precision();
  set_default_precision(64);
  CHECK(default_precision() == 64);
  CHECK(Scalar::from_string("0.1").digits() == 64);
  set_default_precision(before);
  CHECK_THROWS_AS(set_default_precision(1), DomainError);
}
