#include <doctest.h>

#include <random>
#include <vector>

#include "pqcalc/operators.hpp"

using namespace pqcalc;

namespace {

FormalSeries random_series(std::mt19937_64& rng, long order) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  std::vector<Scalar> c;
  for (long n = 0; n <= order; ++n) {
    c.push_back(Scalar(num(rng)) / Scalar(den(rng)));
  }
  return FormalSeries(c);
}

bool same_coeffs(const FormalSeries& f, const FormalSeries& g) {
  if (f.order() != g.order()) return false;
  for (long n = 0; n <= f.order(); ++n) {
    if (!(f.coeff(n) == g.coeff(n))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("formal series basics") {
  FormalSeries z3 = FormalSeries::monomial(3);
  CHECK(z3.order() == 3);
  CHECK(z3.coeff(3) == Scalar(1));
  CHECK(z3.coeff(2) == Scalar(0));
  CHECK(z3.coeff(7) == Scalar(0));  // beyond the truncation order
  CHECK(!z3.is_zero());
  CHECK(FormalSeries::zero(5).is_zero());

  FormalSeries f({Scalar(1), Scalar(2), Scalar(3)});
  FormalSeries g({Scalar(5), Scalar(7)});
  FormalSeries sum = f + g;
  CHECK(sum.order() == 1);  // truncates to the smaller order
  CHECK(sum.coeff(0) == Scalar(6));
  CHECK(sum.coeff(1) == Scalar(9));
  FormalSeries diff = f - g;
  CHECK(diff.coeff(0) == Scalar(-4));
  FormalSeries scaled = Scalar::exact(1, 2) * f;
  CHECK(scaled.coeff(1) == Scalar(1));

  FormalSeries arg = f.scaled_argument(Scalar::exact(1, 3));
  CHECK(arg.coeff(0) == Scalar(1));
  CHECK(arg.coeff(1) == Scalar::exact(2, 3));
  CHECK(arg.coeff(2) == Scalar::exact(3, 9));

  FormalSeries up = g.shifted_up();
  CHECK(up.order() == 2);
  CHECK(up.coeff(0) == Scalar(0));
  CHECK(up.coeff(1) == Scalar(5));
  CHECK(up.coeff(2) == Scalar(7));
}

TEST_CASE("twin-basic derivative acts on monomials") {
  BasePair base{Scalar(2), Scalar(1)};
  FormalSeries d3 = pq_derivative(FormalSeries::monomial(3), base);
  CHECK(d3.order() == 2);
  CHECK(d3.coeff(2) == Scalar(7));
  CHECK(d3.coeff(1) == Scalar(0));

  for (long n = 1; n <= 8; ++n) {
    BasePair b{Scalar::exact(3, 2), Scalar::exact(2, 3)};
    FormalSeries d = pq_derivative(FormalSeries::monomial(n), b);
    CHECK(d.coeff(n - 1) == twin_basic_number(n, b));
  }

  FormalSeries dc = pq_derivative(FormalSeries::monomial(0, Scalar(5)), base);
  CHECK(dc.is_zero());
  CHECK(dc.order() == 0);
}

TEST_CASE("derivative at equal bases uses the limit weight") {
  BasePair base{Scalar(3), Scalar(3)};
  FormalSeries d = pq_derivative(FormalSeries::monomial(4), base);
  CHECK(d.coeff(3) == Scalar(4 * 27));  // n p^{n-1}
}

TEST_CASE("delta operator") {
  BasePair base{Scalar(2), Scalar::exact(1, 3)};
  CHECK(delta_op(FormalSeries::monomial(0), Scalar(1), Scalar(1), base)
            .is_zero());

  FormalSeries dz =
      delta_op(FormalSeries::monomial(1), Scalar(1), Scalar(1), base);
  CHECK(dz.coeff(1) == base.q - base.p);
  CHECK(dz.coeff(0) == Scalar(0));

  // dividing Delta f by Delta z = (q - p) z recovers the derivative
  BasePair b21{Scalar(2), Scalar(1)};
  FormalSeries delta_cubed =
      delta_op(FormalSeries::monomial(3), Scalar(1), Scalar(1), b21);
  Scalar recovered = delta_cubed.coeff(3) / (b21.q - b21.p);
  CHECK(recovered == Scalar(7));
  CHECK(recovered ==
        pq_derivative(FormalSeries::monomial(3), b21).coeff(2));
}

TEST_CASE("derivative equals delta quotient degreewise") {
  std::mt19937_64 rng(11);
  BasePair base{Scalar::exact(5, 4), Scalar::exact(2, 7)};
  for (int it = 0; it < 20; ++it) {
    FormalSeries f = random_series(rng, 9);
    FormalSeries df = pq_derivative(f, base);
    FormalSeries delta = delta_op(f, Scalar(1), Scalar(1), base);
    CHECK(delta.coeff(0) == Scalar(0));
    for (long n = 0; n <= df.order(); ++n) {
      CHECK(df.coeff(n) == delta.coeff(n + 1) / (base.q - base.p));
    }
  }
}

TEST_CASE("u-derivative weights") {
  FormalSeries z3 = FormalSeries::monomial(3);
  FormalSeries classical = u_derivative(z3, WeightFunction::classical());
  CHECK(classical.coeff(2) == Scalar(3));

  BasePair b21{Scalar(2), Scalar(1)};
  FormalSeries twin = u_derivative(z3, WeightFunction::twin_basic(b21));
  CHECK(twin.coeff(2) == Scalar(7));
  CHECK(same_coeffs(twin, pq_derivative(z3, b21)));

  CHECK(u_derivative(z3, WeightFunction::none()).is_zero());
}

TEST_CASE("derivative at p = 1 is the classical q-derivative") {
  BasePair base{Scalar(1), Scalar::exact(1, 2)};
  std::mt19937_64 rng(12);
  FormalSeries f = random_series(rng, 10);
  FormalSeries df = pq_derivative(f, base);
  for (long n = 0; n <= df.order(); ++n) {
    Scalar weight = (Scalar(1) - pow_int(base.q, n + 1)) / (Scalar(1) - base.q);
    CHECK(df.coeff(n) == weight * f.coeff(n + 1));
  }
}

TEST_CASE("operators are linear") {
  std::mt19937_64 rng(13);
  BasePair base{Scalar::exact(7, 4), Scalar::exact(3, 5)};
  Scalar alpha = Scalar::exact(2, 3), beta = Scalar::exact(-5, 4);
  WeightFunction u = WeightFunction::twin_basic(base);
  for (int it = 0; it < 15; ++it) {
    FormalSeries f = random_series(rng, 8);
    FormalSeries g = random_series(rng, 8);
    Scalar s = Scalar::exact(3, 7);
    FormalSeries combo = s * f + g;
    CHECK(same_coeffs(pq_derivative(combo, base),
                      s * pq_derivative(f, base) + pq_derivative(g, base)));
    CHECK(same_coeffs(delta_op(combo, alpha, beta, base),
                      s * delta_op(f, alpha, beta, base) +
                          delta_op(g, alpha, beta, base)));
    CHECK(same_coeffs(u_derivative(combo, u),
                      s * u_derivative(f, u) + u_derivative(g, u)));
  }
}

TEST_CASE("difference equation residual vanishes across shapes") {
  auto make = [](std::vector<ParamDoublet> num, std::vector<ParamDoublet> den,
                 Scalar p, Scalar q) {
    SeriesSpec spec;
    spec.num = std::move(num);
    spec.den = std::move(den);
    spec.base = {std::move(p), std::move(q)};
    spec.z = Scalar::exact(1, 4);
    return spec;
  };
  ParamDoublet d1{Scalar(3), Scalar(1)};
  ParamDoublet d2{Scalar(2), Scalar::exact(1, 2)};
  ParamDoublet d3{Scalar(5), Scalar::exact(1, 3)};
  ParamDoublet d4{Scalar(7), Scalar::exact(2, 3)};

  // (r, s) = (0,0), (1,0), (1,1), (2,1), (2,2)
  std::vector<SeriesSpec> cases = {
      make({}, {}, Scalar(2), Scalar(1)),
      make({d1}, {}, Scalar(2), Scalar(1)),
      make({d1}, {d3}, Scalar(2), Scalar(1)),
      make({d1, d2}, {d3}, Scalar(2), Scalar(1)),
      make({d1, d2}, {d3, d4}, Scalar::exact(3, 2), Scalar::exact(2, 3)),
  };
  for (const SeriesSpec& spec : cases) {
    Scalar r = phi_difference_residual(spec, 25);
    CHECK(r.is_exact());
    CHECK(r.is_zero());
  }
}

TEST_CASE("difference equation residual with random doublets") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<long> num(1, 9);
  std::uniform_int_distribution<long> den(1, 9);
  auto pick = [&] { return Scalar(num(rng)) / Scalar(den(rng)); };
  int done = 0;
  while (done < 10) {
    SeriesSpec spec;
    spec.num = {{pick(), pick()}, {pick(), pick()}};
    spec.den = {{pick(), pick()}};
    spec.base = {pick(), pick()};
    spec.z = pick();
    if (spec.base.p == spec.base.q) continue;
    try {
      Scalar r = phi_difference_residual(spec, 25);
      CHECK(r.is_zero());
      ++done;
    } catch (const PoleError&) {
      continue;
    }
  }
}

TEST_CASE("difference equation residual at p = 1 (classical reduction)") {
  SeriesSpec spec;
  spec.num = {{Scalar(1), Scalar::exact(1, 3)}, {Scalar(1), Scalar::exact(1, 4)}};
  spec.den = {{Scalar(1), Scalar::exact(1, 12)}};
  spec.base = {Scalar(1), Scalar::exact(1, 2)};
  spec.z = Scalar::exact(3, 16);
  CHECK(phi_difference_residual(spec, 20).is_zero());
}

TEST_CASE("difference equation residual reports poles and bad input") {
  SeriesSpec spec;
  spec.num = {{Scalar(3), Scalar(1)}};
  spec.den = {{Scalar(1), Scalar(2)}};  // vanishes at the second factor
  spec.base = {Scalar(2), Scalar(1)};
  spec.z = Scalar::exact(1, 4);
  CHECK_THROWS_AS(phi_difference_residual(spec, 10), PoleError);

  SeriesSpec zero_base = spec;
  zero_base.den.clear();
  zero_base.base = {Scalar(2), Scalar(0)};
  CHECK_THROWS_AS(phi_difference_residual(zero_base, 10), DomainError);

  SeriesSpec equal = spec;
  equal.den.clear();
  equal.base = {Scalar(2), Scalar(2)};
  CHECK_THROWS_AS(phi_difference_residual(equal, 10), PoleError);
}
