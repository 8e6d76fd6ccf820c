#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pqcalc/errors.hpp"
#include "pqcalc/identities.hpp"

using namespace pqcalc;

namespace {

using S = Scalar;

const ToleranceSpec kTight = ToleranceSpec::relative("1e-30");

bool close_to(const std::string& got, const std::string& want,
              const char* rel = "1e-27") {
  return approx_equal(Scalar::from_string(got), Scalar::from_string(want),
                      ToleranceSpec::relative(rel));
}

bool has_note(const VerificationReport& rep, const std::string& needle) {
  for (const std::string& n : rep.notes) {
    if (n.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("identity registry lists the full catalogue") {
  const std::vector<IdentityCase>& cases = list_identities();
  CHECK(cases.size() == 21);
  std::set<std::string> names;
  for (const IdentityCase& c : cases) {
    CHECK(!c.summary.empty());
    CHECK(!c.domain.empty());
    names.insert(c.name);
  }
  CHECK(names.size() == cases.size());
  for (const char* want :
       {"pq_binomial_theorem", "permutation_product_law", "exp_product",
        "product_formula_1phi0", "pqbin_family", "gbin_equality",
        "heine_transformation", "phi11_transformation", "phi11_summation",
        "gauss_sum", "sigma_form", "gauss_corollary_qsquare",
        "gauss_corollary_sqrtq", "ramanujan_sum", "jacobi_triple_product",
        "euler_identity", "oscillator_realization", "operator_binomials",
        "rtt", "hermite_specialization", "hermite_rescale"}) {
    CHECK(names.count(want) == 1);
  }
}

TEST_CASE("verify_identity rejects unknown names and bad parameter sets") {
  CHECK_THROWS_AS(verify_identity("no_such_identity", {}, {S(2), S(1)}, kTight),
                  DomainError);
  CHECK_THROWS_AS(
      verify_identity("exp_product", {}, {S(2), S(1)}, kTight),
      DomainError);  // missing z
  CHECK_THROWS_AS(
      verify_identity("exp_product", {{"z", S(0)}, {"w", S(1)}}, {S(2), S(1)},
                      kTight),
      DomainError);  // extra parameter
}

TEST_CASE("exp_product at z = 0 is exact for any base") {
  const VerificationReport rep =
      verify_identity("exp_product", {{"z", S(0)}}, {S(1), S(1)}, kTight);
  CHECK(rep.pass);
  CHECK(rep.lhs == "1");
  CHECK(rep.rhs == "1");
  CHECK(rep.abs_residual == "0");
  CHECK(rep.rel_residual == "0");
}

TEST_CASE("gbin_equality is exact at an expanding base") {
  const VerificationReport rep = verify_identity(
      "gbin_equality", {{"n", S(5)}, {"a", S(7)}, {"b", S(5)}}, {S(2), S(3)},
      kTight);
  CHECK(rep.pass);
  CHECK(rep.lhs == "786998");
  CHECK(rep.abs_residual == "0");
  // parameters echo in schema order
  REQUIRE(rep.params.size() == 3);
  CHECK(rep.params[0].first == "n");
  CHECK(rep.params[1].first == "a");
  CHECK(rep.params[2].first == "b");
}

TEST_CASE("gauss_sum passes at an admissible point and reports divergent "
          "input as inadmissible") {
  const BasePair base{S(1), S::exact(1, 2)};
  const VerificationReport good = verify_identity(
      "gauss_sum",
      {{"a", S(1)}, {"b", S(3)}, {"c", S(1)}, {"d", S(5)}, {"e", S(1)},
       {"f", S(7)}},
      base, kTight);
  CHECK(good.pass);
  CHECK(close_to(good.lhs,
                 "0.016417588373124251865251849563657239054315243535844853910"
                 "4706"));
  CHECK(has_note(good, "cross-checked against the single-base product"));

  // |a c f / (b d e)| = 15/7 > 1: the series term ratio exceeds 1.
  const VerificationReport bad = verify_identity(
      "gauss_sum",
      {{"a", S(1)}, {"b", S::exact(1, 3)}, {"c", S(1)}, {"d", S::exact(1, 5)},
       {"e", S(1)}, {"f", S::exact(1, 7)}},
      base, kTight);
  CHECK(!bad.pass);
  CHECK(has_note(bad, "inadmissible"));
  CHECK(bad.lhs.empty());
}

TEST_CASE("heine_transformation matches its reference value") {
  const VerificationReport rep = verify_identity(
      "heine_transformation",
      {{"a", S(3)}, {"b", S(1)}, {"c", S(5)}, {"d", S(2)}, {"e", S(7)},
       {"f", S(3)}, {"z", S::exact(1, 2)}},
      {S(2), S(1)}, kTight);
  CHECK(rep.pass);
  CHECK(close_to(rep.lhs, "2.76893455510311713045370115256"));
}

TEST_CASE("ramanujan_sum matches its reference value and carries the "
          "base-correction note") {
  const VerificationReport rep = verify_identity(
      "ramanujan_sum",
      {{"a", S(3)}, {"b", S(1)}, {"c", S(5)}, {"d", S::exact(1, 4)},
       {"z", S::exact(1, 2)}},
      {S(2), S(1)}, ToleranceSpec::relative("1e-25"));
  CHECK(rep.pass);
  CHECK(close_to(rep.lhs, "6.83206235588638000182818111349"));
  CHECK(has_note(rep, "base typo corrected"));
  for (const IdentityCase& c : list_identities()) {
    if (c.name == "ramanujan_sum") {
      bool found = false;
      for (const std::string& n : c.notes) {
        if (n.find("base typo corrected") != std::string::npos) found = true;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("jacobi_triple_product agrees across all four forms") {
  const VerificationReport rep = verify_identity(
      "jacobi_triple_product", {{"ca", S::exact(3, 2)}, {"z", S::exact(1, 2)}},
      {S(2), S(1)}, kTight);
  CHECK(rep.pass);
  CHECK(close_to(rep.lhs, "0.00306974512402470667655910328307"));

  const VerificationReport unit = verify_identity(
      "jacobi_triple_product", {{"ca", S(1)}, {"z", S::exact(1, 2)}},
      {S(2), S(1)}, kTight);
  CHECK(unit.pass);
  CHECK(close_to(unit.lhs, "-0.00689127680633964535516639113934"));
}

TEST_CASE("euler_identity reproduces the infinite product") {
  const VerificationReport rep =
      verify_identity("euler_identity", {}, {S(1), S::exact(1, 2)}, kTight);
  CHECK(rep.pass);
  CHECK(close_to(rep.lhs,
                 "0.288788095086602421278899721929230780088911904840685784114"
                 "741",
                 "1e-29"));
  CHECK(rep.truncation_terms > 0);
}

TEST_CASE("oscillator_realization and rtt hold on exact and decimal bases") {
  const VerificationReport osc = verify_identity(
      "oscillator_realization", {}, {S(3), S::exact(1, 7)}, kTight);
  CHECK(osc.pass);
  CHECK(osc.abs_residual == "0");

  const VerificationReport square =
      verify_identity("rtt", {}, {S(2), S::exact(1, 2)}, kTight);
  CHECK(square.pass);
  CHECK(square.abs_residual == "0");
  CHECK(has_note(square, "perfect square"));

  const VerificationReport decimal =
      verify_identity("rtt", {}, {S(2), S(3)}, kTight);
  CHECK(decimal.pass);
  CHECK(has_note(decimal, "not a perfect square"));
}

TEST_CASE("hermite_pq small cases and guard") {
  const BasePair base{S(2), S(1)};
  const S theta = S::exact(1, 2);
  CHECK(hermite_pq(0, theta, base) == S(1));
  CHECK(hermite_pq(1, theta, base) == S(2) * cos_scalar(theta));
  CHECK(hermite_pq(2, theta, base) ==
        S(2) * cos_scalar(S(1)) + base.p + base.q);
  CHECK_THROWS_AS(hermite_pq(-1, theta, base), DomainError);
}

TEST_CASE("hermite cases pass at explicit points") {
  const VerificationReport spec = verify_identity(
      "hermite_specialization", {{"n", S(6)}, {"theta", S::exact(2, 5)}},
      {S(2), S(1)}, kTight);
  CHECK(spec.pass);

  const VerificationReport resc = verify_identity(
      "hermite_rescale", {{"n", S(7)}, {"theta", S::exact(2, 5)}},
      {S(2), S(1)}, kTight);
  CHECK(resc.pass);
  CHECK(has_note(resc, "witness"));

  // rho = q/p must stay inside (0,1) for the specialization
  const VerificationReport bad = verify_identity(
      "hermite_specialization", {{"n", S(3)}, {"theta", S(1)}}, {S(1), S(2)},
      kTight);
  CHECK(!bad.pass);
  CHECK(has_note(bad, "inadmissible"));
}

TEST_CASE("pqbin_family checks all branches at an explicit point") {
  const VerificationReport rep = verify_identity(
      "pqbin_family", {{"n", S(4)}, {"z", S::exact(1, 4)}},
      {S(2), S::exact(1, 2)}, kTight);
  CHECK(rep.pass);
  CHECK(has_note(rep, "branches checked"));

  const VerificationReport bad = verify_identity(
      "pqbin_family", {{"n", S(0)}, {"z", S::exact(1, 4)}},
      {S(2), S::exact(1, 2)}, kTight);
  CHECK(!bad.pass);
  CHECK(has_note(bad, "inadmissible"));
}

TEST_CASE("permutation_product_law holds at an explicit point") {
  const VerificationReport rep = verify_identity(
      "permutation_product_law",
      {{"u1p", S(1)}, {"u1q", S::exact(3, 2)}, {"u2p", S::exact(1, 2)},
       {"u2q", S(1)}, {"u3p", S(2)}, {"u3q", S::exact(1, 2)},
       {"z", S::exact(1, 4)}},
      {S(2), S(1)}, kTight);
  CHECK(rep.pass);
  CHECK(has_note(rep, "36 permutation pairs"));
}

TEST_CASE("run_suite is deterministic and honours the sample count") {
  GridConfig grid;
  grid.samples = 3;
  const SuiteResult first = run_suite(grid);
  const SuiteResult second = run_suite(grid);
  REQUIRE(first.reports.size() == second.reports.size());
  CHECK(first.reports.size() == 3 * list_identities().size());
  for (std::size_t i = 0; i < first.reports.size(); ++i) {
    CHECK(first.reports[i].identity == second.reports[i].identity);
    CHECK(first.reports[i].lhs == second.reports[i].lhs);
    CHECK(first.reports[i].rhs == second.reports[i].rhs);
    CHECK(first.reports[i].pass == second.reports[i].pass);
    CHECK(first.reports[i].params == second.reports[i].params);
  }

  GridConfig empty;
  empty.samples = 0;
  CHECK(run_suite(empty).reports.empty());
}

TEST_CASE("run_suite passes across the default grid") {
  const SuiteResult result = run_suite(GridConfig{});
  CHECK(result.failed == 0);
  CHECK(result.passed == static_cast<long>(result.reports.size()));
  for (const VerificationReport& rep : result.reports) {
    CHECK(rep.pass);
    CHECK(rep.precision_digits == 50);
  }
}
