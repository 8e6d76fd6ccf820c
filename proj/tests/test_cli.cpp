#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "pqcalc/cli.hpp"
#include "pqcalc/expr.hpp"
#include "pqcalc/identities.hpp"
#include "pqcalc/scalar.hpp"

using namespace pqcalc;

namespace {

struct CmdResult {
  int code = -1;
  std::string out;
  std::string err;
};

CmdResult run_eval(const std::string& text, const CliConfig& cfg = {}) {
  std::ostringstream out, err;
  const int code = cmd_eval(text, cfg, out, err);
  return {code, out.str(), err.str()};
}

CmdResult run_verify(const std::string& target, long grid,
                     const CliConfig& cfg = {}) {
  std::ostringstream out, err;
  const int code = cmd_verify(target, grid, cfg, out, err);
  return {code, out.str(), err.str()};
}

CmdResult run_convert(const std::string& direction, const std::string& text,
                      const std::string& lift = "1",
                      const std::string& lift_base = "",
                      const CliConfig& cfg = {}) {
  std::ostringstream out, err;
  const int code = cmd_convert(direction, text, lift, lift_base, cfg, out, err);
  return {code, out.str(), err.str()};
}

CmdResult run_table(long n, const std::string& p, const std::string& q,
                    const CliConfig& cfg = {}) {
  std::ostringstream out, err;
  const int code = cmd_table_binom(n, p, q, cfg, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

Scalar eval_line(const std::string& line) {
  return eval_expression(parse_expression(line));
}

const ToleranceSpec kTight = ToleranceSpec::relative("1e-30");

}  // namespace

TEST_CASE("eval prints exact values with exit 0") {
  CHECK(run_eval("qnum(3;2,1)").code == 0);
  CHECK(run_eval("qnum(3;2,1)").out == "7\n");
  CHECK(run_eval("binom(4,2;1,2)").out == "35\n");
  CHECK(run_eval("poch((3,1);(2,1);-1)").out == "2\n");
  CHECK(run_eval("6/4").out == "3/2\n");
}

TEST_CASE("eval error exit codes") {
  const CmdResult parse = run_eval("qnum(3;2");
  CHECK(parse.code == 2);
  CHECK(parse.out.empty());
  CHECK(parse.err.find("parse error") != std::string::npos);
  CHECK(parse.err.find("position 9") != std::string::npos);

  const CmdResult degenerate = run_eval("qnum(1;0,0)");
  CHECK(degenerate.code == 3);
  CHECK(degenerate.err.find("degenerate base") != std::string::npos);

  CHECK(run_eval("1/0").code == 3);
  CHECK(run_eval("phi[[2];[];3;1/2]").code == 3);
  CHECK(run_eval("x+1").code == 3);
}

TEST_CASE("eval honors precision and output mode") {
  CliConfig narrow;
  narrow.precision_digits = 20;
  const CmdResult v20 = run_eval("e((1,1/2);1/2)", narrow);
  const CmdResult v50 = run_eval("e((1,1/2);1/2)");
  CHECK(v20.code == 0);
  CHECK(v20.out.size() < v50.out.size());
  CHECK(v50.out.substr(0, 10) == v20.out.substr(0, 10));

  CliConfig as_json;
  as_json.output = "json";
  const CmdResult j = run_eval("qnum(3;2,1)", as_json);
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("command") == "eval");
  CHECK(doc.at("expression") == "qnum(3;2,1)");
  CHECK(doc.at("value") == "7");
}

TEST_CASE("config validation") {
  CliConfig bad;
  bad.precision_digits = 5;
  CHECK(run_eval("1", bad).code == 2);
  bad = CliConfig{};
  bad.max_terms = 0;
  CHECK(run_eval("1", bad).code == 2);
  bad = CliConfig{};
  bad.output = "yaml";
  CHECK(run_eval("1", bad).code == 2);
  bad = CliConfig{};
  bad.tol = "not-a-number";
  CHECK(run_eval("1", bad).code == 2);
  bad = CliConfig{};
  bad.tol = "-1e-30";
  CHECK(run_eval("1", bad).code == 2);
}

TEST_CASE("verify single identity and unknown target") {
  const CmdResult ok = run_verify("gauss_sum", 2);
  CHECK(ok.code == 0);
  CHECK(first_line(ok.out).find("gauss_sum: 2/2 pass") == 0);
  CHECK(ok.out.find("worst relative residual") != std::string::npos);
  CHECK(ok.out.find("summary: 2/2 pass") != std::string::npos);

  const CmdResult unknown = run_verify("no_such_identity", 2);
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown identity") != std::string::npos);

  CHECK(run_verify("gauss_sum", 0).code == 2);
}

TEST_CASE("verify all passes and exit code tracks failures") {
  const CmdResult all = run_verify("all", 1);
  CHECK(all.code == 0);
  // One line per registered identity plus the summary.
  const std::size_t lines =
      static_cast<std::size_t>(std::count(all.out.begin(), all.out.end(), '\n'));
  CHECK(lines == list_identities().size() + 1);
  CHECK(all.out.find("summary: ") != std::string::npos);
}

TEST_CASE("verify json document matches the declared schema") {
  const std::string path = "cli_verify_report.json";
  CliConfig cfg;
  cfg.seed = 1;
  cfg.json_path = path;
  const CmdResult res = run_verify("gauss_sum", 1, cfg);
  CHECK(res.code == 0);

  std::ifstream in(path);
  REQUIRE(in.good());
  nlohmann::json doc;
  in >> doc;
  CHECK(doc.at("command") == "verify");
  CHECK(doc.at("target") == "gauss_sum");
  CHECK(doc.at("seed") == "1");
  CHECK(doc.at("grid") == "1");
  CHECK(doc.at("precision_digits") == "50");
  CHECK(doc.at("passed") == "1");
  CHECK(doc.at("failed") == "0");
  REQUIRE(doc.at("reports").is_array());
  REQUIRE(doc.at("reports").size() == 1);

  const auto& r = doc.at("reports")[0];
  CHECK(r.size() == 12);
  CHECK(r.at("identity") == "gauss_sum");
  CHECK(r.at("params").is_object());
  for (const auto& [key, value] : r.at("params").items()) {
    CHECK(!key.empty());
    CHECK(value.is_string());
  }
  CHECK(r.at("base").is_object());
  CHECK(r.at("base").at("p").is_string());
  CHECK(r.at("base").at("q").is_string());
  CHECK(r.at("precision_digits").is_string());
  CHECK(r.at("truncation_terms").is_string());
  CHECK(r.at("lhs").is_string());
  CHECK(r.at("rhs").is_string());
  CHECK(r.at("abs_residual").is_string());
  CHECK(r.at("rel_residual").is_string());
  CHECK(r.at("tolerance").is_string());
  CHECK(r.at("pass").is_boolean());
  CHECK(r.at("pass") == true);
  CHECK(r.at("notes").is_array());
  std::remove(path.c_str());
}

TEST_CASE("convert collapses a shape-zero Phi to phi") {
  const CmdResult res =
      run_convert("pq2q", "Phi[[(1,a),(1,b)];[(1,c)];(1,q);z]");
  CHECK(res.code == 0);
  CHECK(res.out == "phi[[a,b];[c];q;z]\n");

  const CmdResult bad_shape = run_convert("pq2q", "Phi[[];[];(2,1);z]");
  CHECK(bad_shape.code == 3);
  CHECK(bad_shape.err.find("projection exists only for s = r") !=
        std::string::npos);

  CHECK(run_convert("pq2q", "phi[[a];[];q;z]").code == 3);
  CHECK(run_convert("pq2q", "Phi[[(0,1),(1,a)];[(1,c)];(1,q);z]").code == 3);
  CHECK(run_convert("pq2q", "Phi[[(1,a),(1,b)];[(1,c)];(0,q);z]").code == 3);
  CHECK(run_convert("sideways", "phi[[a];[];q;z]").code == 2);
  CHECK(run_convert("pq2q", "Phi[[(1,a)],").code == 2);
}

TEST_CASE("convert pq2q agrees numerically with the original") {
  const std::string original = "Phi[[(2,2/3)];[];(2,1);1/8]";
  const CmdResult res = run_convert("pq2q", original);
  CHECK(res.code == 0);
  CHECK(first_line(res.out) == "phi[[1/3];[];1/2;1/8]");
  CHECK(approx_equal(eval_line(original), eval_line(first_line(res.out)),
                     kTight));
}

TEST_CASE("convert lifts a phi to Phi") {
  const CmdResult trivial = run_convert("q2pq", "phi[[a,b];[c];q;z]");
  CHECK(trivial.code == 0);
  CHECK(trivial.out == "Phi[[(1,a),(1,b)];[(1,c)];(1,q);z]\n");

  const CmdResult lifted = run_convert("q2pq", "phi[[1/3];[];1/2;1/4]", "2");
  CHECK(lifted.code == 0);
  CHECK(first_line(lifted.out) == "Phi[[(2,2/3)];[];(2,1);1/4]");
  CHECK(approx_equal(eval_line("phi[[1/3];[];1/2;1/4]"),
                     eval_line(first_line(lifted.out)), kTight));

  // A shape imbalance is padded with (0,1) doublets.
  const CmdResult padded = run_convert("q2pq", "phi[[1/3];[1/5];1/2;1/4]");
  CHECK(padded.code == 0);
  CHECK(first_line(padded.out) ==
        "Phi[[(1,1/3),(0,1)];[(1,1/5)];(1,1/2);1/4]");
  CHECK(approx_equal(eval_line("phi[[1/3];[1/5];1/2;1/4]"),
                     eval_line(first_line(padded.out)), kTight));

  // Independent base scale, argument rescale lambda * mu^(s-r).
  const CmdResult two_base =
      run_convert("q2pq", "phi[[1/3];[];1/2;1/4]", "1", "2");
  CHECK(two_base.code == 0);
  CHECK(first_line(two_base.out) == "Phi[[(1,1/3)];[];(2,1);1/2]");
  CHECK(approx_equal(eval_line("phi[[1/3];[];1/2;1/4]"),
                     eval_line(first_line(two_base.out)), kTight));

  CHECK(run_convert("q2pq", "phi[[1/3];[];1/2;1/4]", "0").code == 3);
  CHECK(run_convert("q2pq", "phi[[1/3];[];1/2;1/4]", "1", "0").code == 3);
  CHECK(run_convert("q2pq", "Phi[[(1,a)];[];(1,q);z]").code == 3);
  CHECK(run_convert("q2pq", "phi[[1/3];[];1/2;1/4]", "bad(").code == 2);
}

TEST_CASE("table prints the binomial triangle") {
  const CmdResult res = run_table(4, "1", "2");
  CHECK(res.code == 0);
  CHECK(res.out == "1\n1 1\n1 3 1\n1 7 7 1\n1 15 35 15 1\n");

  const CmdResult rational = run_table(2, "1", "1/2");
  CHECK(rational.code == 0);
  CHECK(rational.out == "1\n1 1\n1 3/2 1\n");

  CHECK(run_table(-1, "1", "2").code == 2);
  CHECK(run_table(2, "1/(", "2").code == 2);
  CHECK(run_table(2, "x", "2").code == 3);
  CHECK(run_table(2, "0", "0").code == 3);

  CliConfig as_json;
  as_json.output = "json";
  const CmdResult j = run_table(2, "1", "2", as_json);
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("rows").size() == 3);
  CHECK(doc.at("rows")[2][1] == "3");
}
