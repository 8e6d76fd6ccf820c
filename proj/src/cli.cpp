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

#include "pqcalc/cli.hpp"

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pqcalc/errors.hpp"
#include "pqcalc/expr.hpp"
#include "pqcalc/identities.hpp"
#include "pqcalc/pqcore.hpp"
#include "pqcalc/scalar.hpp"

namespace pqcalc {

namespace {

using ordered_json = nlohmann::ordered_json;

// Exit codes (see cli.hpp): 0 success, 1 verification failure, 2 usage or
// parse error, 3 domain / divergence error.
constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsageError = 2;
constexpr int kDomainError = 3;

struct Validated {
  unsigned digits = 50;
  Scalar tol;
  TruncationPolicy trunc;
};

int validate_config(const CliConfig& cfg, std::ostream& err, Validated* out) {
  if (cfg.precision_digits < 10) {
    err << "error: --precision must be at least 10\n";
    return kUsageError;
  }
  if (cfg.max_terms < 1) {
    err << "error: --max-terms must be at least 1\n";
    return kUsageError;
  }
  if (cfg.output != "text" && cfg.output != "json") {
    err << "error: --output must be text or json\n";
    return kUsageError;
  }
  Scalar tol;
  try {
    tol = Scalar::from_string(cfg.tol);
  } catch (const Error&) {
    err << "error: --tol must be a number\n";
    return kUsageError;
  }
  if (!(tol > Scalar(0))) {
    err << "error: --tol must be positive\n";
    return kUsageError;
  }
  out->digits = static_cast<unsigned>(cfg.precision_digits);
  out->tol = tol;
  out->trunc.max_terms = cfg.max_terms;
  // Keep the truncation target safely below the comparison tolerance.
  const Scalar cap = Scalar::from_string("1e-31");
  const Scalar scaled = tol / Scalar(10);
  out->trunc.tail_target = scaled < cap ? scaled : cap;
  return kOk;
}

class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits) : saved_(default_precision()) {
    set_default_precision(digits);
  }
  ~PrecisionGuard() { set_default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

/// Emits the document to json_path (when set) and/or to `out` (when the
/// output mode is json).  Returns false when the file cannot be written.
bool emit_json(const ordered_json& doc, const CliConfig& cfg,
               std::ostream& out, std::ostream& err) {
  if (!cfg.json_path.empty()) {
    std::ofstream file(cfg.json_path);
    if (!file) {
      err << "error: cannot write " << cfg.json_path << "\n";
      return false;
    }
    file << doc.dump(2) << "\n";
  }
  if (cfg.output == "json") out << doc.dump(2) << "\n";
  return true;
}

ordered_json report_to_json(const VerificationReport& r) {
  ordered_json params = ordered_json::object();
  for (const auto& [name, value] : r.params) params[name] = value;
  ordered_json j;
  j["identity"] = r.identity;
  j["params"] = std::move(params);
  j["base"] = {{"p", r.base.p.str()}, {"q", r.base.q.str()}};
  j["precision_digits"] = std::to_string(r.precision_digits);
  j["truncation_terms"] = std::to_string(r.truncation_terms);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["abs_residual"] = r.abs_residual;
  j["rel_residual"] = r.rel_residual;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["notes"] = r.notes;
  return j;
}

// --- structural conversion helpers -----------------------------------------

/// True (with the value) when e is an exact rational literal, possibly
/// under unary minus.
bool exact_literal(const ExprPtr& e, Scalar* out) {
  if (e->kind == ExprKind::kNegate) {
    Scalar inner;
    if (!exact_literal(e->children[0], &inner)) return false;
    if (out) *out = -inner;
    return true;
  }
  if (e->kind != ExprKind::kNumber || e->is_decimal) return false;
  if (out) *out = e->value;
  return true;
}

bool literal_equals(const ExprPtr& e, long value) {
  Scalar v;
  return exact_literal(e, &v) && v == Scalar(value);
}

/// a*b with the trivial cases removed: a factor that is the literal 1
/// disappears and two exact literals fold.
ExprPtr simplify_mul(const ExprPtr& a, const ExprPtr& b) {
  if (literal_equals(a, 1)) return b;
  if (literal_equals(b, 1)) return a;
  Scalar va, vb;
  if (exact_literal(a, &va) && exact_literal(b, &vb)) {
    return Expr::number(va * vb);
  }
  return Expr::binary(BinaryOp::kMul, a, b);
}

/// a/b with the trivial cases removed, mirroring simplify_mul.
ExprPtr simplify_div(const ExprPtr& a, const ExprPtr& b) {
  if (literal_equals(b, 1)) return a;
  Scalar va, vb;
  if (exact_literal(a, &va) && exact_literal(b, &vb) && !vb.is_zero()) {
    return Expr::number(va / vb);
  }
  return Expr::binary(BinaryOp::kDiv, a, b);
}

/// Collapse Phi[[(a,b)...];[(c,d)...];(P,Q);z] with s = r - 1 to
/// phi[[b/a...];[d/c...];Q/P;z*prod(a)/(P*prod(c))], structurally.
ExprPtr project_call(const ExprPtr& input) {
  if (input->kind != ExprKind::kCall || input->text != "Phi") {
    throw DomainError("pq2q expects a Phi expression");
  }
  const std::vector<SlotValue>& slots = input->slots;
  const long r = static_cast<long>(slots[0].doublets.size());
  const long s = static_cast<long>(slots[1].doublets.size());
  if (s != r - 1) {
    throw DomainError("projection exists only for s = r - 1");
  }
  const ExprDoublet& base = slots[2].doublets[0];
  if (literal_equals(base.a, 0)) throw DomainError("projection needs p != 0");

  SlotValue num{SlotKind::kScalarList, {}, {}};
  SlotValue den{SlotKind::kScalarList, {}, {}};
  ExprPtr scale_num = slots[3].entries[0];
  ExprPtr scale_den = base.a;
  for (const ExprDoublet& d : slots[0].doublets) {
    if (literal_equals(d.a, 0)) {
      throw DomainError("projection needs nonzero a-components");
    }
    num.entries.push_back(simplify_div(d.b, d.a));
    scale_num = simplify_mul(scale_num, d.a);
  }
  for (const ExprDoublet& d : slots[1].doublets) {
    if (literal_equals(d.a, 0)) {
      throw DomainError("projection needs nonzero a-components");
    }
    den.entries.push_back(simplify_div(d.b, d.a));
    scale_den = simplify_mul(scale_den, d.a);
  }
  SlotValue base_slot{SlotKind::kScalar, {simplify_div(base.b, base.a)}, {}};
  SlotValue z_slot{SlotKind::kScalar,
                   {simplify_div(scale_num, scale_den)},
                   {}};
  return Expr::call("phi", {std::move(num), std::move(den),
                            std::move(base_slot), std::move(z_slot)});
}

/// Lift phi[[alpha...];[beta...];q;z] to doublet form: parameters become
/// (mu, mu*alpha), the base becomes (lambda, lambda*q), a shape imbalance
/// is padded with (0,1) doublets, and the argument picks up the factor
/// lambda * mu^(s-r) that makes the two series agree term by term.
ExprPtr lift_call(const ExprPtr& input, const Scalar& mu,
                  const Scalar& lambda) {
  if (input->kind != ExprKind::kCall || input->text != "phi") {
    throw DomainError("q2pq expects a phi expression");
  }
  if (mu.is_zero()) throw DomainError("lift scale must be nonzero");
  if (lambda.is_zero()) throw DomainError("lift base scale must be nonzero");
  const std::vector<SlotValue>& slots = input->slots;
  const long r = static_cast<long>(slots[0].entries.size());
  const long s = static_cast<long>(slots[1].entries.size());
  const long e = 1 + s - r;

  const ExprPtr mu_e = Expr::number(mu);
  const ExprPtr lambda_e = Expr::number(lambda);
  const ExprDoublet pad{Expr::number(Scalar(0)), Expr::number(Scalar(1))};

  SlotValue num{SlotKind::kDoubletList, {}, {}};
  for (const ExprPtr& alpha : slots[0].entries) {
    num.doublets.push_back({mu_e, simplify_mul(mu_e, alpha)});
  }
  for (long i = 0; i < e; ++i) num.doublets.push_back(pad);

  SlotValue den{SlotKind::kDoubletList, {}, {}};
  for (const ExprPtr& beta : slots[1].entries) {
    den.doublets.push_back({mu_e, simplify_mul(mu_e, beta)});
  }
  for (long i = 0; i < -e; ++i) den.doublets.push_back(pad);

  SlotValue base{SlotKind::kDoublet,
                 {},
                 {{lambda_e, simplify_mul(lambda_e, slots[2].entries[0])}}};
  const Scalar factor = lambda * pow_int(mu, s - r);
  SlotValue z_slot{SlotKind::kScalar,
                   {simplify_mul(Expr::number(factor), slots[3].entries[0])},
                   {}};
  return Expr::call("Phi", {std::move(num), std::move(den), std::move(base),
                            std::move(z_slot)});
}

}  // namespace

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

int cmd_eval(const std::string& expr_text, const CliConfig& config,
             std::ostream& out, std::ostream& err) {
  Validated v;
  if (int rc = validate_config(config, err, &v)) return rc;
  PrecisionGuard guard(v.digits);
  try {
    const ExprPtr e = parse_expression(expr_text);
    EvalOptions opts;
    opts.precision = v.digits;
    opts.trunc = v.trunc;
    const Scalar value = eval_expression(e, opts);
    ordered_json doc;
    doc["command"] = "eval";
    doc["expression"] = print_expression(e);
    doc["value"] = value.str();
    if (!emit_json(doc, config, out, err)) return kUsageError;
    if (config.output != "json") out << value.str() << "\n";
    return kOk;
  } catch (const ParseError& pe) {
    err << "parse error: " << pe.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(const std::string& target, long grid, const CliConfig& config,
               std::ostream& out, std::ostream& err) {
  Validated v;
  if (int rc = validate_config(config, err, &v)) return rc;
  if (grid < 1) {
    err << "error: --grid must be at least 1\n";
    return kUsageError;
  }
  const bool all = target == "all";
  std::vector<std::string> names;
  for (const IdentityCase& c : list_identities()) names.push_back(c.name);
  if (!all) {
    bool known = false;
    for (const std::string& n : names) known = known || n == target;
    if (!known) {
      err << "error: unknown identity '" << target << "'\n";
      return kUsageError;
    }
    names = {target};
  }

  PrecisionGuard guard(v.digits);
  GridConfig grid_cfg;
  grid_cfg.seed = config.seed;
  grid_cfg.samples = grid;
  grid_cfg.precision = v.digits;
  grid_cfg.tol = ToleranceSpec{Scalar(0), v.tol};
  grid_cfg.trunc = v.trunc;
  const SuiteResult suite = run_suite(grid_cfg);

  // Each identity draws from its own seeded generator, so restricting the
  // suite to one name reproduces exactly the reports a dedicated run of
  // that identity would produce.
  std::vector<VerificationReport> reports;
  long passed = 0;
  long failed = 0;
  for (const std::string& name : names) {
    for (const VerificationReport& r : suite.reports) {
      if (r.identity != name) continue;
      reports.push_back(r);
      (r.pass ? passed : failed) += 1;
    }
  }

  if (config.output != "json") {
    for (const std::string& name : names) {
      long total = 0;
      long ok = 0;
      std::string worst = "0";
      Scalar worst_value(0);
      for (const VerificationReport& r : reports) {
        if (r.identity != name) continue;
        ++total;
        if (r.pass) ++ok;
        const Scalar res = Scalar::from_string(r.rel_residual);
        if (res > worst_value) {
          worst_value = res;
          worst = r.rel_residual;
        }
      }
      out << name << ": " << ok << "/" << total
          << " pass, worst relative residual " << worst << "\n";
    }
    out << "summary: " << passed << "/" << (passed + failed) << " pass (seed "
        << config.seed << ", grid " << grid << ", precision " << v.digits
        << ")\n";
  }

  ordered_json doc;
  doc["command"] = "verify";
  doc["target"] = target;
  doc["seed"] = std::to_string(config.seed);
  doc["grid"] = std::to_string(grid);
  doc["precision_digits"] = std::to_string(v.digits);
  doc["passed"] = std::to_string(passed);
  doc["failed"] = std::to_string(failed);
  ordered_json arr = ordered_json::array();
  for (const VerificationReport& r : reports) arr.push_back(report_to_json(r));
  doc["reports"] = std::move(arr);
  if (!emit_json(doc, config, out, err)) return kUsageError;

  return failed == 0 ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------
// convert
// ---------------------------------------------------------------------------

int cmd_convert(const std::string& direction, const std::string& expr_text,
                const std::string& lift, const std::string& lift_base,
                const CliConfig& config, std::ostream& out,
                std::ostream& err) {
  Validated v;
  if (int rc = validate_config(config, err, &v)) return rc;
  if (direction != "q2pq" && direction != "pq2q") {
    err << "error: --direction must be q2pq or pq2q\n";
    return kUsageError;
  }
  PrecisionGuard guard(v.digits);

  ExprPtr input;
  try {
    input = parse_expression(expr_text);
  } catch (const ParseError& pe) {
    err << "parse error: " << pe.what() << "\n";
    return kUsageError;
  }

  ExprPtr converted;
  try {
    if (direction == "pq2q") {
      converted = project_call(input);
    } else {
      EvalOptions opts;
      opts.precision = v.digits;
      opts.trunc = v.trunc;
      Scalar mu;
      Scalar lambda;
      try {
        mu = eval_expression(parse_expression(lift), opts);
        const std::string& base_text = lift_base.empty() ? lift : lift_base;
        lambda = eval_expression(parse_expression(base_text), opts);
      } catch (const ParseError& pe) {
        err << "parse error in lift: " << pe.what() << "\n";
        return kUsageError;
      }
      converted = lift_call(input, mu, lambda);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }

  ordered_json doc;
  doc["command"] = "convert";
  doc["direction"] = direction;
  doc["input"] = print_expression(input);
  doc["output"] = print_expression(converted);
  if (!emit_json(doc, config, out, err)) return kUsageError;
  if (config.output != "json") out << print_expression(converted) << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

int cmd_table_binom(long n, const std::string& p_text,
                    const std::string& q_text, const CliConfig& config,
                    std::ostream& out, std::ostream& err) {
  Validated v;
  if (int rc = validate_config(config, err, &v)) return rc;
  if (n < 0) {
    err << "error: --n must be nonnegative\n";
    return kUsageError;
  }
  PrecisionGuard guard(v.digits);
  try {
    EvalOptions opts;
    opts.precision = v.digits;
    opts.trunc = v.trunc;
    const Scalar p = eval_expression(parse_expression(p_text), opts);
    const Scalar q = eval_expression(parse_expression(q_text), opts);
    if (p.is_zero() && q.is_zero()) {
      throw DomainError("the degenerate base p = q = 0 is excluded");
    }
    const BasePair base{p, q};
    std::vector<std::vector<std::string>> rows;
    rows.reserve(static_cast<std::size_t>(n) + 1);
    for (long m = 0; m <= n; ++m) {
      std::vector<std::string> row;
      row.reserve(static_cast<std::size_t>(m) + 1);
      for (long k = 0; k <= m; ++k) {
        row.push_back(pq_binomial(m, k, base).str());
      }
      rows.push_back(std::move(row));
    }
    ordered_json doc;
    doc["command"] = "table";
    doc["kind"] = "binom";
    doc["n"] = std::to_string(n);
    doc["p"] = p.str();
    doc["q"] = q.str();
    ordered_json jrows = ordered_json::array();
    for (const auto& row : rows) jrows.push_back(row);
    doc["rows"] = std::move(jrows);
    if (!emit_json(doc, config, out, err)) return kUsageError;
    if (config.output != "json") {
      for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
          if (k > 0) out << " ";
          out << row[k];
        }
        out << "\n";
      }
    }
    return kOk;
  } catch (const ParseError& pe) {
    err << "parse error: " << pe.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace pqcalc
