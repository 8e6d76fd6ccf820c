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

#ifndef PQCALC_CLI_HPP
#define PQCALC_CLI_HPP

#include <ostream>
#include <string>

namespace pqcalc {

/// Options shared by every command.  Numeric text fields are parsed (and
/// validated) by the commands so that a bad flag value reports through the
/// same usage-error path as a bad positional argument.
struct CliConfig {
  long precision_digits = 50;   // decimal digits; at least 10
  std::string tol = "1e-30";    // relative comparison tolerance, > 0
  long max_terms = 100000;      // series/product truncation cap, at least 1
  unsigned long long seed = 7;  // sampling seed for verify
  std::string output = "text";  // "text" or "json"
  std::string json_path;        // also write the JSON document here
};

/// Exit codes shared by all commands: 0 success / all pass, 1 verification
/// failure, 2 usage or parse error, 3 domain / divergence error.  Commands
/// print results to `out` and diagnostics to `err`.

/// Evaluate a DSL expression and print the value (exact rational form when
/// the computation stayed exact, otherwise a decimal at the configured
/// precision).
int cmd_eval(const std::string& expr_text, const CliConfig& config,
             std::ostream& out, std::ostream& err);

/// Verify one registered identity (or "all") over `grid` seeded samples
/// per identity.  Text mode prints one summary line per identity plus a
/// total; JSON mode prints (and/or writes) the full report document.
int cmd_verify(const std::string& target, long grid, const CliConfig& config,
               std::ostream& out, std::ostream& err);

/// Convert between classical and twin-basic series specs, structurally.
///   pq2q: a Phi call with s = r - 1 collapses to a phi call.
///   q2pq: a phi call lifts to a Phi call; `lift` scales every parameter
///         alpha to the doublet (mu, mu*alpha) and `lift_base` (defaults to
///         `lift`) scales the base to (lambda, lambda*q); the argument is
///         rescaled so the two series agree term by term.
int cmd_convert(const std::string& direction, const std::string& expr_text,
                const std::string& lift, const std::string& lift_base,
                const CliConfig& config, std::ostream& out, std::ostream& err);

/// Print rows m = 0..n of the twin-basic binomial triangle at base (p, q);
/// p and q are DSL expressions.
int cmd_table_binom(long n, const std::string& p_text,
                    const std::string& q_text, const CliConfig& config,
                    std::ostream& out, std::ostream& err);

}  // namespace pqcalc

#endif  // PQCALC_CLI_HPP
