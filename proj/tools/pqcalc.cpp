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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pqcalc/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"twin-basic (p,q)-hypergeometric calculator"};
  app.require_subcommand(1);

  pqcalc::CliConfig cfg;
  app.add_option("--precision", cfg.precision_digits,
                 "decimal digits carried by series evaluation (>= 10)")
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "relative comparison tolerance")
      ->capture_default_str();
  app.add_option("--max-terms", cfg.max_terms,
                 "series/product truncation cap (>= 1)")
      ->capture_default_str();
  app.add_option("--json", cfg.json_path,
                 "write the JSON report document to this path");
  app.add_option("--output", cfg.output, "output mode: text or json")
      ->capture_default_str();

  auto* eval = app.add_subcommand("eval", "evaluate a DSL expression");
  std::string eval_expr;
  eval->add_option("expr", eval_expr, "expression to evaluate")->required();
  eval->fallthrough();

  auto* verify = app.add_subcommand(
      "verify", "check a registered identity (or \"all\") on seeded samples");
  std::string target;
  long grid = 10;
  verify->add_option("target", target, "identity name or \"all\"")->required();
  verify->add_option("--grid", grid, "sample points per identity")
      ->capture_default_str();
  verify->add_option("--seed", cfg.seed, "sampling seed")
      ->capture_default_str();
  verify->fallthrough();

  auto* convert = app.add_subcommand(
      "convert", "convert between classical and twin-basic series specs");
  std::string direction;
  std::string convert_expr;
  std::string lift = "1";
  std::string lift_base;
  convert->add_option("--direction", direction, "q2pq or pq2q")->required();
  convert->add_option("expr", convert_expr, "expression to convert")
      ->required();
  convert
      ->add_option("--lift", lift,
                   "q2pq parameter scale mu: alpha -> (mu, mu*alpha)")
      ->capture_default_str();
  convert->add_option(
      "--lift-base", lift_base,
      "q2pq base scale lambda: q -> (lambda, lambda*q); defaults to --lift");
  convert->fallthrough();

  auto* table = app.add_subcommand("table", "print a coefficient table");
  std::string kind;
  long table_n = 6;
  std::string table_p = "1";
  std::string table_q = "1/2";
  table->add_option("kind", kind, "table kind (binom)")->required();
  table->add_option("--n", table_n, "last row index")->capture_default_str();
  table->add_option("--p", table_p, "base component p")->capture_default_str();
  table->add_option("--q", table_q, "base component q")->capture_default_str();
  table->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (eval->parsed()) {
    return pqcalc::cmd_eval(eval_expr, cfg, std::cout, std::cerr);
  }
  if (verify->parsed()) {
    return pqcalc::cmd_verify(target, grid, cfg, std::cout, std::cerr);
  }
  if (convert->parsed()) {
    return pqcalc::cmd_convert(direction, convert_expr, lift, lift_base, cfg,
                               std::cout, std::cerr);
  }
  if (table->parsed()) {
    if (kind != "binom") {
      std::cerr << "error: unknown table kind '" << kind << "'\n";
      return 2;
    }
    return pqcalc::cmd_table_binom(table_n, table_p, table_q, cfg, std::cout,
                                   std::cerr);
  }
  return 2;
}
