// Copyright 2026 The catprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "catprob/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char **argv) {
  using catprob::cli::Format;
  catprob::cli::RunConfig config;

  CLI::App app{"Conditional probability in the classical and quantum settings"};
  app.set_version_flag("--version", CATPROB_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out;
  double tol_inv = 0, tol_triangle = 0;
  auto *seed_opt = app.add_option("--seed", seed, "RNG seed for probes and samplers (default 0)");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out, "Write the report to this file instead of stdout");
  auto *inv_opt = app.add_option("--tol-inv", tol_inv, "Invertibility threshold for marginals");
  auto *tri_opt = app.add_option("--tol-triangle", tol_triangle, "Allowed triangle residual");

  auto *examples = app.add_subcommand("examples", "Run a worked example");
  examples->add_option("name", config.example, "hair, country or bomb")
      ->required()
      ->check(CLI::IsMember({"hair", "country", "bomb"}));

  std::string model, scenario, result;
  int probes = 0;
  auto *classical = app.add_subcommand("classical-condition", "Condition a classical model");
  classical->add_option("--model", model, "Model file")->required();
  classical->add_flag("--ntest", config.ntest, "Condition on the model's n-test");

  auto *quantum = app.add_subcommand("quantum-condition", "Condition a quantum scenario");
  quantum->add_option("--scenario", scenario, "Scenario file")->required();
  auto *probes_opt = quantum->add_option("--probes", probes, "Random probe pairs")
                         ->check(CLI::NonNegativeNumber);

  auto *verify = app.add_subcommand("verify", "Re-check a stored conditioning report");
  verify->add_option("--result", result, "Report file")->required();

  app.add_subcommand("bomb", "Run the bomb tester");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  if (!model.empty()) {
    config.input_path = model;
  } else if (!scenario.empty()) {
    config.input_path = scenario;
  } else if (!result.empty()) {
    config.input_path = result;
  }
  if (*seed_opt) {
    config.seed = seed;
  }
  if (*probes_opt) {
    config.probes = probes;
  }
  if (*inv_opt) {
    config.tol_invertible = tol_inv;
  }
  if (*tri_opt) {
    config.tol_triangle = tol_triangle;
  }
  config.format = format == "json" ? Format::Json : Format::Text;

  catprob::cli::RunResult r = catprob::cli::run(config);
  if (out.empty()) {
    std::cout << r.report;
  } else {
    std::ofstream file(out);
    if (!file || !(file << r.report)) {
      std::cerr << "cannot write " << out << "\n";
      return 1;
    }
  }
  if (r.exit_code != 0 && !out.empty()) {
    std::cerr << "failed with exit code " << r.exit_code << ", see " << out << "\n";
  }
  return r.exit_code;
}
