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

#ifndef CATPROB_CLI_HPP
#define CATPROB_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace catprob::cli {

enum class Format { Text, Json };

struct RunConfig {
  // examples, classical-condition, quantum-condition, verify or bomb
  std::string subcommand;
  // hair, country or bomb, for `examples`
  std::string example;
  // --model, --scenario or --result
  std::optional<std::string> input_path;
  bool ntest = false;
  std::optional<int> probes;
  // When unset, a scenario's own seed is used, and 0 otherwise.
  std::optional<std::uint64_t> seed;
  Format format = Format::Text;
  std::optional<double> tol_invertible;
  std::optional<double> tol_triangle;
};

struct RunResult {
  // 0 success, 1 malformed input, 2 validation failure
  int exit_code = 0;
  std::string report;
};

RunResult run(const RunConfig &config);

int exit_code_for(std::string_view error_kind);

} // namespace catprob::cli

#endif // CATPROB_CLI_HPP
