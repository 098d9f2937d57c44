/*
 * Copyright 2026 The firelink Authors
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

#ifndef FIRELINK_TOOLS_CLI_HPP_
#define FIRELINK_TOOLS_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "firelink/scenario.hpp"

namespace firelink::cli {

enum ExitCode : int {
  kPass = 0,
  kPropertyFailed = 1,
  kUsage = 2,
  kCapExceeded = 3,
};

struct RunConfig {
  ScenarioConfig scenario;
  std::string aut_path;
  std::string trace_path;
  std::string report_path;
  std::string compare_path;
  /// "deadlock", a property file, or empty.
  std::string check;
  bool minimize = false;
  bool timing = false;
  std::size_t max_states = 2'000'000;
  std::size_t max_transitions = 100'000'000;
  int workers = 1;
};

/// One row per configuration: name, scenario, n, budget, variant, faults.
std::string list_scenarios(const std::vector<ScenarioConfig>& catalog);

/// Explores, checks and writes outputs; the report goes to `out` unless a
/// report path is set. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches. Returns an ExitCode.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace firelink::cli

#endif  // FIRELINK_TOOLS_CLI_HPP_
