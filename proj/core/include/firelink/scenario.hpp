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

// Application scenarios, the catalog of named configurations, and the
// builders that wire links, transaction layers, applications and the bus
// into one network.
//
//   S1  node 0 sends `budget` addressed requests to node 1; the others only
//       respond.
//   S2  every node i sends `budget` addressed requests to node (i+1) mod n.
//   S3  node 0 sends `budget` requests, each either broadcast or addressed
//       to node 1; node 1 may answer with a concatenated response (HOLD).

#ifndef FIRELINK_SCENARIO_HPP_
#define FIRELINK_SCENARIO_HPP_

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "firelink/bus.hpp"
#include "firelink/network.hpp"
#include "firelink/upper.hpp"

namespace firelink {

enum class ScenarioKind : std::uint8_t { kS1, kS2, kS3 };

std::string to_string(ScenarioKind k);
std::optional<ScenarioKind> scenario_from_string(const std::string& s);
std::optional<Variant> variant_from_string(const std::string& s);

struct ScenarioConfig {
  std::string name;
  ScenarioKind kind = ScenarioKind::kS1;
  int nodes = 2;
  int budget = 1;
  Variant variant = Variant::kOk;
  Faults faults;
  bool hide_upper = false;
  Domains domains;

  /// Throws std::invalid_argument on out-of-range parameters.
  void validate() const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Canonical catalog name, e.g. "s3_n2_b2_ko".
std::string catalog_name(ScenarioKind k, int nodes, int budget, Variant v);

/// The 22 built-in configurations: 11 applications times {ok, ko}.
const std::vector<ScenarioConfig>& builtin_catalog();

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Catalog text: one configuration per line,
///   name  scenario  nodes  budget  variant  faults
/// where faults is `all`, `none`, or a comma list of dest,corrupt,drop,dummy.
/// Blank lines and `#` comments are ignored. Throws CatalogError.
std::vector<ScenarioConfig> parse_catalog(std::istream& in);
std::vector<ScenarioConfig> read_catalog_file(const std::string& path);
std::string format_catalog(const std::vector<ScenarioConfig>& catalog);

std::string faults_to_string(const Faults& f);
std::optional<Faults> faults_from_string(const std::string& s);

/// Looks a name up; nullptr if absent.
const ScenarioConfig* find_scenario(const std::vector<ScenarioConfig>& catalog,
                                    const std::string& name);

/// The application of node `id` under `config`.
AppliProfile appli_profile(const ScenarioConfig& config, NodeId id);

/// Link || Trans || Appli of one node, as an expression over leaf indices
/// `first`, `first+1`, `first+2`.
Expr node_expr(int first, bool hide_upper);

/// Leaves in order Link0, Trans0, Appli0, Link1, ..., Bus.
Network make_main(const ScenarioConfig& config);

/// One node on its own (three leaves), for unit testing.
Network make_node(NodeId id, const ScenarioConfig& config);

}  // namespace firelink

#endif  // FIRELINK_SCENARIO_HPP_
