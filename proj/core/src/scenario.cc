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

#include "firelink/scenario.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "firelink/link.hpp"

namespace firelink {

std::string to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::kS1:
      return "S1";
    case ScenarioKind::kS2:
      return "S2";
    case ScenarioKind::kS3:
      return "S3";
  }
  return "?";
}

std::optional<ScenarioKind> scenario_from_string(const std::string& s) {
  if (s == "S1" || s == "s1") return ScenarioKind::kS1;
  if (s == "S2" || s == "s2") return ScenarioKind::kS2;
  if (s == "S3" || s == "s3") return ScenarioKind::kS3;
  return std::nullopt;
}

std::optional<Variant> variant_from_string(const std::string& s) {
  if (s == "ok") return Variant::kOk;
  if (s == "ko") return Variant::kKo;
  return std::nullopt;
}

void ScenarioConfig::validate() const {
  if (nodes < 2 || nodes > kMaxNodes) throw std::invalid_argument("nodes must be in [2, 7]");
  if (budget < 0 || budget > 255) throw std::invalid_argument("budget must be in [0, 255]");
  if (domains.headers == 0 || domains.data == 0 || domains.acks == 0 ||
      domains.headers > kMaxDomain || domains.data > kMaxDomain || domains.acks > kMaxDomain) {
    throw std::invalid_argument("payload domains must have 1..8 values");
  }
}

std::string catalog_name(ScenarioKind k, int nodes, int budget, Variant v) {
  std::string s = to_string(k);
  s[0] = 's';
  return s + "_n" + std::to_string(nodes) + "_b" + std::to_string(budget) + "_" + to_string(v);
}

const std::vector<ScenarioConfig>& builtin_catalog() {
  static const std::vector<ScenarioConfig> catalog = [] {
    std::vector<ScenarioConfig> out;
    for (auto kind : {ScenarioKind::kS1, ScenarioKind::kS2, ScenarioKind::kS3}) {
      for (int n : {2, 3}) {
        for (int b : {1, 2}) {
          // Eleven applications: the three-node S2 with two requests per
          // node is left out.
          if (kind == ScenarioKind::kS2 && n == 3 && b == 2) continue;
          for (auto v : {Variant::kOk, Variant::kKo}) {
            ScenarioConfig c;
            c.name = catalog_name(kind, n, b, v);
            c.kind = kind;
            c.nodes = n;
            c.budget = b;
            c.variant = v;
            out.push_back(c);
          }
        }
      }
    }
    return out;
  }();
  return catalog;
}

std::string faults_to_string(const Faults& f) {
  if (f == Faults{}) return "all";
  if (f == Faults::none()) return "none";
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  add(f.invalidate_dest, "dest");
  add(f.corrupt, "corrupt");
  add(f.drop, "drop");
  add(f.dummy, "dummy");
  return out;
}

std::optional<Faults> faults_from_string(const std::string& s) {
  if (s == "all") return Faults{};
  if (s == "none") return Faults::none();
  Faults f = Faults::none();
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "dest") {
      f.invalidate_dest = true;
    } else if (item == "corrupt") {
      f.corrupt = true;
    } else if (item == "drop") {
      f.drop = true;
    } else if (item == "dummy") {
      f.dummy = true;
    } else {
      return std::nullopt;
    }
  }
  return f;
}

std::vector<ScenarioConfig> parse_catalog(std::istream& in) {
  std::vector<ScenarioConfig> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name, kind, variant, faults;
    int n = 0, budget = 0;
    if (!(fields >> name)) continue;
    auto fail = [&](const std::string& why) {
      return CatalogError("catalog line " + std::to_string(lineno) + ": " + why);
    };
    if (!(fields >> kind >> n >> budget >> variant >> faults)) {
      throw fail("expected: name scenario nodes budget variant faults");
    }
    std::string extra;
    if (fields >> extra) throw fail("unexpected field '" + extra + "'");
    ScenarioConfig c;
    c.name = name;
    auto k = scenario_from_string(kind);
    if (!k) throw fail("unknown scenario '" + kind + "'");
    auto v = variant_from_string(variant);
    if (!v) throw fail("variant must be ok or ko");
    auto f = faults_from_string(faults);
    if (!f) throw fail("bad fault list '" + faults + "'");
    c.kind = *k;
    c.nodes = n;
    c.budget = budget;
    c.variant = *v;
    c.faults = *f;
    try {
      c.validate();
    } catch (const std::invalid_argument& e) {
      throw fail(e.what());
    }
    if (find_scenario(out, name)) throw fail("duplicate name '" + name + "'");
    out.push_back(c);
  }
  return out;
}

std::vector<ScenarioConfig> read_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog " + path);
  return parse_catalog(in);
}

std::string format_catalog(const std::vector<ScenarioConfig>& catalog) {
  std::string out;
  for (const auto& c : catalog) {
    out += c.name + " " + to_string(c.kind) + " " + std::to_string(c.nodes) + " " +
           std::to_string(c.budget) + " " + to_string(c.variant) + " " +
           faults_to_string(c.faults) + "\n";
  }
  return out;
}

const ScenarioConfig* find_scenario(const std::vector<ScenarioConfig>& catalog,
                                    const std::string& name) {
  for (const auto& c : catalog) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

AppliProfile appli_profile(const ScenarioConfig& config, NodeId id) {
  AppliProfile p;
  const int n = config.nodes;
  switch (config.kind) {
    case ScenarioKind::kS1:
      if (id.value == 0) {
        p.budget = config.budget;
        p.targets = {Dest::node(NodeId{1})};
      }
      break;
    case ScenarioKind::kS2:
      p.budget = config.budget;
      p.targets = {Dest::node(NodeId{static_cast<std::uint8_t>((id.value + 1) % n)})};
      break;
    case ScenarioKind::kS3:
      if (id.value == 0) {
        p.budget = config.budget;
        p.targets = {Dest::broadcast(), Dest::node(NodeId{1})};
      }
      if (id.value == 1) p.answers = {HoldRelease::kHold, HoldRelease::kRelease};
      break;
  }
  return p;
}

Expr node_expr(int first, bool hide_upper) {
  Expr upper = Expr::par(gates::kTransAppli | gates::kTermination,
                         {Expr::leaf(first + 1), Expr::leaf(first + 2)});
  Expr node = Expr::par(gates::kLinkTrans | gates::kTermination,
                        {Expr::leaf(first), std::move(upper)});
  if (hide_upper) return Expr::hide(gates::kUpper, std::move(node));
  return node;
}

namespace {

void append_node(std::vector<std::shared_ptr<const Process>>& leaves, NodeId id,
                 const ScenarioConfig& c) {
  leaves.push_back(std::make_shared<LinkProcess>(id, c.nodes, c.domains));
  leaves.push_back(std::make_shared<TransProcess>(id, c.nodes, c.variant, c.domains));
  leaves.push_back(
      std::make_shared<AppliProcess>(id, c.nodes, appli_profile(c, id), c.domains));
}

}  // namespace

Network make_node(NodeId id, const ScenarioConfig& config) {
  config.validate();
  std::vector<std::shared_ptr<const Process>> leaves;
  append_node(leaves, id, config);
  return Network(std::move(leaves), node_expr(0, config.hide_upper));
}

Network make_main(const ScenarioConfig& config) {
  config.validate();
  std::vector<std::shared_ptr<const Process>> leaves;
  std::vector<Expr> nodes;
  for (int i = 0; i < config.nodes; ++i) {
    append_node(leaves, NodeId{static_cast<std::uint8_t>(i)}, config);
    nodes.push_back(node_expr(3 * i, config.hide_upper));
  }
  leaves.push_back(std::make_shared<BusProcess>(config.nodes, config.faults, config.domains));
  Expr all_nodes = Expr::par(gates::kTermination, std::move(nodes));
  Expr root = Expr::par(gates::kPhy | gates::kTermination,
                        {std::move(all_nodes), Expr::leaf(3 * config.nodes)});
  return Network(std::move(leaves), std::move(root));
}

}  // namespace firelink
