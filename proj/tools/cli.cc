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

#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "firelink/aut.hpp"
#include "firelink/bisim.hpp"
#include "firelink/checker.hpp"
#include "firelink/explorer.hpp"
#include "firelink/formula.hpp"

namespace firelink::cli {

namespace {

class Report {
 public:
  template <typename T>
  void field(const std::string& key, const T& value) {
    text_ << key << ": " << value << '\n';
  }
  std::string str() const { return text_.str(); }

 private:
  std::ostringstream text_;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

bool write_trace_file(const std::string& path, const Trace& t, std::ostream& err) {
  std::ofstream f(path);
  write_trace(t, f);
  if (!f) {
    err << "firelink: cannot write trace " << path << '\n';
    return false;
  }
  return true;
}

}  // namespace

std::string list_scenarios(const std::vector<ScenarioConfig>& catalog) {
  std::ostringstream out;
  out << std::left << std::setw(14) << "name" << std::setw(10) << "scenario" << std::setw(4) << "n"
      << std::setw(8) << "budget" << std::setw(9) << "variant" << "faults\n";
  for (const auto& c : catalog) {
    out << std::setw(14) << c.name << std::setw(10) << to_string(c.kind) << std::setw(4) << c.nodes
        << std::setw(8) << c.budget << std::setw(9) << to_string(c.variant)
        << faults_to_string(c.faults) << '\n';
  }
  return out.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const ScenarioConfig& sc = config.scenario;
  std::vector<NamedFormula> properties;
  if (!config.check.empty() && config.check != "deadlock") {
    try {
      properties = read_properties_file(config.check);
    } catch (const FormulaError& e) {
      err << "firelink: " << e.what() << '\n';
      return kUsage;
    }
  }
  std::optional<Lts> reference;
  if (!config.compare_path.empty()) {
    try {
      reference = aut_read_file(config.compare_path);
    } catch (const std::exception& e) {
      err << "firelink: " << e.what() << '\n';
      return kUsage;
    }
  }

  Network net = make_main(sc);
  ExploreOptions options;
  options.max_states = config.max_states;
  options.max_transitions = config.max_transitions;
  options.workers = config.workers;
  ExplorationResult r = explore(net, options);

  Report rep;
  rep.field("scenario", sc.name);
  rep.field("variant", to_string(sc.variant));
  rep.field("faults", faults_to_string(sc.faults));
  rep.field("hide_upper", yes_no(sc.hide_upper));
  rep.field("states", r.lts.num_states());
  rep.field("transitions", r.lts.num_transitions());
  rep.field("deadlocks", r.deadlocks.size());
  rep.field("terminated", r.terminated.size());
  rep.field("truncated", yes_no(r.truncated));
  if (config.timing) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << r.seconds;
    rep.field("seconds", s.str());
  }

  int code = kPass;
  auto emit = [&]() {
    if (config.report_path.empty()) {
      out << rep.str();
      return code;
    }
    std::ofstream f(config.report_path);
    f << rep.str();
    if (!f) {
      err << "firelink: cannot write report " << config.report_path << '\n';
      return static_cast<int>(kUsage);
    }
    return code;
  };

  if (r.truncated) {
    err << "firelink: state or transition cap reached; results are incomplete\n";
    code = kCapExceeded;
    return emit();
  }

  r.lts.canonicalize();
  Lts output = config.minimize ? minimize(r.lts) : r.lts;
  if (config.minimize) {
    rep.field("minimized_states", output.num_states());
    rep.field("minimized_transitions", output.num_transitions());
  }
  if (!config.aut_path.empty()) {
    try {
      aut_write_file(output, config.aut_path);
    } catch (const std::exception& e) {
      err << "firelink: cannot write " << config.aut_path << ": " << e.what() << '\n';
      return kUsage;
    }
  }

  std::optional<Trace> counterexample;
  if (config.check == "deadlock") {
    const bool ok = r.deadlocks.empty();
    rep.field("deadlock_free", yes_no(ok));
    if (!ok) {
      counterexample = shortest_trace(r, r.deadlocks.front());
      rep.field("trace_length", counterexample->size());
      code = kPropertyFailed;
    }
  }
  for (const auto& p : properties) {
    Verdict v = check(r.lts, p.formula);
    rep.field("property " + p.name, v.holds ? "holds" : "fails");
    if (!v.holds) {
      code = kPropertyFailed;
      if (v.has_trace && !counterexample) {
        counterexample = v.trace;
        rep.field("trace_length", v.trace.size());
      }
    }
  }
  if (reference) {
    const bool same = bisimilar(r.lts, *reference);
    rep.field("bisimilar", yes_no(same));
    if (!same) code = kPropertyFailed;
  }
  if (counterexample && !config.trace_path.empty() &&
      !write_trace_file(config.trace_path, *counterexample, err)) {
    return kUsage;
  }
  return emit();
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"firelink: explore and verify the IEEE 1394 link-layer model"};
  app.set_version_flag("--version", "firelink 0.1.0");

  RunConfig rc;
  std::string scenario, variant, catalog_path;
  bool list = false, no_faults = false, hide_upper = false;
  app.add_flag("--list", list, "Print the scenario catalog and exit");
  app.add_option("--catalog", catalog_path, "Read the catalog from a file instead of the built-in one")
      ->check(CLI::ExistingFile);
  app.add_option("--scenario", scenario, "Catalog name, e.g. s3_n2_b2_ko");
  app.add_option("--variant", variant, "Override the transaction layer variant")
      ->check(CLI::IsMember({"ok", "ko"}));
  app.add_flag("--no-faults", no_faults, "Disable every bus fault");
  app.add_flag("--hide-upper", hide_upper, "Hide the LD*/TD* gates before composing with the bus");
  app.add_option("--aut", rc.aut_path, "Write the explored (or minimized) LTS here");
  app.add_option("--trace", rc.trace_path, "Write a counterexample trace here");
  app.add_option("--report", rc.report_path, "Write the report here instead of stdout");
  app.add_option("--check", rc.check, "'deadlock' or a property file");
  app.add_flag("--minimize", rc.minimize, "Reduce modulo strong bisimulation before writing --aut");
  app.add_option("--compare", rc.compare_path, "Check strong bisimilarity against this AUT file");
  app.add_option("--max-states", rc.max_states, "State cap")->capture_default_str()->check(
      CLI::PositiveNumber);
  app.add_option("--max-transitions", rc.max_transitions, "Transition cap")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", rc.workers, "Successor threads; output does not depend on it")
      ->capture_default_str()
      ->check(CLI::Range(1, 256));
  app.add_flag("--timing", rc.timing, "Add wall time to the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostream& stream = e.get_exit_code() == 0 ? out : err;
    app.exit(e, stream, stream);
    return e.get_exit_code() == 0 ? kPass : kUsage;
  }

  std::vector<ScenarioConfig> catalog;
  try {
    catalog = catalog_path.empty() ? builtin_catalog() : read_catalog_file(catalog_path);
  } catch (const CatalogError& e) {
    err << "firelink: " << e.what() << '\n';
    return kUsage;
  }
  if (list) {
    out << list_scenarios(catalog);
    return kPass;
  }
  if (scenario.empty()) {
    err << "firelink: --scenario is required (see --list)\n";
    return kUsage;
  }
  const ScenarioConfig* found = find_scenario(catalog, scenario);
  if (!found) {
    err << "firelink: unknown scenario '" << scenario << "' (see --list)\n";
    return kUsage;
  }
  rc.scenario = *found;
  if (!variant.empty()) rc.scenario.variant = *variant_from_string(variant);
  if (no_faults) rc.scenario.faults = Faults::none();
  rc.scenario.hide_upper = rc.scenario.hide_upper || hide_upper;
  return run(rc, out, err);
}

}  // namespace firelink::cli
