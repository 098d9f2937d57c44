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

#include "firelink/network.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "firelink/bisim.hpp"
#include "firelink/explorer.hpp"
#include "firelink/scenario.hpp"
#include "oracles.hpp"

namespace firelink {
namespace {

// A process given by an explicit transition table.
class Table final : public Process {
 public:
  Table(std::string name, std::multimap<std::uint64_t, Step> table)
      : name_(std::move(name)), table_(std::move(table)) {}
  std::string name() const override { return name_; }
  std::uint64_t initial() const override { return 0; }
  void step(std::uint64_t s, std::vector<Step>& out) const override {
    auto [lo, hi] = table_.equal_range(s);
    for (auto it = lo; it != hi; ++it) out.push_back(it->second);
  }
  std::string describe(std::uint64_t s) const override { return name_ + std::to_string(s); }

 private:
  std::string name_;
  std::multimap<std::uint64_t, Step> table_;
};

const Label kA(Gate::kPcInd, {Offer::node(NodeId{0})});
const Label kB(Gate::kPcInd, {Offer::node(NodeId{1})});

std::shared_ptr<const Process> table(std::multimap<std::uint64_t, Step> t) {
  return std::make_shared<Table>("T", std::move(t));
}

std::set<std::pair<std::string, GlobalState>> edges(const Network& net, const GlobalState& s) {
  std::set<std::pair<std::string, GlobalState>> out;
  for (const auto& st : net.successors(s)) out.emplace(render_label(st.label), st.next);
  return out;
}

TEST(Network, TauInterleavesWithOthersFrozen) {
  auto p = table({{0, {Label::tau(), 1}}});
  auto q = table({{0, {kA, 1}}});
  Network net({p, q}, Expr::par(GateSet{Gate::kPcInd}, {Expr::leaf(0), Expr::leaf(1)}));
  EXPECT_EQ(edges(net, net.initial()),
            (std::set<std::pair<std::string, GlobalState>>{{"i", {1, 0}}}));
}

TEST(Network, SyncNeedsEveryChildAndMatchingOffers) {
  auto p = table({{0, {kA, 1}}, {0, {kB, 2}}});
  auto q = table({{0, {kA, 5}}});
  Network net({p, q}, Expr::par(GateSet{Gate::kPcInd}, {Expr::leaf(0), Expr::leaf(1)}));
  EXPECT_EQ(edges(net, net.initial()),
            (std::set<std::pair<std::string, GlobalState>>{{"PCIND !0", {1, 5}}}));
  Network free({p, q}, Expr::par(GateSet{}, {Expr::leaf(0), Expr::leaf(1)}));
  EXPECT_EQ(free.successors(free.initial()).size(), 3u);
}

TEST(Network, HidingTurnsGatesIntoTau) {
  auto p = table({{0, {kA, 1}}});
  Network net({p}, Expr::hide(GateSet{Gate::kPcInd}, Expr::leaf(0)));
  auto s = net.successors(net.initial());
  ASSERT_EQ(s.size(), 1u);
  EXPECT_TRUE(s[0].label.is_tau());
}

TEST(Network, RejectsBadStructure) {
  auto p = table({});
  EXPECT_THROW(Network({p, p}, Expr::leaf(0)), std::invalid_argument);
  EXPECT_THROW(Network({p}, Expr::leaf(1)), std::invalid_argument);
  EXPECT_THROW(Expr::par(GateSet{Gate::kTau}, {Expr::leaf(0)}), std::invalid_argument);
}

// A finished application whose transaction gates are closed off has exactly
// one state, carrying the TERMINATED self-loop.
TEST(Network, DoneApplicationInAClosedContext) {
  auto appli = std::make_shared<AppliProcess>(NodeId{0}, 2, AppliProfile{});
  auto stop = table({{0, {Label::terminated(), 0}}});
  Network net({appli, stop},
              Expr::par(gates::kTransAppli | gates::kTermination, {Expr::leaf(0), Expr::leaf(1)}));
  auto r = explore(net);
  EXPECT_EQ(r.lts.num_states(), 1u);
  ASSERT_EQ(r.lts.num_transitions(), 1u);
  EXPECT_EQ(r.lts.label_text(r.lts.transitions()[0].label), "TERMINATED");
  EXPECT_TRUE(r.deadlocks.empty());
  EXPECT_EQ(r.terminated, std::vector<StateId>{0});
}

// The composition agrees with brute-force enumeration of leaf-move tuples,
// on the initial state and on a prefix of the reachable states.
TEST(Network, AgreesWithProductEnumeration) {
  for (const char* name : {"s1_n2_b1_ok", "s3_n2_b2_ko", "s2_n3_b1_ok"}) {
    auto config = *find_scenario(builtin_catalog(), name);
    Network net = make_main(config);
    ExploreOptions o;
    o.max_states = 3000;
    auto r = explore(net, o);
    for (StateId s = 0; s < std::min<std::size_t>(r.lts.num_states(), 600); ++s) {
      GlobalState g(r.state(s).begin(), r.state(s).end());
      ASSERT_EQ(edges(net, g), oracle::product_successors(net, config.nodes, g))
          << name << " state " << s << "\n" << net.describe(g);
    }
  }
}

TEST(Network, InitialSuccessorCounts) {
  ScenarioConfig c;
  c.budget = 1;
  c.faults = Faults::none();
  Network s1 = make_main(c);
  EXPECT_EQ(oracle::product_successors(s1, 2, s1.initial()).size(), 1u);
  EXPECT_EQ(s1.successors(s1.initial()).size(), 1u);
  c.kind = ScenarioKind::kS2;
  Network s2 = make_main(c);
  EXPECT_EQ(oracle::product_successors(s2, 2, s2.initial()).size(), 2u);
  EXPECT_EQ(s2.successors(s2.initial()).size(), 2u);
}

TEST(Network, HidingUpperGatesLeavesOnlyBusActions) {
  auto c = *find_scenario(builtin_catalog(), "s1_n2_b1_ok");
  c.hide_upper = true;
  auto r = explore(make_main(c));
  for (const auto& text : r.lts.labels()) {
    EXPECT_NE(text.rfind("LD", 0), 0u) << text;
    EXPECT_NE(text.rfind("TD", 0), 0u) << text;
  }
  auto plain = explore(make_main(*find_scenario(builtin_catalog(), "s1_n2_b1_ok")));
  EXPECT_EQ(r.lts.num_states(), plain.lts.num_states());
}

TEST(Permute, IdentityAndErrors) {
  Network net = make_main(*find_scenario(builtin_catalog(), "s1_n2_b1_ok"));
  std::vector<int> id(net.width());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  Network same = net.permute(id);
  EXPECT_EQ(same.root().to_string(), net.root().to_string());
  EXPECT_EQ(edges(same, same.initial()), edges(net, net.initial()));
  EXPECT_THROW(net.permute({0, 1}), std::invalid_argument);
  auto dup = id;
  dup[1] = 0;
  EXPECT_THROW(net.permute(dup), std::invalid_argument);
}

TEST(Permute, SwappingNodesGivesABisimilarSystem) {
  for (const char* name : {"s2_n2_b1_ok", "s2_n2_b1_ko"}) {
    Network net = make_main(*find_scenario(builtin_catalog(), name));
    Network swapped = net.permute({3, 4, 5, 0, 1, 2, 6});
    EXPECT_EQ(swapped.leaf(0).name(), "Link1");
    auto a = explore(net);
    auto b = explore(swapped);
    EXPECT_EQ(a.lts.num_states(), b.lts.num_states());
    EXPECT_EQ(a.lts.num_transitions(), b.lts.num_transitions());
    EXPECT_TRUE(bisimilar(a.lts, b.lts)) << name;
  }
}

}  // namespace
}  // namespace firelink
