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

// Slow, obviously-correct reference implementations used to check the
// optimised ones. None of them share code with the library beyond the leaf
// processes and the Lts container.

#ifndef FIRELINK_TESTS_ORACLES_HPP_
#define FIRELINK_TESTS_ORACLES_HPP_

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "firelink/formula.hpp"
#include "firelink/lts.hpp"
#include "firelink/network.hpp"
#include "firelink/scenario.hpp"

namespace firelink::oracle {

using Edge = std::pair<std::string, GlobalState>;

/// Successors of a make_main() state by enumerating every tuple of leaf
/// moves (or stays) and keeping those whose participant set is exactly the
/// one the gate's synchronisation demands. Hiding is not supported.
std::set<Edge> product_successors(const Network& main_net, int nodes, const GlobalState& state);

struct DfsCounts {
  std::size_t states = 0;
  std::size_t transitions = 0;  // distinct (src, label text, dst)
  std::size_t sinks_without_termination = 0;
  std::size_t max_states_hit = 0;
};

/// Depth-first reachability over Network::successors with a std::map.
DfsCounts dfs_counts(const Network& net, std::size_t max_states = 5'000'000);

/// A random LTS with `states` states over `labels` label texts.
Lts random_lts(std::mt19937& rng, std::size_t states, std::size_t labels, double density);

/// Same LTS with states renamed by a random permutation.
Lts shuffle_states(const Lts& l, std::mt19937& rng);

/// Naive strong bisimilarity: refine the full relation on pairs until
/// every related pair matches every move.
bool naive_bisimilar(const Lts& a, const Lts& b);

/// Naive number of equivalence classes of the largest bisimulation of `l`.
std::size_t naive_class_count(const Lts& l);

/// Direct set-iteration semantics of formulas.
std::vector<char> naive_satisfying(const Lts& l, const Formula& f);

/// A random formula of bounded depth over the labels of `l`.
Formula random_formula(std::mt19937& rng, const Lts& l, int depth);

}  // namespace firelink::oracle

#endif  // FIRELINK_TESTS_ORACLES_HPP_
