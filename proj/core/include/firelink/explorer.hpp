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

// Breadth-first state-space generation, sink classification and traces.

#ifndef FIRELINK_EXPLORER_HPP_
#define FIRELINK_EXPLORER_HPP_

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "firelink/lts.hpp"
#include "firelink/network.hpp"

namespace firelink {

struct ExploreOptions {
  std::size_t max_states = 2'000'000;
  std::size_t max_transitions = 100'000'000;
  /// Threads computing successors. Results do not depend on this value.
  int workers = 1;
};

inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

struct ExplorationResult {
  Lts lts;
  /// Expanded sinks that do not offer TERMINATED.
  std::vector<StateId> deadlocks;
  /// Expanded states whose only transitions are TERMINATED self-loops.
  std::vector<StateId> terminated;
  /// A cap was hit: some states are unexpanded or miss successors, so an
  /// empty deadlock list proves nothing.
  bool truncated = false;
  double seconds = 0.0;

  /// BFS tree: parent[s] and the label of the edge parent[s] -> s.
  std::vector<StateId> parent;
  std::vector<LabelId> parent_label;
  std::vector<std::uint32_t> depth;

  /// Packed global states, `width` words each, indexed by StateId.
  std::vector<std::uint64_t> states;
  std::size_t width = 0;

  std::span<const std::uint64_t> state(StateId s) const {
    return {states.data() + static_cast<std::size_t>(s) * width, width};
  }
};

/// Explores `net` from its initial state. Throws std::invalid_argument if a
/// cap is zero.
ExplorationResult explore(const Network& net, const ExploreOptions& options = {});

/// A sequence of rendered labels starting at the initial state.
using Trace = std::vector<std::string>;

/// A minimum-length trace to `target` along the BFS tree.
/// Throws std::out_of_range if `target` is not a state of `r`.
Trace shortest_trace(const ExplorationResult& r, StateId target);

class ReplayError : public std::runtime_error {
 public:
  ReplayError(std::size_t step, const std::string& what)
      : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// Follows `t` from the initial state of `net`. Throws ReplayError when a
/// label is not enabled or leads to more than one distinct state.
GlobalState replay_trace(const Network& net, const Trace& t);

void write_trace(const Trace& t, std::ostream& out);
Trace read_trace(std::istream& in);

}  // namespace firelink

#endif  // FIRELINK_EXPLORER_HPP_
