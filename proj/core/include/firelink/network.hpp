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

// Parallel composition with multiway rendezvous and hiding.
//
// A network is a tree over leaf processes:
//
//   Par(G, c1 ... ck)  every label whose gate is in G needs all ck children
//                      to offer exactly that label; other labels interleave.
//   Hide(H, c)         labels of c whose gate is in H become `i`.
//
// The global state is the vector of leaf states.

#ifndef FIRELINK_NETWORK_HPP_
#define FIRELINK_NETWORK_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "firelink/label.hpp"
#include "firelink/process.hpp"

namespace firelink {

class Expr {
 public:
  enum class Kind : std::uint8_t { kLeaf, kPar, kHide };

  static Expr leaf(int index);
  static Expr par(GateSet sync, std::vector<Expr> children);
  static Expr hide(GateSet gates, Expr child);

  Kind kind() const { return kind_; }
  int leaf_index() const { return leaf_; }
  GateSet gates() const { return gates_; }
  const std::vector<Expr>& children() const { return children_; }

  /// Leaf indices in left-to-right order.
  std::vector<int> leaves() const;
  std::string to_string() const;

 private:
  friend class Network;
  Kind kind_ = Kind::kLeaf;
  int leaf_ = 0;
  GateSet gates_;
  std::vector<Expr> children_;
  int id_ = 0;  // pre-order position, assigned by Network
};

using GlobalState = std::vector<std::uint64_t>;

struct GlobalStep {
  Label label;
  GlobalState next;
};

/// Reusable per-thread buffers for Network::successors.
class Scratch {
 public:
  struct Update {
    std::uint32_t leaf;
    std::uint64_t state;
  };
  struct Move {
    Label label;
    std::uint32_t first;  // into updates
    std::uint32_t count;
  };

 private:
  friend class Network;
  std::vector<std::vector<Move>> per_expr;
  std::vector<Update> updates;
  std::vector<Step> leaf_steps;
  std::vector<std::uint32_t> order;
  std::vector<Move> fold, fold_next;
};

class Network {
 public:
  /// Throws std::invalid_argument unless every leaf index occurs exactly once.
  Network(std::vector<std::shared_ptr<const Process>> leaves, Expr root);

  std::size_t width() const { return leaves_.size(); }
  const Process& leaf(std::size_t i) const { return *leaves_[i]; }
  const Expr& root() const { return root_; }

  GlobalState initial() const;

  /// Calls visit(label, next) for every composed transition of `state`, in
  /// a fixed order. `next` is only valid during the call.
  template <typename Visit>
  void for_each_successor(std::span<const std::uint64_t> state, Scratch& scratch,
                          Visit&& visit) const {
    const auto& moves = compute(state, scratch);
    GlobalState next(state.begin(), state.end());
    for (const auto& m : moves) {
      for (std::uint32_t i = 0; i < m.count; ++i) {
        const auto& u = scratch.updates[m.first + i];
        next[u.leaf] = u.state;
      }
      visit(m.label, std::span<const std::uint64_t>(next));
      for (std::uint32_t i = 0; i < m.count; ++i) {
        const auto& u = scratch.updates[m.first + i];
        next[u.leaf] = state[u.leaf];
      }
    }
  }

  std::vector<GlobalStep> successors(std::span<const std::uint64_t> state) const;

  /// Leaf i of the result is leaf order[i] of this network. Children of every
  /// Par node are re-sorted by their smallest new leaf index, so the
  /// enumeration order follows the permutation.
  /// Throws std::invalid_argument if `order` is not a permutation of the leaves.
  Network permute(const std::vector<int>& order) const;

  std::string describe(std::span<const std::uint64_t> state) const;

 private:
  const std::vector<Scratch::Move>& compute(std::span<const std::uint64_t> state,
                                            Scratch& scratch) const;
  const std::vector<Scratch::Move>& evaluate(const Expr& e, std::span<const std::uint64_t> state,
                                             Scratch& scratch) const;
  int number(Expr& e, int next);

  std::vector<std::shared_ptr<const Process>> leaves_;
  Expr root_;
  int expr_count_ = 0;
};

}  // namespace firelink

#endif  // FIRELINK_NETWORK_HPP_
