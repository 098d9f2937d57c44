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

#ifndef FIRELINK_LTS_HPP_
#define FIRELINK_LTS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/container/flat_hash_map.h"

namespace firelink {

using StateId = std::uint32_t;
using LabelId = std::uint32_t;

struct Transition {
  StateId src = 0;
  LabelId label = 0;
  StateId dst = 0;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// An explicit labelled transition system over textual labels.
///
/// Label texts are interned; transitions refer to them by LabelId. Built once,
/// then shared read-only.
class Lts {
 public:
  explicit Lts(std::size_t num_states = 1, StateId initial = 0);

  StateId initial() const { return initial_; }
  std::size_t num_states() const { return num_states_; }
  std::size_t num_transitions() const { return transitions_.size(); }
  std::size_t num_labels() const { return labels_.size(); }

  const std::vector<Transition>& transitions() const { return transitions_; }
  const std::string& label_text(LabelId id) const { return labels_[id]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Interns `text`, returning its id.
  LabelId intern(std::string_view text);
  /// The id of `text`, or -1 if it never occurs.
  std::int64_t find_label(std::string_view text) const;

  void set_initial(StateId s) { initial_ = s; }
  StateId add_state() { return static_cast<StateId>(num_states_++); }
  void resize(std::size_t num_states) { num_states_ = num_states; }
  void add_transition(StateId src, LabelId label, StateId dst) {
    transitions_.push_back({src, label, dst});
  }
  void add_transition(StateId src, std::string_view label, StateId dst) {
    add_transition(src, intern(label), dst);
  }
  void reserve_transitions(std::size_t n) { transitions_.reserve(n); }

  /// Sorts transitions by (src, label text, dst) and drops duplicate triples.
  void canonicalize();

  /// Throws std::invalid_argument naming the first violated invariant.
  void validate() const;

  /// Label ids ordered by their text; rank[id] is the position of id.
  std::vector<std::uint32_t> label_ranks() const;

 private:
  std::size_t num_states_;
  StateId initial_;
  std::vector<Transition> transitions_;
  std::vector<std::string> labels_;
  absl::flat_hash_map<std::string, LabelId> label_index_;
};

/// Compressed successor lists of an Lts, ordered as in lts.transitions().
class Adjacency {
 public:
  Adjacency() = default;
  explicit Adjacency(const Lts& lts, bool reverse = false);

  std::span<const Transition> out(StateId s) const {
    return {edges_.data() + offsets_[s], edges_.data() + offsets_[s + 1]};
  }
  std::size_t degree(StateId s) const { return offsets_[s + 1] - offsets_[s]; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Transition> edges_;
};

}  // namespace firelink

#endif  // FIRELINK_LTS_HPP_
