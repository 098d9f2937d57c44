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

#include "firelink/lts.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace firelink {

Lts::Lts(std::size_t num_states, StateId initial) : num_states_(num_states), initial_(initial) {}

LabelId Lts::intern(std::string_view text) {
  auto it = label_index_.find(absl::string_view(text.data(), text.size()));
  if (it != label_index_.end()) return it->second;
  auto id = static_cast<LabelId>(labels_.size());
  labels_.emplace_back(text);
  label_index_.emplace(labels_.back(), id);
  return id;
}

std::int64_t Lts::find_label(std::string_view text) const {
  auto it = label_index_.find(absl::string_view(text.data(), text.size()));
  return it == label_index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::vector<std::uint32_t> Lts::label_ranks() const {
  std::vector<std::uint32_t> order(labels_.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return labels_[a] < labels_[b]; });
  std::vector<std::uint32_t> rank(labels_.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  return rank;
}

void Lts::canonicalize() {
  auto rank = label_ranks();
  auto key = [&](const Transition& t) { return std::tuple(t.src, rank[t.label], t.dst); };
  std::sort(transitions_.begin(), transitions_.end(),
            [&](const Transition& a, const Transition& b) { return key(a) < key(b); });
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
}

void Lts::validate() const {
  if (num_states_ == 0) throw std::invalid_argument("lts has no states");
  if (initial_ >= num_states_) {
    throw std::invalid_argument("initial state " + std::to_string(initial_) + " out of range");
  }
  for (const auto& t : transitions_) {
    if (t.src >= num_states_ || t.dst >= num_states_) {
      throw std::invalid_argument("transition endpoint out of range: (" + std::to_string(t.src) +
                                  ", " + std::to_string(t.dst) + ")");
    }
    if (t.label >= labels_.size()) throw std::invalid_argument("unknown label id");
  }
  std::vector<Transition> sorted = transitions_;
  std::sort(sorted.begin(), sorted.end(), [](const Transition& a, const Transition& b) {
    return std::tie(a.src, a.label, a.dst) < std::tie(b.src, b.label, b.dst);
  });
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate transition");
  }
}

Adjacency::Adjacency(const Lts& lts, bool reverse) {
  const auto n = lts.num_states();
  offsets_.assign(n + 1, 0);
  for (const auto& t : lts.transitions()) ++offsets_[(reverse ? t.dst : t.src) + 1];
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  edges_.resize(lts.num_transitions());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& t : lts.transitions()) {
    edges_[fill[reverse ? t.dst : t.src]++] = t;
  }
}

}  // namespace firelink
