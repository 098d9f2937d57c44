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

// States are expanded in batches of consecutive ids. Workers compute the
// successors of disjoint slices of a batch; a single thread then merges the
// slices in id order, so numbering and every derived output match a
// sequential breadth-first search exactly.

#include "firelink/explorer.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <istream>
#include <ostream>
#include <thread>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"
#include "absl/hash/hash.h"

namespace firelink {

namespace {

struct Words {
  const std::uint64_t* data;
  std::size_t size;

  template <typename H>
  friend H AbslHashValue(H h, const Words& w) {
    return H::combine_contiguous(std::move(h), w.data, w.size);
  }
};

std::size_t hash_words(const std::uint64_t* p, std::size_t n) {
  return absl::Hash<Words>{}(Words{p, n});
}

struct Probe {
  const std::uint64_t* data;
  std::size_t hash;
};

// Hash set of state ids whose keys live in the arena.
struct ArenaHash {
  using is_transparent = void;
  const std::vector<std::uint64_t>* arena;
  std::size_t width;
  std::size_t operator()(std::uint32_t id) const {
    return hash_words(arena->data() + static_cast<std::size_t>(id) * width, width);
  }
  std::size_t operator()(const Probe& p) const { return p.hash; }
};

struct ArenaEq {
  using is_transparent = void;
  const std::vector<std::uint64_t>* arena;
  std::size_t width;
  const std::uint64_t* at(std::uint32_t id) const {
    return arena->data() + static_cast<std::size_t>(id) * width;
  }
  bool operator()(std::uint32_t a, std::uint32_t b) const { return a == b; }
  bool operator()(std::uint32_t a, const Probe& b) const {
    return std::memcmp(at(a), b.data, width * sizeof(std::uint64_t)) == 0;
  }
  bool operator()(const Probe& a, std::uint32_t b) const { return (*this)(b, a); }
};

// Successors of one slice of a batch.
struct Slice {
  std::vector<Label> labels;
  std::vector<std::uint64_t> targets;  // width words per successor
  std::vector<std::size_t> hashes;
  std::vector<std::uint32_t> counts;   // successors per source state

  void clear() {
    labels.clear();
    targets.clear();
    hashes.clear();
    counts.clear();
  }
};

void expand_slice(const Network& net, const std::vector<std::uint64_t>& arena,
                  std::size_t width, StateId begin, StateId end, Slice& out, Scratch& scratch) {
  out.clear();
  for (StateId s = begin; s < end; ++s) {
    std::span<const std::uint64_t> src(arena.data() + static_cast<std::size_t>(s) * width, width);
    std::uint32_t count = 0;
    net.for_each_successor(src, scratch,
                           [&](const Label& l, std::span<const std::uint64_t> next) {
                             out.labels.push_back(l);
                             out.targets.insert(out.targets.end(), next.begin(), next.end());
                             out.hashes.push_back(hash_words(next.data(), width));
                             ++count;
                           });
    out.counts.push_back(count);
  }
}

}  // namespace

ExplorationResult explore(const Network& net, const ExploreOptions& options) {
  if (options.max_states == 0 || options.max_transitions == 0) {
    throw std::invalid_argument("explore: caps must be positive");
  }
  const auto started = std::chrono::steady_clock::now();
  const std::size_t width = net.width();
  const int workers = std::max(1, options.workers);

  ExplorationResult r;
  r.width = width;
  auto& arena = r.states;

  ArenaHash hasher{&arena, width};
  ArenaEq eq{&arena, width};
  absl::flat_hash_set<std::uint32_t, ArenaHash, ArenaEq> seen(1024, hasher, eq);

  absl::flat_hash_map<Label, LabelId> label_ids;
  std::vector<char> label_terminates;
  Lts& lts = r.lts;
  lts.resize(0);

  auto intern_label = [&](const Label& l) {
    auto [it, inserted] = label_ids.try_emplace(l, 0);
    if (inserted) {
      it->second = lts.intern(render_label(l));
      if (label_terminates.size() <= it->second) label_terminates.resize(it->second + 1, 0);
      label_terminates[it->second] = l.gate() == Gate::kTerminated;
    }
    return it->second;
  };

  auto add_state = [&](const std::uint64_t* words, StateId parent, LabelId via,
                       std::uint32_t depth) {
    auto id = static_cast<StateId>(r.parent.size());
    arena.insert(arena.end(), words, words + width);
    r.parent.push_back(parent);
    r.parent_label.push_back(via);
    r.depth.push_back(depth);
    seen.insert(id);
    return id;
  };

  {
    auto init = net.initial();
    add_state(init.data(), kNoState, 0, 0);
    lts.set_initial(0);
  }

  std::vector<Slice> slices(workers);
  std::vector<Scratch> scratches(workers);
  std::vector<std::pair<LabelId, StateId>> edges;
  bool stop = false;

  StateId head = 0;
  while (!stop && head < r.parent.size()) {
    const auto available = static_cast<StateId>(r.parent.size());
    const StateId batch = std::max<StateId>(256, 2048u * static_cast<StateId>(workers));
    const StateId end = std::min<StateId>(available, head + batch);
    const StateId per = (end - head + workers - 1) / workers;

    if (workers == 1) {
      expand_slice(net, arena, width, head, end, slices[0], scratches[0]);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) {
        StateId b = std::min<StateId>(end, head + per * w);
        StateId e = std::min<StateId>(end, b + per);
        pool.emplace_back([&, w, b, e] {
          expand_slice(net, arena, width, b, e, slices[w], scratches[w]);
        });
      }
      for (auto& t : pool) t.join();
    }

    StateId src = head;
    for (int w = 0; w < workers && !stop; ++w) {
      const Slice& sl = slices[w];
      std::size_t k = 0;
      for (std::uint32_t count : sl.counts) {
        bool whole = true;
        edges.clear();
        for (std::uint32_t i = 0; i < count; ++i, ++k) {
          LabelId lid = intern_label(sl.labels[k]);
          const std::uint64_t* words = sl.targets.data() + k * width;
          auto it = seen.find(Probe{words, sl.hashes[k]});
          StateId dst;
          if (it != seen.end()) {
            dst = *it;
          } else if (r.parent.size() < options.max_states) {
            dst = add_state(words, src, lid, r.depth[src] + 1);
          } else {
            whole = false;
            r.truncated = true;
            continue;
          }
          auto edge = std::make_pair(lid, dst);
          if (std::find(edges.begin(), edges.end(), edge) == edges.end()) edges.push_back(edge);
        }
        if (lts.num_transitions() + edges.size() > options.max_transitions) {
          r.truncated = true;
          stop = true;
          break;
        }
        for (auto [lid, dst] : edges) lts.add_transition(src, lid, dst);

        if (whole) {
          if (edges.empty()) {
            r.deadlocks.push_back(src);
          } else if (std::all_of(edges.begin(), edges.end(), [&](const auto& e) {
                       return label_terminates[e.first] && e.second == src;
                     })) {
            r.terminated.push_back(src);
          }
        }
        ++src;
      }
    }
    head = src;
  }

  lts.resize(r.parent.size());
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return r;
}

Trace shortest_trace(const ExplorationResult& r, StateId target) {
  if (target >= r.parent.size()) throw std::out_of_range("shortest_trace: unknown state");
  Trace t;
  for (StateId s = target; r.parent[s] != kNoState; s = r.parent[s]) {
    t.push_back(r.lts.label_text(r.parent_label[s]));
  }
  std::reverse(t.begin(), t.end());
  return t;
}

GlobalState replay_trace(const Network& net, const Trace& t) {
  GlobalState cur = net.initial();
  Scratch scratch;
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<GlobalState> targets;
    net.for_each_successor(cur, scratch, [&](const Label& l, std::span<const std::uint64_t> next) {
      if (render_label(l) != t[i]) return;
      GlobalState g(next.begin(), next.end());
      if (std::find(targets.begin(), targets.end(), g) == targets.end()) {
        targets.push_back(std::move(g));
      }
    });
    if (targets.empty()) throw ReplayError(i, "label '" + t[i] + "' is not enabled");
    if (targets.size() > 1) {
      throw ReplayError(i, "label '" + t[i] + "' leads to " + std::to_string(targets.size()) +
                               " different states");
    }
    cur = std::move(targets.front());
  }
  return cur;
}

void write_trace(const Trace& t, std::ostream& out) {
  for (const auto& l : t) out << l << '\n';
}

Trace read_trace(std::istream& in) {
  Trace t;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    t.push_back(line);
  }
  return t;
}

}  // namespace firelink
