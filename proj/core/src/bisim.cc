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

#include "firelink/bisim.hpp"

#include <algorithm>
#include <cstring>

#include "absl/container/flat_hash_set.h"
#include "absl/hash/hash.h"

namespace firelink {

namespace {

// Signatures live in one pool; the set stores (offset, length) slots and
// looks them up by content.
struct Pool {
  std::vector<std::uint64_t> words;
  std::vector<std::size_t> offset;  // per block, plus one past the end
};

struct SigView {
  const std::uint64_t* data;
  std::size_t size;

  template <typename H>
  friend H AbslHashValue(H h, const SigView& v) {
    return H::combine(H::combine_contiguous(std::move(h), v.data, v.size), v.size);
  }
};

struct SigHash {
  using is_transparent = void;
  const Pool* pool;
  SigView view(std::uint32_t b) const {
    return {pool->words.data() + pool->offset[b], pool->offset[b + 1] - pool->offset[b]};
  }
  std::size_t operator()(std::uint32_t b) const { return absl::Hash<SigView>{}(view(b)); }
  std::size_t operator()(const SigView& v) const { return absl::Hash<SigView>{}(v); }
};

struct SigEq {
  using is_transparent = void;
  const Pool* pool;
  SigView view(std::uint32_t b) const { return SigHash{pool}.view(b); }
  static bool same(const SigView& a, const SigView& b) {
    return a.size == b.size && std::memcmp(a.data, b.data, a.size * sizeof(std::uint64_t)) == 0;
  }
  bool operator()(std::uint32_t a, std::uint32_t b) const { return a == b; }
  bool operator()(std::uint32_t a, const SigView& b) const { return same(view(a), b); }
  bool operator()(const SigView& a, std::uint32_t b) const { return same(a, view(b)); }
};

}  // namespace

std::vector<std::uint32_t> bisimulation_blocks(const Lts& lts) {
  const std::size_t n = lts.num_states();
  Adjacency adj(lts);
  std::vector<std::uint32_t> block(n, 0), next(n);
  std::size_t count = 1;
  std::vector<std::uint64_t> sig;
  for (;;) {
    Pool pool;
    pool.offset.push_back(0);
    absl::flat_hash_set<std::uint32_t, SigHash, SigEq> index(n, SigHash{&pool}, SigEq{&pool});
    for (StateId s = 0; s < n; ++s) {
      sig.clear();
      for (const auto& t : adj.out(s)) {
        sig.push_back(static_cast<std::uint64_t>(t.label) << 32 | block[t.dst]);
      }
      std::sort(sig.begin(), sig.end());
      sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
      // The old block leads, so the new partition refines the old one.
      sig.insert(sig.begin(), block[s]);
      auto it = index.find(SigView{sig.data(), sig.size()});
      if (it != index.end()) {
        next[s] = *it;
        continue;
      }
      auto id = static_cast<std::uint32_t>(pool.offset.size() - 1);
      pool.words.insert(pool.words.end(), sig.begin(), sig.end());
      pool.offset.push_back(pool.words.size());
      index.insert(id);
      next[s] = id;
    }
    const std::size_t fresh = pool.offset.size() - 1;
    block.swap(next);
    if (fresh == count) break;
    count = fresh;
  }
  return block;
}

Lts minimize(const Lts& lts) {
  lts.validate();
  auto block = bisimulation_blocks(lts);
  std::uint32_t blocks = 0;
  for (auto b : block) blocks = std::max(blocks, b + 1);
  Lts q(blocks, block[lts.initial()]);
  for (const auto& text : lts.labels()) q.intern(text);
  for (const auto& t : lts.transitions()) q.add_transition(block[t.src], t.label, block[t.dst]);
  q.canonicalize();
  return q;
}

bool bisimilar(const Lts& a, const Lts& b) {
  a.validate();
  b.validate();
  const auto offset = static_cast<StateId>(a.num_states());
  Lts u(a.num_states() + b.num_states(), a.initial());
  for (const auto& t : a.transitions()) u.add_transition(t.src, a.label_text(t.label), t.dst);
  for (const auto& t : b.transitions()) {
    u.add_transition(offset + t.src, b.label_text(t.label), offset + t.dst);
  }
  auto block = bisimulation_blocks(u);
  return block[a.initial()] == block[offset + b.initial()];
}

}  // namespace firelink
