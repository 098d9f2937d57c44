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

#include <algorithm>
#include <stdexcept>

namespace firelink {

Expr Expr::leaf(int index) {
  Expr e;
  e.kind_ = Kind::kLeaf;
  e.leaf_ = index;
  return e;
}

Expr Expr::par(GateSet sync, std::vector<Expr> children) {
  if (children.empty()) throw std::invalid_argument("par: no children");
  if (sync.contains(Gate::kTau)) throw std::invalid_argument("par: cannot synchronise on i");
  Expr e;
  e.kind_ = Kind::kPar;
  e.gates_ = sync;
  e.children_ = std::move(children);
  return e;
}

Expr Expr::hide(GateSet gates, Expr child) {
  Expr e;
  e.kind_ = Kind::kHide;
  e.gates_ = gates;
  e.children_.push_back(std::move(child));
  return e;
}

std::vector<int> Expr::leaves() const {
  if (kind_ == Kind::kLeaf) return {leaf_};
  std::vector<int> out;
  for (const auto& c : children_) {
    auto sub = c.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

namespace {

std::string gate_list(GateSet g) {
  std::string out;
  for (int i = 0; i < kGateCount; ++i) {
    if (!g.contains(static_cast<Gate>(i))) continue;
    if (!out.empty()) out += ",";
    out += gate_name(static_cast<Gate>(i));
  }
  return out;
}

}  // namespace

std::string Expr::to_string() const {
  switch (kind_) {
    case Kind::kLeaf:
      return "#" + std::to_string(leaf_);
    case Kind::kHide:
      return "hide " + gate_list(gates_) + " in (" + children_[0].to_string() + ")";
    case Kind::kPar: {
      std::string op = gates_.empty() ? " ||| " : " |[" + gate_list(gates_) + "]| ";
      std::string out = "(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) out += op;
        out += children_[i].to_string();
      }
      return out + ")";
    }
  }
  return "?";
}

Network::Network(std::vector<std::shared_ptr<const Process>> leaves, Expr root)
    : leaves_(std::move(leaves)), root_(std::move(root)) {
  auto idx = root_.leaves();
  std::vector<int> seen(leaves_.size(), 0);
  for (int i : idx) {
    if (i < 0 || static_cast<std::size_t>(i) >= leaves_.size() || seen[i]++) {
      throw std::invalid_argument("network: leaf indices must form a permutation");
    }
  }
  if (idx.size() != leaves_.size()) {
    throw std::invalid_argument("network: every leaf must occur in the expression");
  }
  for (const auto& p : leaves_) {
    if (!p) throw std::invalid_argument("network: null leaf");
  }
  expr_count_ = number(root_, 0);
}

int Network::number(Expr& e, int next) {
  e.id_ = next++;
  for (auto& c : e.children_) next = number(c, next);
  return next;
}

GlobalState Network::initial() const {
  GlobalState s;
  s.reserve(leaves_.size());
  for (const auto& p : leaves_) s.push_back(p->initial());
  return s;
}

const std::vector<Scratch::Move>& Network::compute(std::span<const std::uint64_t> state,
                                                   Scratch& scratch) const {
  if (scratch.per_expr.size() < static_cast<std::size_t>(expr_count_)) {
    scratch.per_expr.resize(expr_count_);
  }
  scratch.updates.clear();
  return evaluate(root_, state, scratch);
}

const std::vector<Scratch::Move>& Network::evaluate(const Expr& e,
                                                    std::span<const std::uint64_t> state,
                                                    Scratch& scratch) const {
  auto& out = scratch.per_expr[e.id_];
  out.clear();
  auto& updates = scratch.updates;

  switch (e.kind_) {
    case Expr::Kind::kLeaf: {
      auto& steps = scratch.leaf_steps;
      steps.clear();
      leaves_[e.leaf_]->step(state[e.leaf_], steps);
      for (const auto& st : steps) {
        out.push_back({st.label, static_cast<std::uint32_t>(updates.size()), 1});
        updates.push_back({static_cast<std::uint32_t>(e.leaf_), st.next});
      }
      return out;
    }

    case Expr::Kind::kHide: {
      const auto& inner = evaluate(e.children_[0], state, scratch);
      for (auto m : inner) {
        if (e.gates_.contains(m.label.gate())) m.label = Label::tau();
        out.push_back(m);
      }
      return out;
    }

    case Expr::Kind::kPar: {
      for (const auto& c : e.children_) evaluate(c, state, scratch);
      const GateSet sync = e.gates_;

      for (const auto& c : e.children_) {
        for (const auto& m : scratch.per_expr[c.id_]) {
          if (!sync.contains(m.label.gate())) out.push_back(m);
        }
      }
      if (sync.empty()) return out;

      // Rendezvous: fold the children's synchronised moves pairwise,
      // joining on identical labels.
      auto& fold = scratch.fold;
      auto& next = scratch.fold_next;
      auto& order = scratch.order;
      fold.clear();
      bool first = true;
      for (const auto& c : e.children_) {
        const auto& cm = scratch.per_expr[c.id_];
        order.clear();
        for (std::uint32_t i = 0; i < cm.size(); ++i) {
          if (sync.contains(cm[i].label.gate())) order.push_back(i);
        }
        std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
          return cm[a].label.key() < cm[b].label.key();
        });
        if (first) {
          for (auto i : order) fold.push_back(cm[i]);
          first = false;
        } else {
          next.clear();
          std::size_t i = 0, j = 0;
          while (i < fold.size() && j < order.size()) {
            auto ka = fold[i].label.key();
            auto kb = cm[order[j]].label.key();
            if (ka < kb) {
              ++i;
            } else if (kb < ka) {
              ++j;
            } else {
              std::size_t i_end = i, j_end = j;
              while (i_end < fold.size() && fold[i_end].label.key() == ka) ++i_end;
              while (j_end < order.size() && cm[order[j_end]].label.key() == ka) ++j_end;
              for (std::size_t a = i; a < i_end; ++a) {
                for (std::size_t b = j; b < j_end; ++b) {
                  const auto& ma = fold[a];
                  const auto& mb = cm[order[b]];
                  auto start = static_cast<std::uint32_t>(updates.size());
                  for (std::uint32_t u = 0; u < ma.count; ++u) {
                    Scratch::Update copy = updates[ma.first + u];
                    updates.push_back(copy);
                  }
                  for (std::uint32_t u = 0; u < mb.count; ++u) {
                    Scratch::Update copy = updates[mb.first + u];
                    updates.push_back(copy);
                  }
                  next.push_back({ma.label, start, ma.count + mb.count});
                }
              }
              i = i_end;
              j = j_end;
            }
          }
          std::swap(fold, next);
        }
        if (fold.empty()) break;
      }
      out.insert(out.end(), fold.begin(), fold.end());
      return out;
    }
  }
  return out;
}

std::vector<GlobalStep> Network::successors(std::span<const std::uint64_t> state) const {
  Scratch scratch;
  std::vector<GlobalStep> out;
  for_each_successor(state, scratch, [&](const Label& l, std::span<const std::uint64_t> next) {
    out.push_back({l, GlobalState(next.begin(), next.end())});
  });
  return out;
}

namespace {

Expr remap(const Expr& e, const std::vector<int>& inverse) {
  switch (e.kind()) {
    case Expr::Kind::kLeaf:
      return Expr::leaf(inverse[e.leaf_index()]);
    case Expr::Kind::kHide:
      return Expr::hide(e.gates(), remap(e.children()[0], inverse));
    case Expr::Kind::kPar: {
      std::vector<Expr> kids;
      for (const auto& c : e.children()) kids.push_back(remap(c, inverse));
      std::stable_sort(kids.begin(), kids.end(), [](const Expr& a, const Expr& b) {
        auto la = a.leaves(), lb = b.leaves();
        return *std::min_element(la.begin(), la.end()) < *std::min_element(lb.begin(), lb.end());
      });
      return Expr::par(e.gates(), std::move(kids));
    }
  }
  return e;
}

}  // namespace

Network Network::permute(const std::vector<int>& order) const {
  if (order.size() != leaves_.size()) {
    throw std::invalid_argument("permute: expected " + std::to_string(leaves_.size()) +
                                " indices, got " + std::to_string(order.size()));
  }
  std::vector<int> inverse(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int o = order[i];
    if (o < 0 || static_cast<std::size_t>(o) >= order.size() || inverse[o] != -1) {
      throw std::invalid_argument("permute: not a permutation");
    }
    inverse[o] = static_cast<int>(i);
  }
  std::vector<std::shared_ptr<const Process>> leaves;
  for (int o : order) leaves.push_back(leaves_[o]);
  return Network(std::move(leaves), remap(root_, inverse));
}

std::string Network::describe(std::span<const std::uint64_t> state) const {
  std::string out;
  for (std::size_t i = 0; i < leaves_.size(); ++i) {
    if (i) out += "; ";
    out += leaves_[i]->describe(state[i]);
  }
  return out;
}

}  // namespace firelink
