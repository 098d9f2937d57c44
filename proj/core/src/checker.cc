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

#include "firelink/checker.hpp"

#include <algorithm>
#include <deque>

namespace firelink {

namespace {

using Set = std::vector<char>;

class Evaluator {
 public:
  explicit Evaluator(const Lts& lts) : lts_(lts), fwd_(lts), bwd_(lts, true) {
    degree_.resize(lts.num_states());
    for (StateId s = 0; s < lts.num_states(); ++s) {
      degree_[s] = static_cast<std::uint32_t>(fwd_.degree(s));
    }
  }

  Set eval(const Formula& f) {
    const std::size_t n = lts_.num_states();
    switch (f.kind) {
      case Formula::Kind::kTrue:
        return Set(n, 1);
      case Formula::Kind::kFalse:
        return Set(n, 0);
      case Formula::Kind::kNot: {
        Set s = eval(f.args[0]);
        for (auto& x : s) x = !x;
        return s;
      }
      case Formula::Kind::kAnd:
      case Formula::Kind::kOr: {
        const bool conj = f.kind == Formula::Kind::kAnd;
        Set s = eval(f.args[0]);
        for (std::size_t i = 1; i < f.args.size(); ++i) {
          Set t = eval(f.args[i]);
          for (std::size_t k = 0; k < n; ++k) s[k] = conj ? (s[k] && t[k]) : (s[k] || t[k]);
        }
        return s;
      }
      case Formula::Kind::kDia:
      case Formula::Kind::kBox: {
        const bool dia = f.kind == Formula::Kind::kDia;
        Set g = eval(f.args[0]);
        Set a = actions(f.action);
        Set s(n, dia ? 0 : 1);
        for (const auto& t : lts_.transitions()) {
          if (!a[t.label]) continue;
          if (dia && g[t.dst]) s[t.src] = 1;
          if (!dia && !g[t.dst]) s[t.src] = 0;
        }
        return s;
      }
      case Formula::Kind::kEF:
        return until(Set(n, 1), eval(f.args[0]), false);
      case Formula::Kind::kAG: {
        Set g = eval(f.args[0]);
        for (auto& x : g) x = !x;
        Set s = until(Set(n, 1), g, false);
        for (auto& x : s) x = !x;
        return s;
      }
      case Formula::Kind::kAF:
        return until(Set(n, 1), eval(f.args[0]), true);
      case Formula::Kind::kEU:
        return until(eval(f.args[0]), eval(f.args[1]), false);
      case Formula::Kind::kAU:
        return until(eval(f.args[0]), eval(f.args[1]), true);
    }
    return Set(n, 0);
  }

  Set actions(const Action& a) const {
    Set s(lts_.num_labels());
    for (LabelId l = 0; l < lts_.num_labels(); ++l) s[l] = a.matches(lts_.label_text(l));
    return s;
  }

  // Least fixpoint of  X = g or (f and step(X)), where step is "some
  // successor" or, when `all`, "at least one successor and all of them".
  Set until(const Set& f, const Set& g, bool all) {
    const std::size_t n = lts_.num_states();
    Set x(n, 0);
    std::vector<std::uint32_t> missing(degree_);
    std::deque<StateId> work;
    for (StateId s = 0; s < n; ++s) {
      if (g[s]) {
        x[s] = 1;
        work.push_back(s);
      }
    }
    while (!work.empty()) {
      StateId t = work.front();
      work.pop_front();
      for (const auto& e : bwd_.out(t)) {
        StateId s = e.src;
        if (x[s] || !f[s]) continue;
        if (all && --missing[s] != 0) continue;
        x[s] = 1;
        work.push_back(s);
      }
    }
    return x;
  }

  // Shortest path from the initial state to a state in `target`.
  bool path_to(const Set& target, Trace& out) const {
    const std::size_t n = lts_.num_states();
    std::vector<StateId> parent(n, kNoState);
    std::vector<LabelId> via(n, 0);
    std::vector<char> seen(n, 0);
    std::deque<StateId> work{lts_.initial()};
    seen[lts_.initial()] = 1;
    while (!work.empty()) {
      StateId s = work.front();
      work.pop_front();
      if (target[s]) {
        for (StateId v = s; v != lts_.initial(); v = parent[v]) out.push_back(lts_.label_text(via[v]));
        std::reverse(out.begin(), out.end());
        return true;
      }
      for (const auto& e : fwd_.out(s)) {
        if (seen[e.dst]) continue;
        seen[e.dst] = 1;
        parent[e.dst] = s;
        via[e.dst] = e.label;
        work.push_back(e.dst);
      }
    }
    return false;
  }

  // First transition from the initial state with an `a` label into a state
  // where `g` has the value `want`.
  bool step_to(const Action& a, const Set& g, bool want, Trace& out) const {
    for (const auto& e : fwd_.out(lts_.initial())) {
      if (a.matches(lts_.label_text(e.label)) && static_cast<bool>(g[e.dst]) == want) {
        out.push_back(lts_.label_text(e.label));
        return true;
      }
    }
    return false;
  }

 private:
  const Lts& lts_;
  Adjacency fwd_;
  Adjacency bwd_;
  std::vector<std::uint32_t> degree_;
};

}  // namespace

std::vector<char> satisfying(const Lts& lts, const Formula& f) {
  lts.validate();
  return Evaluator(lts).eval(f);
}

Verdict check(const Lts& lts, const Formula& f) {
  lts.validate();
  Evaluator ev(lts);
  Verdict v;
  v.holds = ev.eval(f)[lts.initial()];
  switch (f.kind) {
    case Formula::Kind::kEF:
      if (v.holds) v.has_trace = ev.path_to(ev.eval(f.args[0]), v.trace);
      break;
    case Formula::Kind::kAG:
      if (!v.holds) {
        Set bad = ev.eval(f.args[0]);
        for (auto& x : bad) x = !x;
        v.has_trace = ev.path_to(bad, v.trace);
      }
      break;
    case Formula::Kind::kDia:
      if (v.holds) v.has_trace = ev.step_to(f.action, ev.eval(f.args[0]), true, v.trace);
      break;
    case Formula::Kind::kBox:
      if (!v.holds) v.has_trace = ev.step_to(f.action, ev.eval(f.args[0]), false, v.trace);
      break;
    default:
      break;
  }
  return v;
}

}  // namespace firelink
