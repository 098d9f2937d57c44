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

#include "firelink/bus.hpp"

#include <bit>
#include <stdexcept>

namespace firelink {

namespace {

constexpr std::uint8_t bit(int i) { return static_cast<std::uint8_t>(1u << i); }

NodeId node_at(int i) { return NodeId{static_cast<std::uint8_t>(i)}; }

// Lowest member of `set` that is >= from, or -1.
int next_member(std::uint8_t set, int from, int n) {
  for (int i = from; i < n; ++i) {
    if (set & bit(i)) return i;
  }
  return -1;
}

}  // namespace

BusProcess::BusProcess(int n, Faults faults, Domains domains)
    : n_(n), faults_(faults), domains_(domains) {
  if (n < 2 || n > kMaxNodes) throw std::invalid_argument("bus: node count out of range");
  alphabet_ = signal_alphabet(n, domains);
}

std::uint64_t BusProcess::initial() const { return pack_state(initial_state()); }

void BusProcess::step(std::uint64_t state, std::vector<Step>& out) const {
  step_typed(unpack_state<BusState>(state), out);
}

std::vector<std::pair<Label, BusState>> BusProcess::successors(const BusState& s) const {
  std::vector<Step> steps;
  step_typed(s, steps);
  std::vector<std::pair<Label, BusState>> out;
  out.reserve(steps.size());
  for (const auto& st : steps) out.emplace_back(st.label, unpack_state<BusState>(st.next));
  return out;
}

std::vector<std::pair<Signal, bool>> BusProcess::deliveries(Signal sig, bool marked) const {
  std::vector<std::pair<Signal, bool>> out;
  if (sig.is_dest()) {
    out.emplace_back(sig, marked);
    if (faults_.invalidate_dest) {
      for (int d = 0; d <= n_; ++d) {
        Dest other = d == n_ ? Dest::broadcast() : Dest::node(node_at(d));
        if (other != sig.dest_value()) out.emplace_back(Signal::dest(other), true);
      }
    }
    return out;
  }
  if (sig.is_header() && marked) {
    // The header checksum covers the destination that was just garbled.
    out.emplace_back(corrupt(sig), true);
    return out;
  }
  out.emplace_back(sig, marked);
  if (faults_.corrupt && sig.is_corruptible() && corrupt(sig) != sig) {
    out.emplace_back(corrupt(sig), marked);
  }
  return out;
}

BusState BusProcess::gap(const BusState& s, bool reset) const {
  BusState t;
  t.phase = BusPhase::kGap;
  t.fairness = reset ? 0 : s.fairness;
  t.flags = reset ? BusState::kResetGap : 0;
  return t;
}

BusState BusProcess::finish_round(const BusState& s) const {
  Signal sig = Signal::decode(s.signal);
  if (sig.is(SignalKind::kEnd)) {
    if (s.immediate == 0) return gap(s, false);
    BusState t;
    t.phase = BusPhase::kConfirm;
    t.fairness = s.fairness;
    t.immediate = s.immediate;
    t.cursor = static_cast<std::uint8_t>(next_member(s.immediate, 0, n_));
    return t;
  }
  BusState t = s;
  t.phase = BusPhase::kBusy;
  t.signal = 0;
  t.cursor = 0;
  if (sig.is(SignalKind::kDummy)) {
    t.flags = s.flags & BusState::kClocked;
  } else {
    t.flags = sig.is_data() && faults_.dummy ? BusState::kDummyOk : 0;
  }
  return t;
}

BusState BusProcess::after_delivery(const BusState& s) const {
  int next = s.cursor + 1;
  if (next == s.node) ++next;
  if (next >= n_) return finish_round(s);
  BusState t = s;
  t.cursor = static_cast<std::uint8_t>(next);
  return t;
}

void BusProcess::step_typed(const BusState& s, std::vector<Step>& out) const {
  auto emit = [&](const Label& l, const BusState& t) { out.push_back({l, pack_state(t)}); };
  auto pareq = [](int i, ArbKind k) {
    return Label(Gate::kPaReq, {Offer::node(node_at(i)), Offer::arb_kind(k)});
  };
  auto pacon = [](int i, ArbResult r) {
    return Label(Gate::kPaCon, {Offer::node(node_at(i)), Offer::arb_result(r)});
  };
  auto pcind = [](int i) { return Label(Gate::kPcInd, {Offer::node(node_at(i))}); };
  auto pdreq = [](int i, Signal sig) {
    return Label(Gate::kPdReq, {Offer::node(node_at(i)), Offer::signal(sig)});
  };
  auto pdind = [](int i, Signal sig) {
    return Label(Gate::kPdInd, {Offer::node(node_at(i)), Offer::signal(sig)});
  };
  auto distribute = [&](const BusState& from, int sender, Signal sig) {
    BusState t = from;
    t.phase = BusPhase::kDistribute;
    t.node = static_cast<std::uint8_t>(sender);
    t.signal = sig.encode();
    t.cursor = sender == 0 ? 1 : 0;
    return t;
  };
  // Immediate requests are recorded without an answer until the bus frees up.
  auto accept_immediate = [&](int except) {
    for (int j = 0; j < n_; ++j) {
      if (j == except || (s.immediate & bit(j))) continue;
      BusState t = s;
      t.immediate |= bit(j);
      emit(pareq(j, ArbKind::kImmediate), t);
    }
  };

  switch (s.phase) {
    case BusPhase::kIdle: {
      for (int i = 0; i < n_; ++i) {
        BusState t = s;
        t.phase = BusPhase::kDecide;
        t.node = static_cast<std::uint8_t>(i);
        emit(pareq(i, ArbKind::kFair), t);
      }
      // Arbitration reset gap: the untimed model only keeps its precondition.
      if (s.fairness != 0) emit(Label::tau(), gap(s, true));
      emit(Label::terminated(), s);
      break;
    }

    case BusPhase::kDecide: {
      int r = s.node;
      if (s.fairness & bit(r)) {
        BusState t = s;
        t.phase = BusPhase::kIdle;
        t.node = 0;
        emit(pacon(r, ArbResult::kLost), t);
      } else {
        BusState t = s;
        t.phase = BusPhase::kBusy;
        t.fairness |= bit(r);
        emit(pacon(r, ArbResult::kWon), t);
      }
      break;
    }

    case BusPhase::kBusy: {
      int owner = s.node;
      if (s.cursor != 0) {
        BusState t = s;
        t.cursor = 0;
        emit(pacon(s.cursor - 1, ArbResult::kLost), t);
        break;
      }
      for (int j = 0; j < n_; ++j) {
        if (j == owner) continue;
        BusState t = s;
        t.cursor = static_cast<std::uint8_t>(j + 1);
        emit(pareq(j, ArbKind::kFair), t);
      }
      accept_immediate(owner);
      if (!s.has(BusState::kClocked)) {
        BusState t = s;
        t.flags |= BusState::kClocked;
        emit(pcind(owner), t);
      } else {
        BusState base = s;
        base.flags = 0;
        for (Signal sig : alphabet_) emit(pdreq(owner, sig), distribute(base, owner, sig));
      }
      if (s.has(BusState::kDummyOk)) {
        BusState base = s;
        base.flags &= BusState::kClocked;
        emit(Label::tau(), distribute(base, owner, Signal::dummy()));
      }
      break;
    }

    case BusPhase::kDistribute: {
      int r = s.cursor;
      Signal sig = Signal::decode(s.signal);
      bool marked = (s.marks & bit(r)) != 0;
      for (auto [seen, mark] : deliveries(sig, marked)) {
        BusState t = s;
        if (mark) t.marks |= bit(r);
        emit(pdind(r, seen), after_delivery(t));
      }
      accept_immediate(s.node);
      if (faults_.drop && sig.is_corruptible()) emit(Label::tau(), after_delivery(s));
      break;
    }

    case BusPhase::kConfirm: {
      int o = s.cursor;
      int next = next_member(s.immediate, o + 1, n_);
      if (!s.has(BusState::kConfirmClock)) {
        BusState t = s;
        if (next >= 0) {
          t.cursor = static_cast<std::uint8_t>(next);
        } else {
          t.flags |= BusState::kConfirmClock;
          t.cursor = static_cast<std::uint8_t>(next_member(s.immediate, 0, n_));
        }
        emit(pacon(o, ArbResult::kWon), t);
        break;
      }
      BusState t = s;
      if (next >= 0) {
        t.cursor = static_cast<std::uint8_t>(next);
      } else if (std::popcount(s.immediate) == 1) {
        t = BusState{};
        t.phase = BusPhase::kBusy;
        t.fairness = s.fairness;
        t.node = static_cast<std::uint8_t>(o);
        t.flags = BusState::kClocked;
      } else {
        t.phase = BusPhase::kResolve;
        t.cursor = 0;
        t.flags = 0;
      }
      emit(pcind(o), t);
      break;
    }

    case BusPhase::kResolve: {
      if (std::popcount(s.immediate) >= 2) {
        // Several nodes believe they own the bus; wait until all but one
        // have given up with END.
        for (int o = 0; o < n_; ++o) {
          if (!(s.immediate & bit(o))) continue;
          BusState t = s;
          t.immediate &= static_cast<std::uint8_t>(~bit(o));
          emit(pdreq(o, Signal::end()), t);
        }
        break;
      }
      int survivor = next_member(s.immediate, 0, n_);
      BusState base = s;
      base.immediate = 0;
      base.flags = 0;
      for (Signal sig : alphabet_) {
        if (sig.is(SignalKind::kEnd)) {
          emit(pdreq(survivor, sig), gap(s, false));
        } else {
          emit(pdreq(survivor, sig), distribute(base, survivor, sig));
        }
      }
      break;
    }

    case BusPhase::kGap: {
      BusState t = s;
      if (s.cursor + 1 >= n_) {
        t = BusState{};
        t.fairness = s.fairness;
      } else {
        t.cursor = static_cast<std::uint8_t>(s.cursor + 1);
      }
      emit(pdind(s.cursor, Signal::subaction_gap()), t);
      break;
    }
  }
}

std::string to_string(BusPhase p) {
  switch (p) {
    case BusPhase::kIdle:
      return "Idle";
    case BusPhase::kDecide:
      return "Decide";
    case BusPhase::kBusy:
      return "Busy";
    case BusPhase::kDistribute:
      return "Distribute";
    case BusPhase::kConfirm:
      return "Confirm";
    case BusPhase::kResolve:
      return "Resolve";
    case BusPhase::kGap:
      return "Gap";
  }
  return "?";
}

std::string BusProcess::describe(std::uint64_t state) const {
  auto s = unpack_state<BusState>(state);
  std::string out = "Bus:" + to_string(s.phase) + "(node=" + std::to_string(s.node) +
                    " cursor=" + std::to_string(s.cursor) + " flags=" + std::to_string(s.flags) +
                    ")";
  if (s.phase == BusPhase::kDistribute) out += " signal=" + to_string(Signal::decode(s.signal));
  out += " fairness=" + std::to_string(s.fairness) + " immediate=" + std::to_string(s.immediate) +
         " marks=" + std::to_string(s.marks);
  return out;
}

}  // namespace firelink
