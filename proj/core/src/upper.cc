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

#include "firelink/upper.hpp"

#include <stdexcept>

namespace firelink {

namespace {

NodeId node_at(int i) { return NodeId{static_cast<std::uint8_t>(i)}; }

std::uint8_t encode_conf(Confirmation c) {
  return static_cast<std::uint8_t>((static_cast<unsigned>(c.kind) << 4) | c.ack.value);
}

Confirmation decode_conf(std::uint8_t b) {
  return {static_cast<ConfirmationKind>(b >> 4), AckCode{static_cast<std::uint8_t>(b & 0xf)}};
}

void check_config(NodeId id, int n, const Domains& d) {
  if (n < 2 || n > kMaxNodes) throw std::invalid_argument("node count out of range");
  if (id.value >= n) throw std::invalid_argument("node id out of range");
  if (d.data == 0 || d.acks == 0 || d.data > kMaxDomain || d.acks > kMaxDomain) {
    throw std::invalid_argument("payload domain size out of range");
  }
}

}  // namespace

std::string to_string(Variant v) { return v == Variant::kOk ? "ok" : "ko"; }

std::vector<Confirmation> all_confirmations(const Domains& domains) {
  std::vector<Confirmation> out;
  for (std::uint8_t a = 0; a < domains.acks; ++a) out.push_back(Confirmation::ack_received({a}));
  out.push_back(Confirmation::ack_missing());
  out.push_back(Confirmation::broadcast_sent());
  return out;
}

Label confirmation_label(Gate gate, NodeId id, Confirmation c) {
  if (c.kind == ConfirmationKind::kAckRec) {
    return Label(gate, {Offer::node(id), Offer::confirmation(c.kind), Offer::ack(c.ack)});
  }
  return Label(gate, {Offer::node(id), Offer::confirmation(c.kind)});
}

// ---------------------------------------------------------------- Trans

TransProcess::TransProcess(NodeId id, int n, Variant variant, Domains domains)
    : id_(id), n_(n), variant_(variant), domains_(domains) {
  check_config(id, n, domains);
}

void TransProcess::step(std::uint64_t state, std::vector<Step>& out) const {
  step_typed(unpack_state<TransState>(state), out);
}

std::vector<std::pair<Label, TransState>> TransProcess::successors(const TransState& s) const {
  std::vector<Step> steps;
  step_typed(s, steps);
  std::vector<std::pair<Label, TransState>> out;
  for (const auto& st : steps) out.emplace_back(st.label, unpack_state<TransState>(st.next));
  return out;
}

void TransProcess::step_typed(const TransState& s, std::vector<Step>& out) const {
  auto emit = [&](const Label& l, const TransState& t) { out.push_back({l, pack_state(t)}); };
  const bool holding =
      s.resp == ResponderPhase::kHoldSend || s.resp == ResponderPhase::kHoldAwaitCon;
  const auto confs = all_confirmations(domains_);

  // Link side first: LDREQ, LDCON, LDIND, LDRES.
  if (s.req == RequesterPhase::kHaveRequest && !holding) {
    TransState t = s;
    t.req = RequesterPhase::kAwaitCon;
    emit(Label(Gate::kLdReq, {Offer::node(id_), Offer::dest(Dest::from_code(s.req_dest)),
                              Offer::data(Data{s.req_data})}),
         t);
  }
  if (s.resp == ResponderPhase::kHoldSend) {
    TransState t = s;
    t.resp = ResponderPhase::kHoldAwaitCon;
    emit(Label(Gate::kLdReq,
               {Offer::node(id_), Offer::dest(Dest::node(s.ind_src())), Offer::data(Data{0})}),
         t);
  }
  if (s.resp == ResponderPhase::kHoldAwaitCon) {
    // The confirmation of a concatenated response stays inside this layer.
    for (const auto& c : confs) {
      TransState t = s;
      t.resp = ResponderPhase::kIdle;
      t.ind = 0;
      t.answer = 0;
      emit(confirmation_label(Gate::kLdCon, id_, c), t);
    }
  } else if (s.req == RequesterPhase::kAwaitCon) {
    for (const auto& c : confs) {
      TransState t = s;
      t.req = RequesterPhase::kConfirm;
      t.req_conf = encode_conf(c);
      emit(confirmation_label(Gate::kLdCon, id_, c), t);
    }
  }
  if (s.resp == ResponderPhase::kIdle) {
    for (IndicationKind k : {IndicationKind::kAddressed, IndicationKind::kBroadcast}) {
      for (int src = 0; src < n_; ++src) {
        for (std::uint8_t d = 0; d < domains_.data; ++d) {
          for (Crc crc : {Crc::kValid, Crc::kCorrupted}) {
            TransState t = s;
            t.resp = ResponderPhase::kIndicate;
            t.ind = TransState::encode_ind(k, node_at(src), Data{d});
            emit(Label(Gate::kLdInd, {Offer::node(id_), Offer::indication(k),
                                      Offer::node(node_at(src)), Offer::data(Data{d}),
                                      Offer::crc(crc)}),
                 t);
          }
        }
      }
    }
  }
  if (s.resp == ResponderPhase::kRespond) {
    auto ack = AckCode{static_cast<std::uint8_t>(s.answer >> 1)};
    auto hr = static_cast<HoldRelease>(s.answer & 1);
    // A concatenated response needs the link's single buffer; fall back to a
    // plain release while our own request still occupies it.
    if (hr == HoldRelease::kHold && s.req == RequesterPhase::kAwaitCon) {
      hr = HoldRelease::kRelease;
    }
    TransState t = s;
    if (hr == HoldRelease::kHold) {
      t.resp = ResponderPhase::kHoldSend;
    } else {
      t.resp = ResponderPhase::kIdle;
      t.ind = 0;
    }
    t.answer = 0;
    emit(Label(Gate::kLdRes, {Offer::node(id_), Offer::ack(ack), Offer::hold_release(hr)}), t);
  }
  if (s.resp == ResponderPhase::kBcastRespond) {
    TransState t = s;
    t.resp = ResponderPhase::kIdle;
    t.ind = 0;
    emit(Label(Gate::kLdRes, {Offer::node(id_), Offer::ack(AckCode{0}),
                              Offer::hold_release(HoldRelease::kRelease)}),
         t);
  }

  // Application side: TDREQ, TDIND, TDRES, TDCON.
  if (s.req == RequesterPhase::kIdle) {
    for (int d = 0; d <= n_; ++d) {
      Dest dest = d == n_ ? Dest::broadcast() : Dest::node(node_at(d));
      if (!dest.is_broadcast() && dest.node_id() == id_) continue;
      for (std::uint8_t v = 0; v < domains_.data; ++v) {
        TransState t = s;
        t.req = RequesterPhase::kHaveRequest;
        t.req_dest = dest.code();
        t.req_data = v;
        emit(Label(Gate::kTdReq, {Offer::node(id_), Offer::dest(dest), Offer::data(Data{v})}), t);
      }
    }
  }
  if (s.resp == ResponderPhase::kIndicate) {
    TransState t = s;
    auto kind = s.ind_kind();
    if (kind == IndicationKind::kAddressed) {
      t.resp = ResponderPhase::kAwaitRes;
    } else if (variant_ == Variant::kKo) {
      t.resp = ResponderPhase::kBcastRespond;
    } else {
      t.resp = ResponderPhase::kIdle;
      t.ind = 0;
    }
    emit(Label(Gate::kTdInd, {Offer::node(id_), Offer::indication(kind),
                              Offer::node(s.ind_src()), Offer::data(s.ind_data())}),
         t);
  }
  if (s.resp == ResponderPhase::kAwaitRes) {
    for (std::uint8_t a = 0; a < domains_.acks; ++a) {
      for (HoldRelease hr : {HoldRelease::kHold, HoldRelease::kRelease}) {
        TransState t = s;
        t.resp = ResponderPhase::kRespond;
        t.answer = static_cast<std::uint8_t>((a << 1) | static_cast<unsigned>(hr));
        emit(Label(Gate::kTdRes, {Offer::node(id_), Offer::ack(AckCode{a}),
                                  Offer::hold_release(hr)}),
             t);
      }
    }
  }
  if (s.req == RequesterPhase::kConfirm) {
    TransState t = s;
    t.req = RequesterPhase::kIdle;
    t.req_dest = t.req_data = t.req_conf = 0;
    emit(confirmation_label(Gate::kTdCon, id_, decode_conf(s.req_conf)), t);
  }

  if (s.req == RequesterPhase::kIdle && s.resp == ResponderPhase::kIdle) {
    emit(Label::terminated(), s);
  }
}

std::string TransProcess::describe(std::uint64_t state) const {
  auto s = unpack_state<TransState>(state);
  return name() + ":req=" + std::to_string(static_cast<int>(s.req)) +
         " dest=" + std::to_string(s.req_dest) + " conf=" + std::to_string(s.req_conf) +
         " resp=" + std::to_string(static_cast<int>(s.resp)) + " ind=" + std::to_string(s.ind) +
         " answer=" + std::to_string(s.answer);
}

// ---------------------------------------------------------------- Appli

AppliProcess::AppliProcess(NodeId id, int n, AppliProfile profile, Domains domains)
    : id_(id), n_(n), profile_(std::move(profile)), domains_(domains) {
  check_config(id, n, domains);
  if (profile_.budget < 0 || profile_.budget > 255) {
    throw std::invalid_argument("appli: budget out of range");
  }
  if (profile_.budget > 0 && profile_.targets.empty()) {
    throw std::invalid_argument("appli: requests need at least one target");
  }
  for (Dest d : profile_.targets) {
    if (!d.is_broadcast() && (d.node_id().value >= n || d.node_id() == id)) {
      throw std::invalid_argument("appli: invalid request target");
    }
  }
  if (profile_.answers.empty()) throw std::invalid_argument("appli: no response kinds");
}

std::uint64_t AppliProcess::initial() const {
  AppliState s;
  s.budget = static_cast<std::uint8_t>(profile_.budget);
  return pack_state(s);
}

void AppliProcess::step(std::uint64_t state, std::vector<Step>& out) const {
  step_typed(unpack_state<AppliState>(state), out);
}

std::vector<std::pair<Label, AppliState>> AppliProcess::successors(const AppliState& s) const {
  std::vector<Step> steps;
  step_typed(s, steps);
  std::vector<std::pair<Label, AppliState>> out;
  for (const auto& st : steps) out.emplace_back(st.label, unpack_state<AppliState>(st.next));
  return out;
}

void AppliProcess::step_typed(const AppliState& s, std::vector<Step>& out) const {
  auto emit = [&](const Label& l, const AppliState& t) { out.push_back({l, pack_state(t)}); };

  if (s.budget > 0 && !s.awaiting) {
    for (Dest dest : profile_.targets) {
      for (std::uint8_t v = 0; v < domains_.data; ++v) {
        AppliState t = s;
        t.budget = static_cast<std::uint8_t>(s.budget - 1);
        t.awaiting = 1;
        emit(Label(Gate::kTdReq, {Offer::node(id_), Offer::dest(dest), Offer::data(Data{v})}), t);
      }
    }
  }
  if (!s.pending) {
    for (IndicationKind k : {IndicationKind::kAddressed, IndicationKind::kBroadcast}) {
      for (int src = 0; src < n_; ++src) {
        for (std::uint8_t d = 0; d < domains_.data; ++d) {
          AppliState t = s;
          if (k == IndicationKind::kAddressed) t.pending = 1;
          emit(Label(Gate::kTdInd, {Offer::node(id_), Offer::indication(k),
                                    Offer::node(node_at(src)), Offer::data(Data{d})}),
               t);
        }
      }
    }
  } else {
    for (std::uint8_t a = 0; a < domains_.acks; ++a) {
      for (HoldRelease hr : profile_.answers) {
        AppliState t = s;
        t.pending = 0;
        emit(Label(Gate::kTdRes, {Offer::node(id_), Offer::ack(AckCode{a}),
                                  Offer::hold_release(hr)}),
             t);
      }
    }
  }
  if (s.awaiting) {
    for (const auto& c : all_confirmations(domains_)) {
      AppliState t = s;
      t.awaiting = 0;
      emit(confirmation_label(Gate::kTdCon, id_, c), t);
    }
  }
  if (s.done()) emit(Label::terminated(), s);
}

std::string AppliProcess::describe(std::uint64_t state) const {
  auto s = unpack_state<AppliState>(state);
  return name() + ":budget=" + std::to_string(s.budget) +
         " awaiting=" + std::to_string(s.awaiting) + " pending=" + std::to_string(s.pending);
}

}  // namespace firelink
