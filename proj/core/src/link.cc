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

#include "firelink/link.hpp"

#include <stdexcept>

namespace firelink {

namespace {

LinkState idle(const LinkState& from) {
  LinkState s;
  s.buffer = from.buffer;
  return s;
}

LinkState wait_gap(const LinkState& from) {
  LinkState s = idle(from);
  s.mode = LinkMode::kWaitGap;
  return s;
}

LinkState ignore(const LinkState& from) {
  LinkState s = idle(from);
  s.mode = LinkMode::kIgnore;
  if (from.has(LinkState::kImmediate)) s.flags = LinkState::kImmediate;
  return s;
}

LinkState confirm(const LinkState& from, ConfirmationKind kind, AckCode ack, bool then_idle) {
  LinkState s = idle(from);
  s.mode = LinkMode::kConfirm;
  s.phase = static_cast<std::uint8_t>(kind);
  s.payload = ack.value;
  if (then_idle) s.flags = LinkState::kThenIdle;
  return s;
}

bool terminates_packet(Signal sig) {
  return sig.is(SignalKind::kEnd) || sig.is(SignalKind::kPrefix);
}

}  // namespace

LinkProcess::LinkProcess(NodeId id, int n, Domains domains)
    : id_(id), n_(n), domains_(domains) {
  if (n < 2 || n > kMaxNodes) throw std::invalid_argument("link: node count out of range");
  if (id.value >= n) throw std::invalid_argument("link: node id out of range");
  if (domains.headers == 0 || domains.data == 0 || domains.acks == 0 ||
      domains.headers > kMaxDomain || domains.data > kMaxDomain || domains.acks > kMaxDomain) {
    throw std::invalid_argument("link: payload domain size out of range");
  }
  alphabet_ = signal_alphabet(n, domains);
}

std::string LinkProcess::name() const { return "Link" + std::to_string(id_.value); }

std::uint64_t LinkProcess::initial() const { return pack_state(initial_state()); }

Label LinkProcess::pdind(Signal sig) const {
  return Label(Gate::kPdInd, {Offer::node(id_), Offer::signal(sig)});
}
Label LinkProcess::pdreq(Signal sig) const {
  return Label(Gate::kPdReq, {Offer::node(id_), Offer::signal(sig)});
}
Label LinkProcess::pcind() const { return Label(Gate::kPcInd, {Offer::node(id_)}); }

std::optional<Packet> LinkProcess::buffered_packet(const LinkState& s) const {
  if (!s.has_packet()) return std::nullopt;
  return Packet(id_, s.buffered_dest(), Header{0}, s.buffered_data());
}

void LinkProcess::step(std::uint64_t state, std::vector<Step>& out) const {
  step_typed(unpack_state<LinkState>(state), out);
}

std::vector<std::pair<Label, LinkState>> LinkProcess::successors(const LinkState& s) const {
  std::vector<Step> steps;
  step_typed(s, steps);
  std::vector<std::pair<Label, LinkState>> out;
  out.reserve(steps.size());
  for (const auto& st : steps) out.emplace_back(st.label, unpack_state<LinkState>(st.next));
  return out;
}

void LinkProcess::step_typed(const LinkState& s, std::vector<Step>& out) const {
  auto emit = [&](const Label& l, const LinkState& t) { out.push_back({l, pack_state(t)}); };

  // Offers every signal of the alphabet on PDIND; `react` maps a signal to
  // the successor state.
  auto listen = [&](auto&& react) {
    for (Signal sig : alphabet_) emit(pdind(sig), react(sig));
  };
  // One clock indication, one signal: the clocked flag alternates.
  auto clocked_emit = [&](Signal sig, const LinkState& after) {
    if (!s.has(LinkState::kClocked)) {
      emit(pcind(), s.with(LinkState::kClocked));
    } else {
      emit(pdreq(sig), after.with(LinkState::kClocked, false));
    }
  };
  auto offer_ldreq = [&](auto&& make) {
    for (int d = 0; d <= n_; ++d) {
      Dest dest = d == n_ ? Dest::broadcast() : Dest::node(NodeId{static_cast<std::uint8_t>(d)});
      if (!dest.is_broadcast() && dest.node_id() == id_) continue;
      for (std::uint8_t v = 0; v < domains_.data; ++v) {
        emit(Label(Gate::kLdReq, {Offer::node(id_), Offer::dest(dest), Offer::data(Data{v})}),
             make(LinkState::encode_buffer(dest, Data{v})));
      }
    }
  };

  switch (s.mode) {
    case LinkMode::kIdle: {
      if (!s.has_packet()) {
        offer_ldreq([&](std::uint8_t buf) {
          LinkState t = s;
          t.buffer = buf;
          return t;
        });
      } else {
        LinkState t = idle(s);
        t.mode = LinkMode::kArbWait;
        emit(Label(Gate::kPaReq, {Offer::node(id_), Offer::arb_kind(ArbKind::kFair)}), t);
      }
      listen([&](Signal sig) {
        if (!sig.is(SignalKind::kStart)) return s;
        LinkState t = idle(s);
        t.mode = LinkMode::kReceive;
        return t;
      });
      if (!s.has_packet()) emit(Label::terminated(), s);
      break;
    }

    case LinkMode::kArbWait: {
      LinkState won = idle(s);
      won.mode = LinkMode::kSend;
      emit(Label(Gate::kPaCon, {Offer::node(id_), Offer::arb_result(ArbResult::kWon)}), won);
      emit(Label(Gate::kPaCon, {Offer::node(id_), Offer::arb_result(ArbResult::kLost)}), idle(s));
      break;
    }

    case LinkMode::kSend: {
      auto pkt = buffered_packet(s);
      if (!pkt) throw std::logic_error("link: send mode without a packet");
      const auto body = pkt->signals();
      Signal sig = s.cursor == 0   ? Signal::start()
                   : s.cursor <= 4 ? body[s.cursor - 1]
                                   : Signal::end();
      LinkState after = s;
      if (s.cursor < 5) {
        after.cursor = static_cast<std::uint8_t>(s.cursor + 1);
      } else {
        LinkState done;
        if (pkt->dest().is_broadcast()) {
          after = confirm(done, ConfirmationKind::kBroadSent, AckCode{}, false);
        } else {
          after = done;
          after.mode = LinkMode::kAwaitAck;
          after.phase = static_cast<std::uint8_t>(AckPhase::kExpectStart);
        }
        after = after.with(LinkState::kClocked);  // cleared by clocked_emit
      }
      clocked_emit(sig, after);
      break;
    }

    case LinkMode::kConfirm: {
      auto kind = static_cast<ConfirmationKind>(s.phase);
      Label l = kind == ConfirmationKind::kAckRec
                    ? Label(Gate::kLdCon, {Offer::node(id_), Offer::confirmation(kind),
                                           Offer::ack(AckCode{s.payload})})
                    : Label(Gate::kLdCon, {Offer::node(id_), Offer::confirmation(kind)});
      emit(l, s.has(LinkState::kThenIdle) ? idle(s) : wait_gap(s));
      break;
    }

    case LinkMode::kAwaitAck: {
      auto phase = static_cast<AckPhase>(s.phase);
      listen([&](Signal sig) {
        if (sig.is(SignalKind::kSubActGap)) {
          return confirm(s, ConfirmationKind::kAckMiss, AckCode{}, true);
        }
        switch (phase) {
          case AckPhase::kExpectStart: {
            if (!sig.is(SignalKind::kStart)) return s;
            LinkState t = s;
            t.phase = static_cast<std::uint8_t>(AckPhase::kExpectAck);
            return t;
          }
          case AckPhase::kExpectAck: {
            if (!sig.is_ack()) return confirm(s, ConfirmationKind::kAckMiss, AckCode{}, false);
            LinkState t = s;
            t.phase = static_cast<std::uint8_t>(AckPhase::kExpectEnd);
            t.payload = sig.payload();
            t = t.with(LinkState::kCorrupted, !sig.valid());
            return t;
          }
          case AckPhase::kExpectEnd: {
            if (!terminates_packet(sig)) {
              return confirm(s, ConfirmationKind::kAckMiss, AckCode{}, false);
            }
            // A PREFIX terminator announces a concatenated response in the
            // same subaction, so the link must be ready to receive it.
            bool then_idle = sig.is(SignalKind::kPrefix);
            if (s.has(LinkState::kCorrupted)) {
              return confirm(s, ConfirmationKind::kAckMiss, AckCode{}, then_idle);
            }
            return confirm(s, ConfirmationKind::kAckRec, AckCode{s.payload}, then_idle);
          }
        }
        return s;
      });
      break;
    }

    case LinkMode::kWaitGap:
      listen([&](Signal sig) { return sig.is(SignalKind::kSubActGap) ? idle(s) : s; });
      break;

    case LinkMode::kReceive:
      listen([&](Signal sig) -> LinkState {
        if (sig.is(SignalKind::kSubActGap)) return idle(s);
        LinkState t = s;
        switch (s.cursor) {
          case 0:
            t.cursor = 1;
            t.peer = sig.is_dest() && !sig.dest_value().is_broadcast() &&
                             sig.dest_value().code() < n_
                         ? sig.dest_value().code()
                         : LinkState::kNoPeer;
            return t;
          case 1: {
            // A single signal followed by a terminator is an ack packet.
            if (terminates_packet(sig)) return idle(s);
            if (s.peer == LinkState::kNoPeer || !sig.is_dest()) return ignore(s);
            Dest d = sig.dest_value();
            t.target = d.code();
            if (d.is_broadcast()) {
              t.cursor = 2;
              return t;
            }
            if (d.node_id() == id_) {
              t.mode = LinkMode::kNeedImm;
              return t;
            }
            return ignore(s);
          }
          case 2:
            if (!sig.is_header() || !sig.valid()) return ignore(s);
            t.cursor = 3;
            return t;
          case 3:
            if (!sig.is_data()) return ignore(s);
            t.cursor = 4;
            t.payload = sig.payload();
            return t.with(LinkState::kCorrupted, !sig.valid());
          default: {
            if (sig.is(SignalKind::kDummy)) return s;
            if (!terminates_packet(sig)) return ignore(s);
            bool bcast = Dest::from_code(s.target).is_broadcast();
            // A broadcast with an invalid data checksum is dropped silently.
            if (bcast && s.has(LinkState::kCorrupted)) return wait_gap(s);
            t.mode = LinkMode::kIndicate;
            t.cursor = 0;
            t.phase = static_cast<std::uint8_t>(bcast ? IndicationKind::kBroadcast
                                                      : IndicationKind::kAddressed);
            return t;
          }
        }
      });
      break;

    case LinkMode::kNeedImm: {
      LinkState t = s;
      t.mode = LinkMode::kReceive;
      t.cursor = 2;
      emit(Label(Gate::kPaReq, {Offer::node(id_), Offer::arb_kind(ArbKind::kImmediate)}),
           t.with(LinkState::kImmediate));
      break;
    }

    case LinkMode::kIndicate: {
      auto kind = static_cast<IndicationKind>(s.phase);
      Crc crc = s.has(LinkState::kCorrupted) ? Crc::kCorrupted : Crc::kValid;
      Label l(Gate::kLdInd, {Offer::node(id_), Offer::indication(kind),
                             Offer::node(NodeId{s.peer}), Offer::data(Data{s.payload}),
                             Offer::crc(crc)});
      if (kind == IndicationKind::kBroadcast) {
        emit(l, wait_gap(s));
      } else {
        LinkState t = idle(s);
        t.mode = LinkMode::kAwaitWon;
        emit(l, t.with(LinkState::kImmediate));
      }
      break;
    }

    case LinkMode::kAwaitWon: {
      LinkState t = idle(s);
      t.mode = LinkMode::kSendAck;
      t.phase = static_cast<std::uint8_t>(SendAckStage::kAwaitResponse);
      emit(Label(Gate::kPaCon, {Offer::node(id_), Offer::arb_result(ArbResult::kWon)}), t);
      break;
    }

    case LinkMode::kSendAck: {
      auto stage = static_cast<SendAckStage>(s.phase);
      if (stage == SendAckStage::kAwaitResponse) {
        for (std::uint8_t a = 0; a < domains_.acks; ++a) {
          for (HoldRelease hr : {HoldRelease::kHold, HoldRelease::kRelease}) {
            LinkState t = s;
            t.phase = static_cast<std::uint8_t>(SendAckStage::kEmit);
            t.cursor = 0;
            t.payload = a;
            t = t.with(LinkState::kHold, hr == HoldRelease::kHold);
            emit(Label(Gate::kLdRes,
                       {Offer::node(id_), Offer::ack(AckCode{a}), Offer::hold_release(hr)}),
                 t);
          }
        }
        clocked_emit(Signal::prefix(), s);
        break;
      }
      bool hold = s.has(LinkState::kHold);
      Signal sig = s.cursor == 0   ? Signal::start()
                   : s.cursor == 1 ? Signal::ack(AckCode{s.payload})
                   : hold          ? Signal::prefix()
                                   : Signal::end();
      LinkState after = s;
      if (s.cursor < 2) {
        after.cursor = static_cast<std::uint8_t>(s.cursor + 1);
      } else if (hold) {
        after = idle(s);
        after.mode = LinkMode::kHolding;
      } else {
        after = idle(s);
      }
      clocked_emit(sig, after);
      break;
    }

    case LinkMode::kHolding: {
      if (!s.has_packet()) {
        offer_ldreq([&](std::uint8_t buf) {
          LinkState t = s;
          t.mode = LinkMode::kSend;
          t.cursor = 0;
          t.buffer = buf;
          return t;
        });
      }
      clocked_emit(Signal::prefix(), s);
      break;
    }

    case LinkMode::kIgnore: {
      if (s.has(LinkState::kImmediate)) {
        LinkState t = idle(s);
        t.mode = LinkMode::kIgnoreEnd;
        emit(Label(Gate::kPaCon, {Offer::node(id_), Offer::arb_result(ArbResult::kWon)}), t);
      }
      listen([&](Signal sig) { return sig.is(SignalKind::kSubActGap) ? idle(s) : s; });
      break;
    }

    case LinkMode::kIgnoreEnd: {
      LinkState after = idle(s);
      after.mode = LinkMode::kIgnore;
      clocked_emit(Signal::end(), after);
      break;
    }
  }
}

std::string to_string(LinkMode m) {
  switch (m) {
    case LinkMode::kIdle:
      return "Idle";
    case LinkMode::kArbWait:
      return "ArbWait";
    case LinkMode::kSend:
      return "Send";
    case LinkMode::kConfirm:
      return "Confirm";
    case LinkMode::kAwaitAck:
      return "AwaitAck";
    case LinkMode::kWaitGap:
      return "WaitGap";
    case LinkMode::kReceive:
      return "Receive";
    case LinkMode::kNeedImm:
      return "NeedImm";
    case LinkMode::kIndicate:
      return "Indicate";
    case LinkMode::kAwaitWon:
      return "AwaitWon";
    case LinkMode::kSendAck:
      return "SendAck";
    case LinkMode::kHolding:
      return "Holding";
    case LinkMode::kIgnore:
      return "Ignore";
    case LinkMode::kIgnoreEnd:
      return "IgnoreEnd";
  }
  return "?";
}

std::string LinkProcess::describe(std::uint64_t state) const {
  auto s = unpack_state<LinkState>(state);
  std::string out = name() + ":" + to_string(s.mode) + "(cursor=" + std::to_string(s.cursor) +
                    " phase=" + std::to_string(s.phase) + " flags=" + std::to_string(s.flags);
  if (s.mode == LinkMode::kReceive || s.mode == LinkMode::kIndicate) {
    out += " peer=" + std::to_string(s.peer) + " target=" + std::to_string(s.target);
  }
  out += " payload=" + std::to_string(s.payload) + ")";
  if (s.has_packet()) {
    out += " buffer=[" + to_string(s.buffered_dest()) + " " + to_string(s.buffered_data()) + "]";
  }
  return out;
}

}  // namespace firelink
