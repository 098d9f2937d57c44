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

#include "firelink/protocol.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace firelink {

Signal corrupt(Signal s) {
  switch (s.kind()) {
    case SignalKind::kHeader:
      return Signal::header(Header{s.payload()}, Crc::kCorrupted);
    case SignalKind::kData:
      return Signal::data(Data{s.payload()}, Crc::kCorrupted);
    case SignalKind::kAck:
      return Signal::ack(AckCode{s.payload()}, Crc::kCorrupted);
    default:
      throw std::domain_error("corrupt: signal " + to_string(s) + " carries no checksum");
  }
}

std::vector<Signal> signal_alphabet(int n, const Domains& domains) {
  std::vector<Signal> out = {Signal::start(), Signal::end(), Signal::prefix(),
                             Signal::subaction_gap(), Signal::dummy()};
  for (int i = 0; i < n; ++i) {
    out.push_back(Signal::dest(Dest::node(NodeId{static_cast<std::uint8_t>(i)})));
  }
  out.push_back(Signal::dest(Dest::broadcast()));
  for (Crc c : {Crc::kValid, Crc::kCorrupted}) {
    for (std::uint8_t h = 0; h < domains.headers; ++h) out.push_back(Signal::header(Header{h}, c));
    for (std::uint8_t d = 0; d < domains.data; ++d) out.push_back(Signal::data(Data{d}, c));
    for (std::uint8_t a = 0; a < domains.acks; ++a) out.push_back(Signal::ack(AckCode{a}, c));
  }
  return out;
}

std::string to_string(Dest d) {
  return d.is_broadcast() ? "BCAST" : std::to_string(d.node_id().value);
}

std::string to_string(Crc c) { return c == Crc::kValid ? "VALID" : "CORRUPTED"; }
std::string to_string(Header h) { return "h" + std::to_string(h.value); }
std::string to_string(Data d) { return "d" + std::to_string(d.value); }
std::string to_string(AckCode a) { return "a" + std::to_string(a.value); }

std::string to_string(Signal s) {
  switch (s.kind()) {
    case SignalKind::kStart:
      return "START";
    case SignalKind::kEnd:
      return "END";
    case SignalKind::kPrefix:
      return "PREFIX";
    case SignalKind::kSubActGap:
      return "SUBACTGAP";
    case SignalKind::kDummy:
      return "DUMMY";
    case SignalKind::kDest:
      return "DEST !" + to_string(s.dest_value());
    case SignalKind::kHeader:
      return "HEADER !" + to_string(Header{s.payload()}) + " !" + to_string(s.crc());
    case SignalKind::kData:
      return "DATA !" + to_string(Data{s.payload()}) + " !" + to_string(s.crc());
    case SignalKind::kAck:
      return "ACK !" + to_string(AckCode{s.payload()}) + " !" + to_string(s.crc());
  }
  return "?";
}

BoolTable BoolTable::constant(int n, bool value) {
  assert(n >= 0 && n <= 8);
  auto bits = value ? static_cast<std::uint8_t>((1u << n) - 1u) : std::uint8_t{0};
  return BoolTable(static_cast<std::uint8_t>(n), bits);
}

bool BoolTable::get(NodeId i) const {
  assert(i.value < size_);
  return (bits_ >> i.value) & 1u;
}

BoolTable BoolTable::set(NodeId i, bool value) const {
  assert(i.value < size_);
  auto mask = static_cast<std::uint8_t>(1u << i.value);
  return BoolTable(size_, value ? (bits_ | mask) : (bits_ & ~mask));
}

int BoolTable::count() const { return std::popcount(bits_); }

std::string to_string(ArbKind k) { return k == ArbKind::kFair ? "FAIR" : "IMMEDIATE"; }
std::string to_string(ArbResult r) { return r == ArbResult::kWon ? "WON" : "LOST"; }
std::string to_string(HoldRelease h) { return h == HoldRelease::kHold ? "HOLD" : "RELEASE"; }
std::string to_string(IndicationKind k) {
  return k == IndicationKind::kAddressed ? "ADDR" : "BCAST";
}
std::string to_string(ConfirmationKind k) {
  switch (k) {
    case ConfirmationKind::kAckRec:
      return "ACKREC";
    case ConfirmationKind::kAckMiss:
      return "ACKMISS";
    case ConfirmationKind::kBroadSent:
      return "BROADSENT";
  }
  return "?";
}

}  // namespace firelink
