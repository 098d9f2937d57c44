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

#include "firelink/label.hpp"

#include <array>

namespace firelink {

namespace {

constexpr std::array<std::string_view, kGateCount> kGateNames = {
    "i",     "TERMINATED", "LDREQ", "LDCON", "LDIND", "LDRES", "PAREQ", "PACON",
    "PDREQ", "PDIND",      "PCIND", "TDREQ", "TDIND", "TDRES", "TDCON",
};

bool kinds_are(const Label& l, std::initializer_list<OfferKind> kinds) {
  if (l.size() != static_cast<int>(kinds.size())) return false;
  int i = 0;
  for (OfferKind k : kinds) {
    if (l.offer(i++).kind != k) return false;
  }
  return true;
}

// Confirmations carry the ack code exactly when an ack was received.
bool confirmation_ok(const Label& l) {
  using K = OfferKind;
  if (kinds_are(l, {K::kNode, K::kConfirmation})) {
    return l.offer(1).value != static_cast<std::uint8_t>(ConfirmationKind::kAckRec);
  }
  if (kinds_are(l, {K::kNode, K::kConfirmation, K::kAck})) {
    return l.offer(1).value == static_cast<std::uint8_t>(ConfirmationKind::kAckRec);
  }
  return false;
}

}  // namespace

std::string_view gate_name(Gate g) { return kGateNames[static_cast<int>(g)]; }

std::optional<Gate> gate_from_name(std::string_view name) {
  for (int i = 0; i < kGateCount; ++i) {
    if (kGateNames[i] == name) return static_cast<Gate>(i);
  }
  return std::nullopt;
}

std::string to_string(Offer o) {
  switch (o.kind) {
    case OfferKind::kNone:
      return "?";
    case OfferKind::kNode:
      return std::to_string(o.value);
    case OfferKind::kDest:
      return to_string(Dest::from_code(o.value));
    case OfferKind::kSignal:
      return to_string(Signal::decode(o.value));
    case OfferKind::kData:
      return to_string(Data{o.value});
    case OfferKind::kAck:
      return to_string(AckCode{o.value});
    case OfferKind::kCrc:
      return to_string(static_cast<Crc>(o.value));
    case OfferKind::kConfirmation:
      return to_string(static_cast<ConfirmationKind>(o.value));
    case OfferKind::kIndication:
      return to_string(static_cast<IndicationKind>(o.value));
    case OfferKind::kArbKind:
      return to_string(static_cast<ArbKind>(o.value));
    case OfferKind::kArbResult:
      return to_string(static_cast<ArbResult>(o.value));
    case OfferKind::kHoldRelease:
      return to_string(static_cast<HoldRelease>(o.value));
  }
  return "?";
}

std::optional<NodeId> Label::node() const {
  if (size_ == 0 || offers_[0].kind != OfferKind::kNode) return std::nullopt;
  return NodeId{offers_[0].value};
}

std::string render_label(const Label& l) {
  std::string out(gate_name(l.gate()));
  for (int i = 0; i < l.size(); ++i) {
    out += " !";
    out += to_string(l.offer(i));
  }
  return out;
}

bool well_formed(const Label& l) {
  using K = OfferKind;
  switch (l.gate()) {
    case Gate::kTau:
    case Gate::kTerminated:
      return l.size() == 0;
    case Gate::kLdReq:
    case Gate::kTdReq:
      return kinds_are(l, {K::kNode, K::kDest, K::kData});
    case Gate::kLdCon:
    case Gate::kTdCon:
      return confirmation_ok(l);
    case Gate::kLdInd:
      return kinds_are(l, {K::kNode, K::kIndication, K::kNode, K::kData, K::kCrc});
    case Gate::kTdInd:
      return kinds_are(l, {K::kNode, K::kIndication, K::kNode, K::kData});
    case Gate::kLdRes:
    case Gate::kTdRes:
      return kinds_are(l, {K::kNode, K::kAck, K::kHoldRelease});
    case Gate::kPaReq:
      return kinds_are(l, {K::kNode, K::kArbKind});
    case Gate::kPaCon:
      return kinds_are(l, {K::kNode, K::kArbResult});
    case Gate::kPdReq:
    case Gate::kPdInd:
      return kinds_are(l, {K::kNode, K::kSignal});
    case Gate::kPcInd:
      return kinds_are(l, {K::kNode});
  }
  return false;
}

}  // namespace firelink
