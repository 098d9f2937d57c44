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

#ifndef FIRELINK_LABEL_HPP_
#define FIRELINK_LABEL_HPP_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

#include "firelink/protocol.hpp"

namespace firelink {

/// The finite gate vocabulary. Per-node instances of a gate carry the node id
/// as their first offer instead of being distinct gates.
enum class Gate : std::uint8_t {
  kTau = 0,
  kTerminated,
  kLdReq,
  kLdCon,
  kLdInd,
  kLdRes,
  kPaReq,
  kPaCon,
  kPdReq,
  kPdInd,
  kPcInd,
  kTdReq,
  kTdInd,
  kTdRes,
  kTdCon,
};
inline constexpr int kGateCount = 15;

std::string_view gate_name(Gate g);
std::optional<Gate> gate_from_name(std::string_view name);

/// A set of gates, used for synchronisation and hiding.
class GateSet {
 public:
  constexpr GateSet() = default;
  constexpr GateSet(std::initializer_list<Gate> gates) {
    for (Gate g : gates) bits_ |= bit(g);
  }

  constexpr bool contains(Gate g) const { return (bits_ & bit(g)) != 0; }
  constexpr GateSet operator|(GateSet other) const { return GateSet(bits_ | other.bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint32_t bits() const { return bits_; }

  friend constexpr bool operator==(GateSet, GateSet) = default;

 private:
  constexpr explicit GateSet(std::uint32_t bits) : bits_(bits) {}
  static constexpr std::uint32_t bit(Gate g) { return 1u << static_cast<unsigned>(g); }
  std::uint32_t bits_ = 0;
};

namespace gates {
inline constexpr GateSet kLinkTrans{Gate::kLdReq, Gate::kLdCon, Gate::kLdInd, Gate::kLdRes};
inline constexpr GateSet kTransAppli{Gate::kTdReq, Gate::kTdInd, Gate::kTdRes, Gate::kTdCon};
inline constexpr GateSet kPhy{Gate::kPaReq, Gate::kPaCon, Gate::kPdReq, Gate::kPdInd,
                              Gate::kPcInd};
inline constexpr GateSet kUpper = kLinkTrans | kTransAppli;
inline constexpr GateSet kTermination{Gate::kTerminated};
}  // namespace gates

enum class OfferKind : std::uint8_t {
  kNone = 0,
  kNode,
  kDest,
  kSignal,
  kData,
  kAck,
  kCrc,
  kConfirmation,
  kIndication,
  kArbKind,
  kArbResult,
  kHoldRelease,
};

/// One value offered on a gate, stored as a tagged byte.
struct Offer {
  OfferKind kind = OfferKind::kNone;
  std::uint8_t value = 0;

  static constexpr Offer node(NodeId id) { return {OfferKind::kNode, id.value}; }
  static constexpr Offer dest(Dest d) { return {OfferKind::kDest, d.code()}; }
  static constexpr Offer signal(Signal s) { return {OfferKind::kSignal, s.encode()}; }
  static constexpr Offer data(Data d) { return {OfferKind::kData, d.value}; }
  static constexpr Offer ack(AckCode a) { return {OfferKind::kAck, a.value}; }
  static constexpr Offer crc(Crc c) { return {OfferKind::kCrc, static_cast<std::uint8_t>(c)}; }
  static constexpr Offer confirmation(ConfirmationKind k) {
    return {OfferKind::kConfirmation, static_cast<std::uint8_t>(k)};
  }
  static constexpr Offer indication(IndicationKind k) {
    return {OfferKind::kIndication, static_cast<std::uint8_t>(k)};
  }
  static constexpr Offer arb_kind(ArbKind k) {
    return {OfferKind::kArbKind, static_cast<std::uint8_t>(k)};
  }
  static constexpr Offer arb_result(ArbResult r) {
    return {OfferKind::kArbResult, static_cast<std::uint8_t>(r)};
  }
  static constexpr Offer hold_release(HoldRelease h) {
    return {OfferKind::kHoldRelease, static_cast<std::uint8_t>(h)};
  }

  friend constexpr bool operator==(Offer, Offer) = default;
};

std::string to_string(Offer o);

/// A transition label: a gate plus its value offers.
///
/// Labels compare structurally; render_label() is injective on well-formed
/// labels, so structural equality coincides with equality of the rendered text.
class Label {
 public:
  static constexpr int kMaxOffers = 5;

  constexpr Label() = default;
  constexpr Label(Gate gate, std::initializer_list<Offer> offers) : gate_(gate) {
    for (Offer o : offers) offers_[size_++] = o;
  }

  static constexpr Label tau() { return Label(Gate::kTau, {}); }
  static constexpr Label terminated() { return Label(Gate::kTerminated, {}); }

  constexpr Gate gate() const { return gate_; }
  constexpr int size() const { return size_; }
  constexpr const Offer& offer(int i) const { return offers_[i]; }
  constexpr bool is_tau() const { return gate_ == Gate::kTau; }

  /// The node id carried as first offer, if any.
  std::optional<NodeId> node() const;

  /// Same offers, different gate. Used by hiding.
  constexpr Label with_gate(Gate g) const {
    Label copy = *this;
    copy.gate_ = g;
    if (g == Gate::kTau) {
      copy.size_ = 0;
      copy.offers_ = {};
    }
    return copy;
  }

  /// Packs gate, arity and offer values into 51 bits. Offer kinds are fixed
  /// by (gate, arity, position) on well-formed labels, so the key is
  /// injective there; it orders labels for rendezvous matching.
  constexpr std::uint64_t key() const {
    std::uint64_t k = (static_cast<std::uint64_t>(gate_) << 3) | size_;
    for (int i = 0; i < kMaxOffers; ++i) k = (k << 8) | (i < size_ ? offers_[i].value : 0);
    return k;
  }

  friend constexpr bool operator==(const Label&, const Label&) = default;

  template <typename H>
  friend H AbslHashValue(H h, const Label& l) {
    h = H::combine(std::move(h), static_cast<std::uint8_t>(l.gate_), l.size_);
    for (int i = 0; i < l.size_; ++i) {
      h = H::combine(std::move(h), static_cast<std::uint8_t>(l.offers_[i].kind),
                     l.offers_[i].value);
    }
    return h;
  }

 private:
  Gate gate_ = Gate::kTau;
  std::uint8_t size_ = 0;
  std::array<Offer, kMaxOffers> offers_{};
};

/// Canonical text: `GATE !o1 !o2 ...`; the internal action renders as `i`.
std::string render_label(const Label& l);

/// Checks the per-gate offer arities and offer kinds.
bool well_formed(const Label& l);

inline constexpr std::string_view kTauText = "i";
inline constexpr std::string_view kTerminatedText = "TERMINATED";

}  // namespace firelink

#endif  // FIRELINK_LABEL_HPP_
