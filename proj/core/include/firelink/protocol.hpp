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

#ifndef FIRELINK_PROTOCOL_HPP_
#define FIRELINK_PROTOCOL_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace firelink {

// Destinations pack into three bits; the all-ones pattern is broadcast.
inline constexpr int kMaxNodes = 7;
// Header, data and ack payloads pack into three bits as well.
inline constexpr int kMaxDomain = 8;

struct NodeId {
  std::uint8_t value = 0;

  friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

/// A packet destination: either one node or every other node.
class Dest {
 public:
  static constexpr std::uint8_t kBroadcastCode = 7;

  constexpr Dest() = default;
  static constexpr Dest node(NodeId id) { return Dest(id.value); }
  static constexpr Dest broadcast() { return Dest(kBroadcastCode); }
  static constexpr Dest from_code(std::uint8_t code) { return Dest(code); }

  constexpr bool is_broadcast() const { return code_ == kBroadcastCode; }
  constexpr NodeId node_id() const { return NodeId{code_}; }
  constexpr std::uint8_t code() const { return code_; }

  friend constexpr auto operator<=>(Dest, Dest) = default;

 private:
  constexpr explicit Dest(std::uint8_t code) : code_(code) {}
  std::uint8_t code_ = 0;
};

enum class Crc : std::uint8_t { kValid = 0, kCorrupted = 1 };

struct Header {
  std::uint8_t value = 0;
  friend constexpr auto operator<=>(Header, Header) = default;
};
struct Data {
  std::uint8_t value = 0;
  friend constexpr auto operator<=>(Data, Data) = default;
};
struct AckCode {
  std::uint8_t value = 0;
  friend constexpr auto operator<=>(AckCode, AckCode) = default;
};

/// Sizes of the opaque payload domains. The default is one value each.
struct Domains {
  std::uint8_t headers = 1;
  std::uint8_t data = 1;
  std::uint8_t acks = 1;

  friend constexpr bool operator==(const Domains&, const Domains&) = default;
};

enum class SignalKind : std::uint8_t {
  kStart = 0,
  kEnd,
  kPrefix,
  kSubActGap,
  kDummy,
  kDest,
  kHeader,
  kData,
  kAck,
};

/// Everything a link layer can put on, or read from, the cable.
///
/// Only header, data and ack signals carry a checksum status; the other kinds
/// always report Crc::kValid.
class Signal {
 public:
  constexpr Signal() = default;

  static constexpr Signal start() { return Signal(SignalKind::kStart, 0, Crc::kValid); }
  static constexpr Signal end() { return Signal(SignalKind::kEnd, 0, Crc::kValid); }
  static constexpr Signal prefix() { return Signal(SignalKind::kPrefix, 0, Crc::kValid); }
  static constexpr Signal subaction_gap() {
    return Signal(SignalKind::kSubActGap, 0, Crc::kValid);
  }
  static constexpr Signal dummy() { return Signal(SignalKind::kDummy, 0, Crc::kValid); }
  static constexpr Signal dest(Dest d) { return Signal(SignalKind::kDest, d.code(), Crc::kValid); }
  static constexpr Signal header(Header h, Crc c = Crc::kValid) {
    return Signal(SignalKind::kHeader, h.value, c);
  }
  static constexpr Signal data(Data d, Crc c = Crc::kValid) {
    return Signal(SignalKind::kData, d.value, c);
  }
  static constexpr Signal ack(AckCode a, Crc c = Crc::kValid) {
    return Signal(SignalKind::kAck, a.value, c);
  }

  constexpr SignalKind kind() const { return kind_; }
  constexpr bool is(SignalKind k) const { return kind_ == k; }
  constexpr bool is_dest() const { return kind_ == SignalKind::kDest; }
  constexpr bool is_header() const { return kind_ == SignalKind::kHeader; }
  constexpr bool is_data() const { return kind_ == SignalKind::kData; }
  constexpr bool is_ack() const { return kind_ == SignalKind::kAck; }
  constexpr bool is_corruptible() const { return is_header() || is_data() || is_ack(); }

  constexpr Crc crc() const { return crc_; }
  constexpr bool valid() const { return crc_ == Crc::kValid; }
  constexpr Dest dest_value() const { return Dest::from_code(value_); }
  constexpr std::uint8_t payload() const { return value_; }

  /// One-byte encoding: kind in the high nibble, crc bit, three payload bits.
  constexpr std::uint8_t encode() const {
    return static_cast<std::uint8_t>((static_cast<unsigned>(kind_) << 4) |
                                     (static_cast<unsigned>(crc_) << 3) | value_);
  }
  static constexpr Signal decode(std::uint8_t byte) {
    return Signal(static_cast<SignalKind>(byte >> 4), byte & 0x7,
                  static_cast<Crc>((byte >> 3) & 0x1));
  }

  friend constexpr auto operator<=>(Signal, Signal) = default;

 private:
  constexpr Signal(SignalKind kind, std::uint8_t value, Crc crc)
      : kind_(kind), value_(value), crc_(crc) {}

  SignalKind kind_ = SignalKind::kStart;
  std::uint8_t value_ = 0;
  Crc crc_ = Crc::kValid;
};

/// Returns `s` with its checksum marked corrupted.
/// Throws std::domain_error unless `s` is a header, data or ack signal.
Signal corrupt(Signal s);

/// Every signal that can appear on a bus of `n` nodes with the given domains.
std::vector<Signal> signal_alphabet(int n, const Domains& domains);

std::string to_string(Signal s);
std::string to_string(Dest d);
std::string to_string(Crc c);
std::string to_string(Header h);
std::string to_string(Data d);
std::string to_string(AckCode a);

/// An asynchronous packet: source marker, destination, header, data.
class Packet {
 public:
  constexpr Packet() = default;
  constexpr Packet(NodeId source, Dest dest, Header header, Data data)
      : source_(source), dest_(dest), header_(header), data_(data) {}

  constexpr NodeId source() const { return source_; }
  constexpr Dest dest() const { return dest_; }
  constexpr Header header() const { return header_; }
  constexpr Data data() const { return data_; }

  /// The four signals in wire order.
  constexpr std::array<Signal, 4> signals() const {
    return {Signal::dest(Dest::node(source_)), Signal::dest(dest_), Signal::header(header_),
            Signal::data(data_)};
  }

  friend constexpr auto operator<=>(const Packet&, const Packet&) = default;

 private:
  NodeId source_{};
  Dest dest_{};
  Header header_{};
  Data data_{};
};

/// A table of n Booleans indexed by node id, with value semantics.
class BoolTable {
 public:
  constexpr BoolTable() = default;

  static BoolTable constant(int n, bool value);
  static constexpr BoolTable from_bits(int n, std::uint8_t bits) {
    return BoolTable(static_cast<std::uint8_t>(n), bits);
  }

  bool get(NodeId i) const;
  BoolTable set(NodeId i, bool value) const;
  constexpr bool any() const { return bits_ != 0; }
  int count() const;
  constexpr int size() const { return size_; }
  constexpr std::uint8_t bits() const { return bits_; }

  friend constexpr bool operator==(const BoolTable&, const BoolTable&) = default;

 private:
  constexpr BoolTable(std::uint8_t size, std::uint8_t bits) : size_(size), bits_(bits) {}

  std::uint8_t size_ = 0;
  std::uint8_t bits_ = 0;
};

enum class ArbKind : std::uint8_t { kFair, kImmediate };
enum class ArbResult : std::uint8_t { kWon, kLost };
enum class HoldRelease : std::uint8_t { kHold, kRelease };
enum class IndicationKind : std::uint8_t { kAddressed, kBroadcast };

enum class ConfirmationKind : std::uint8_t { kAckRec, kAckMiss, kBroadSent };

/// What the link layer reports to the transaction layer after sending.
struct Confirmation {
  ConfirmationKind kind = ConfirmationKind::kAckMiss;
  AckCode ack{};  // meaningful for kAckRec only

  static constexpr Confirmation ack_received(AckCode a) {
    return {ConfirmationKind::kAckRec, a};
  }
  static constexpr Confirmation ack_missing() { return {ConfirmationKind::kAckMiss, {}}; }
  static constexpr Confirmation broadcast_sent() { return {ConfirmationKind::kBroadSent, {}}; }

  friend constexpr bool operator==(const Confirmation&, const Confirmation&) = default;
};

std::string to_string(ArbKind k);
std::string to_string(ArbResult r);
std::string to_string(HoldRelease h);
std::string to_string(IndicationKind k);
std::string to_string(ConfirmationKind k);

}  // namespace firelink

#endif  // FIRELINK_PROTOCOL_HPP_
