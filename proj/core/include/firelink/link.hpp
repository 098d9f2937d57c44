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

// The asynchronous link layer of one node.
//
// Control points and the conventional names used for them in earlier
// process-algebra models of the same protocol (best-effort correspondence):
//
//   kIdle       Link1     initial state, optional buffered request
//   kArbWait    Link2req  fair arbitration requested, waiting for PACON
//   kSend       Link3     clocked emission of START, 4 packet signals, END
//   kConfirm    Link3RE   LDCON owed to the transaction layer
//   kAwaitAck   Link3RA   waiting for the acknowledge packet
//   kWaitGap    Link7     ignoring everything until a subaction gap
//   kReceive    Link4DH / Link4RH / Link4RD / Link4RE   by cursor 0-1 / 2 / 3 / 4
//   kNeedImm    Link2resp addressed to us: immediate arbitration owed
//   kIndicate   Link4BRec (broadcast) / Link4DRec (addressed)
//   kAwaitWon   Link5     waiting for the immediate arbitration result
//   kSendAck    Link5     prefix filler, then START ACK END|PREFIX
//   kHolding    Link6     hold: prefix filler until the response request
//   kIgnore     Link7     discarding a packet until the gap
//   kIgnoreEnd  Link7     won immediate arbitration for a bad packet, sends END

#ifndef FIRELINK_LINK_HPP_
#define FIRELINK_LINK_HPP_

#include <optional>
#include <string>

#include "firelink/process.hpp"
#include "firelink/protocol.hpp"

namespace firelink {

enum class LinkMode : std::uint8_t {
  kIdle = 0,
  kArbWait,
  kSend,
  kConfirm,
  kAwaitAck,
  kWaitGap,
  kReceive,
  kNeedImm,
  kIndicate,
  kAwaitWon,
  kSendAck,
  kHolding,
  kIgnore,
  kIgnoreEnd,
};

enum class AckPhase : std::uint8_t { kExpectStart = 0, kExpectAck, kExpectEnd };
enum class SendAckStage : std::uint8_t { kAwaitResponse = 0, kEmit };

/// Control state of one link layer; exactly eight bytes so it packs losslessly.
///
/// Field use per mode:
///   buffer   every mode: the pending outgoing packet (0 = none)
///   cursor   kSend: next signal index 0..5; kReceive: signals seen after
///            START; kSendAck/kEmit: ack packet index 0..2
///   phase    kAwaitAck: AckPhase; kSendAck: SendAckStage; kConfirm:
///            ConfirmationKind; kIndicate: IndicationKind
///   flags    bit set of kClocked, kImmediate, kCorrupted, kHold, kThenIdle
///   peer     kReceive/kIndicate: source marker of the packet (kNoPeer if the
///            first signal was not a destination signal)
///   payload  received data value, or the ack code being sent / received
///   target   kReceive: destination code seen in the second signal
struct LinkState {
  static constexpr std::uint8_t kClocked = 1;
  static constexpr std::uint8_t kImmediate = 2;  // PAREQ IMMEDIATE issued, PACON pending
  static constexpr std::uint8_t kCorrupted = 4;
  static constexpr std::uint8_t kHold = 8;
  static constexpr std::uint8_t kThenIdle = 16;  // kConfirm returns to kIdle, not kWaitGap
  static constexpr std::uint8_t kNoPeer = 0xff;

  LinkMode mode = LinkMode::kIdle;
  std::uint8_t buffer = 0;
  std::uint8_t cursor = 0;
  std::uint8_t phase = 0;
  std::uint8_t flags = 0;
  std::uint8_t peer = 0;
  std::uint8_t payload = 0;
  std::uint8_t target = 0;

  bool has(std::uint8_t flag) const { return (flags & flag) != 0; }
  LinkState with(std::uint8_t flag, bool on = true) const {
    LinkState s = *this;
    s.flags = on ? (flags | flag) : (flags & ~flag);
    return s;
  }

  static std::uint8_t encode_buffer(Dest dest, Data data) {
    return static_cast<std::uint8_t>(0x80 | (dest.code() << 3) | data.value);
  }
  bool has_packet() const { return buffer != 0; }
  Dest buffered_dest() const { return Dest::from_code((buffer >> 3) & 0x7); }
  Data buffered_data() const { return Data{static_cast<std::uint8_t>(buffer & 0x7)}; }

  friend bool operator==(const LinkState&, const LinkState&) = default;
};

class LinkProcess final : public Process {
 public:
  /// Throws std::invalid_argument unless 2 <= n <= kMaxNodes and id < n.
  LinkProcess(NodeId id, int n, Domains domains = {});

  NodeId id() const { return id_; }
  int nodes() const { return n_; }

  std::string name() const override;
  std::uint64_t initial() const override;
  void step(std::uint64_t state, std::vector<Step>& out) const override;
  std::string describe(std::uint64_t state) const override;

  /// Typed variants of the Process interface.
  std::vector<std::pair<Label, LinkState>> successors(const LinkState& s) const;
  static LinkState initial_state() { return LinkState{}; }

  /// The packet held in `s.buffer`, with this link as source.
  std::optional<Packet> buffered_packet(const LinkState& s) const;

 private:
  void step_typed(const LinkState& s, std::vector<Step>& out) const;

  Label pdind(Signal sig) const;
  Label pdreq(Signal sig) const;
  Label pcind() const;

  NodeId id_;
  int n_;
  Domains domains_;
  std::vector<Signal> alphabet_;
};

std::string to_string(LinkMode m);

}  // namespace firelink

#endif  // FIRELINK_LINK_HPP_
