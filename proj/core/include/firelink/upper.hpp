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

// Transaction and application layers of one node.

#ifndef FIRELINK_UPPER_HPP_
#define FIRELINK_UPPER_HPP_

#include <string>
#include <vector>

#include "firelink/process.hpp"
#include "firelink/protocol.hpp"

namespace firelink {

/// ko keeps the historical behaviour where the transaction layer answers a
/// broadcast indication with LDRES, which no link ever accepts; ok drops it.
enum class Variant : std::uint8_t { kOk, kKo };

std::string to_string(Variant v);

enum class RequesterPhase : std::uint8_t {
  kIdle = 0,
  kHaveRequest,  // TDREQ taken, LDREQ owed
  kAwaitCon,     // link owns the packet
  kConfirm,      // TDCON owed
};

enum class ResponderPhase : std::uint8_t {
  kIdle = 0,
  kIndicate,       // TDIND owed
  kAwaitRes,       // waiting for the application's TDRES
  kRespond,        // LDRES owed
  kBcastRespond,   // ko only: LDRES after a broadcast, never accepted
  kHoldSend,       // concatenated response: LDREQ owed
  kHoldAwaitCon,   // concatenated response handed to the link
};

/// Requester and responder halves of the transaction layer; eight bytes.
struct TransState {
  RequesterPhase req = RequesterPhase::kIdle;
  std::uint8_t req_dest = 0;
  std::uint8_t req_data = 0;
  std::uint8_t req_conf = 0;  // ConfirmationKind << 4 | ack code
  ResponderPhase resp = ResponderPhase::kIdle;
  std::uint8_t ind = 0;       // IndicationKind << 7 | src << 3 | data
  std::uint8_t answer = 0;    // ack code << 1 | HoldRelease
  std::uint8_t unused = 0;

  static std::uint8_t encode_ind(IndicationKind k, NodeId src, Data d) {
    return static_cast<std::uint8_t>((static_cast<unsigned>(k) << 7) | (src.value << 3) | d.value);
  }
  IndicationKind ind_kind() const { return static_cast<IndicationKind>(ind >> 7); }
  NodeId ind_src() const { return NodeId{static_cast<std::uint8_t>((ind >> 3) & 0x7)}; }
  Data ind_data() const { return Data{static_cast<std::uint8_t>(ind & 0x7)}; }

  friend bool operator==(const TransState&, const TransState&) = default;
};

class TransProcess final : public Process {
 public:
  TransProcess(NodeId id, int n, Variant variant, Domains domains = {});

  std::string name() const override { return "Trans" + std::to_string(id_.value); }
  std::uint64_t initial() const override { return pack_state(TransState{}); }
  void step(std::uint64_t state, std::vector<Step>& out) const override;
  std::string describe(std::uint64_t state) const override;

  std::vector<std::pair<Label, TransState>> successors(const TransState& s) const;

 private:
  void step_typed(const TransState& s, std::vector<Step>& out) const;

  NodeId id_;
  int n_;
  Variant variant_;
  Domains domains_;
};

/// What one application does: how many requests, to whom, and which answers
/// it may give to addressed indications.
struct AppliProfile {
  int budget = 0;
  std::vector<Dest> targets;
  std::vector<HoldRelease> answers{HoldRelease::kRelease};

  friend bool operator==(const AppliProfile&, const AppliProfile&) = default;
};

struct AppliState {
  std::uint8_t budget = 0;
  std::uint8_t awaiting = 0;  // TDREQ issued, TDCON not yet received
  std::uint8_t pending = 0;   // addressed TDIND received, TDRES owed
  std::uint8_t unused[5] = {};

  bool done() const { return budget == 0 && !awaiting && !pending; }

  friend bool operator==(const AppliState&, const AppliState&) = default;
};

/// The application. Once its budget is spent and nothing is outstanding it
/// offers TERMINATED, while still serving indications from other nodes.
class AppliProcess final : public Process {
 public:
  AppliProcess(NodeId id, int n, AppliProfile profile, Domains domains = {});

  const AppliProfile& profile() const { return profile_; }

  std::string name() const override { return "Appli" + std::to_string(id_.value); }
  std::uint64_t initial() const override;
  void step(std::uint64_t state, std::vector<Step>& out) const override;
  std::string describe(std::uint64_t state) const override;

  std::vector<std::pair<Label, AppliState>> successors(const AppliState& s) const;

 private:
  void step_typed(const AppliState& s, std::vector<Step>& out) const;

  NodeId id_;
  int n_;
  AppliProfile profile_;
  Domains domains_;
};

/// Every confirmation a link can report, in a fixed order.
std::vector<Confirmation> all_confirmations(const Domains& domains);
Label confirmation_label(Gate gate, NodeId id, Confirmation c);

}  // namespace firelink

#endif  // FIRELINK_UPPER_HPP_
