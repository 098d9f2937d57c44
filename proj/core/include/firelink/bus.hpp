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

// The n physical layers and the cable, modelled together as one process.
//
// The bus arbitrates (fair requests at most once per fairness interval,
// immediate requests for acknowledgements), clocks the owner with PCIND,
// relays every signal of the owner to all other nodes and injects faults on
// the way: destination invalidation, checksum corruption, signal loss and a
// trailing dummy signal after data.

#ifndef FIRELINK_BUS_HPP_
#define FIRELINK_BUS_HPP_

#include <string>

#include "firelink/process.hpp"
#include "firelink/protocol.hpp"

namespace firelink {

struct Faults {
  bool invalidate_dest = true;
  bool corrupt = true;
  bool drop = true;
  bool dummy = true;

  static Faults none() { return {false, false, false, false}; }
  bool any() const { return invalidate_dest || corrupt || drop || dummy; }

  friend bool operator==(const Faults&, const Faults&) = default;
};

enum class BusPhase : std::uint8_t {
  kIdle = 0,
  kDecide,
  kBusy,
  kDistribute,
  kConfirm,
  kResolve,
  kGap,
};

/// Control state of the bus; eight bytes.
///
///   fairness   nodes that won fair arbitration in this fairness interval
///   immediate  kBusy/kDistribute: pending immediate requests;
///              kConfirm/kResolve: the nodes that were granted the bus
///   marks      recipients that were handed an invalidated destination
///   node       kDecide: requester; kBusy: owner; kDistribute: sender;
///   signal     kDistribute: the signal being relayed (Signal::encode)
///   cursor     kDistribute/kGap: next recipient; kConfirm: next owner;
///              kBusy: 1 + node owed a PACON LOST, 0 if none
///   flags      kClocked, kDummyOk, kResetGap, kConfirmClock
struct BusState {
  static constexpr std::uint8_t kClocked = 1;       // owner got its PCIND
  static constexpr std::uint8_t kDummyOk = 2;       // data round just ended
  static constexpr std::uint8_t kResetGap = 4;      // gap is an arbitration reset
  static constexpr std::uint8_t kConfirmClock = 8;  // kConfirm: PACON done, now PCIND

  BusPhase phase = BusPhase::kIdle;
  std::uint8_t fairness = 0;
  std::uint8_t immediate = 0;
  std::uint8_t marks = 0;
  std::uint8_t node = 0;
  std::uint8_t signal = 0;
  std::uint8_t cursor = 0;
  std::uint8_t flags = 0;

  bool has(std::uint8_t flag) const { return (flags & flag) != 0; }
  BoolTable fairness_table(int n) const { return BoolTable::from_bits(n, fairness); }
  BoolTable immediate_table(int n) const { return BoolTable::from_bits(n, immediate); }
  BoolTable marks_table(int n) const { return BoolTable::from_bits(n, marks); }

  friend bool operator==(const BusState&, const BusState&) = default;
};

class BusProcess final : public Process {
 public:
  /// Throws std::invalid_argument unless 2 <= n <= kMaxNodes.
  explicit BusProcess(int n, Faults faults = {}, Domains domains = {});

  int nodes() const { return n_; }
  const Faults& faults() const { return faults_; }

  std::string name() const override { return "Bus"; }
  std::uint64_t initial() const override;
  void step(std::uint64_t state, std::vector<Step>& out) const override;
  std::string describe(std::uint64_t state) const override;

  std::vector<std::pair<Label, BusState>> successors(const BusState& s) const;
  static BusState initial_state() { return BusState{}; }

  /// Every signal a recipient may observe when `sig` is relayed to it, and
  /// whether the recipient becomes marked. Excludes the drop branch.
  std::vector<std::pair<Signal, bool>> deliveries(Signal sig, bool marked) const;

 private:
  void step_typed(const BusState& s, std::vector<Step>& out) const;
  BusState after_delivery(const BusState& s) const;
  BusState finish_round(const BusState& s) const;
  BusState gap(const BusState& s, bool reset) const;

  int n_;
  Faults faults_;
  Domains domains_;
  std::vector<Signal> alphabet_;
};

std::string to_string(BusPhase p);

}  // namespace firelink

#endif  // FIRELINK_BUS_HPP_
