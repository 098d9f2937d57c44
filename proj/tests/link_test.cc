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

#include <gtest/gtest.h>

#include <stdexcept>

#include "test_util.hpp"

namespace firelink {
namespace {

using testing::follow;
using testing::offered;
using testing::offers;

LinkState typed(std::uint64_t s) { return unpack_state<LinkState>(s); }

const std::initializer_list<std::string> kSendAddressed = {
    "LDREQ !0 !1 !d0",
    "PAREQ !0 !FAIR",
    "PACON !0 !WON",
    "PCIND !0",
    "PDREQ !0 !START",
    "PCIND !0",
    "PDREQ !0 !DEST !0",
    "PCIND !0",
    "PDREQ !0 !DEST !1",
    "PCIND !0",
    "PDREQ !0 !HEADER !h0 !VALID",
    "PCIND !0",
    "PDREQ !0 !DATA !d0 !VALID",
    "PCIND !0",
    "PDREQ !0 !END",
};

const std::initializer_list<std::string> kReceiveAddressed = {
    "PDIND !0 !START",
    "PDIND !0 !DEST !1",
    "PDIND !0 !DEST !0",
    "PAREQ !0 !IMMEDIATE",
    "PDIND !0 !HEADER !h0 !VALID",
    "PDIND !0 !DATA !d0 !VALID",
    "PDIND !0 !END",
    "LDIND !0 !ADDR !1 !d0 !VALID",
    "PACON !0 !WON",
};

TEST(Link, RejectsBadIds) {
  EXPECT_THROW(LinkProcess(NodeId{2}, 2), std::invalid_argument);
  EXPECT_THROW(LinkProcess(NodeId{0}, 1), std::invalid_argument);
  EXPECT_THROW(LinkProcess(NodeId{0}, 8), std::invalid_argument);
}

TEST(Link, IdleAcceptsRequestsToEveryOtherNodeAndBroadcast) {
  for (int n = 2; n <= 4; ++n) {
    LinkProcess link(NodeId{1}, n);
    int requests = 0;
    for (const auto& l : offered(link, link.initial())) {
      if (l.rfind("LDREQ", 0) == 0) {
        ++requests;
        EXPECT_EQ(l.find("!1 !1"), std::string::npos) << "self-addressed request " << l;
      }
    }
    EXPECT_EQ(requests, n);  // n-1 nodes plus broadcast, one data value
    EXPECT_TRUE(offers(link, link.initial(), "TERMINATED"));
  }
}

TEST(Link, IdleListensToEverySignal) {
  LinkProcess link(NodeId{0}, 2);
  int listens = 0;
  for (const auto& l : offered(link, link.initial())) listens += l.rfind("PDIND !0 ", 0) == 0;
  EXPECT_EQ(listens, 14);
}

TEST(Link, BufferedPacketRequestsFairArbitration) {
  LinkProcess link(NodeId{0}, 2);
  auto s = follow(link, link.initial(), {"LDREQ !0 !BCAST !d0"});
  EXPECT_TRUE(offers(link, s, "PAREQ !0 !FAIR"));
  EXPECT_FALSE(offers(link, s, "TERMINATED"));
  EXPECT_FALSE(offers(link, s, "LDREQ !0 !1 !d0"));
  auto packet = link.buffered_packet(typed(s));
  ASSERT_TRUE(packet.has_value());
  EXPECT_TRUE(packet->dest().is_broadcast());

  auto lost = follow(link, s, {"PAREQ !0 !FAIR", "PACON !0 !LOST"});
  EXPECT_EQ(typed(lost).mode, LinkMode::kIdle);
  EXPECT_TRUE(offers(link, lost, "PAREQ !0 !FAIR"));
}

TEST(Link, BroadcastIsConfirmedThenWaitsForGap) {
  LinkProcess link(NodeId{0}, 2);
  auto s = follow(link, link.initial(),
                  {"LDREQ !0 !BCAST !d0", "PAREQ !0 !FAIR", "PACON !0 !WON", "PCIND !0",
                   "PDREQ !0 !START", "PCIND !0", "PDREQ !0 !DEST !0", "PCIND !0",
                   "PDREQ !0 !DEST !BCAST", "PCIND !0", "PDREQ !0 !HEADER !h0 !VALID", "PCIND !0",
                   "PDREQ !0 !DATA !d0 !VALID", "PCIND !0", "PDREQ !0 !END"});
  EXPECT_EQ(offered(link, s), std::vector<std::string>{"LDCON !0 !BROADSENT"});
  s = follow(link, s, {"LDCON !0 !BROADSENT"});
  EXPECT_EQ(typed(s).mode, LinkMode::kWaitGap);
  s = follow(link, s, {"PDIND !0 !SUBACTGAP"});
  EXPECT_EQ(typed(s), LinkProcess::initial_state());
}

TEST(Link, AddressedSendReportsTheAck) {
  LinkProcess link(NodeId{0}, 2);
  auto s = follow(link, link.initial(), kSendAddressed);
  EXPECT_EQ(typed(s).mode, LinkMode::kAwaitAck);

  auto rec = follow(link, s, {"PDIND !0 !START", "PDIND !0 !ACK !a0 !VALID", "PDIND !0 !END"});
  EXPECT_EQ(offered(link, rec), std::vector<std::string>{"LDCON !0 !ACKREC !a0"});
  EXPECT_EQ(typed(follow(link, rec, {"LDCON !0 !ACKREC !a0"})).mode, LinkMode::kWaitGap);

  auto bad = follow(link, s, {"PDIND !0 !START", "PDIND !0 !ACK !a0 !CORRUPTED", "PDIND !0 !END"});
  EXPECT_EQ(offered(link, bad), std::vector<std::string>{"LDCON !0 !ACKMISS"});

  // A gap instead of an ack: the confirmation ends the subaction.
  auto gap = follow(link, s, {"PDIND !0 !SUBACTGAP", "LDCON !0 !ACKMISS"});
  EXPECT_EQ(typed(gap), LinkProcess::initial_state());
}

TEST(Link, ReceiverAnswersAnAddressedPacket) {
  LinkProcess link(NodeId{0}, 2);
  auto s = follow(link, link.initial(), kReceiveAddressed);
  EXPECT_EQ(typed(s).mode, LinkMode::kSendAck);
  EXPECT_TRUE(offers(link, s, "LDRES !0 !a0 !HOLD"));
  EXPECT_TRUE(offers(link, s, "LDRES !0 !a0 !RELEASE"));

  auto release = follow(link, s,
                        {"LDRES !0 !a0 !RELEASE", "PCIND !0", "PDREQ !0 !START", "PCIND !0",
                         "PDREQ !0 !ACK !a0 !VALID", "PCIND !0", "PDREQ !0 !END"});
  EXPECT_EQ(typed(release), LinkProcess::initial_state());

  auto hold = follow(link, s,
                     {"LDRES !0 !a0 !HOLD", "PCIND !0", "PDREQ !0 !START", "PCIND !0",
                      "PDREQ !0 !ACK !a0 !VALID", "PCIND !0", "PDREQ !0 !PREFIX"});
  EXPECT_EQ(typed(hold).mode, LinkMode::kHolding);
  auto resp = follow(link, hold, {"LDREQ !0 !1 !d0"});
  EXPECT_EQ(typed(resp).mode, LinkMode::kSend);
}

TEST(Link, CorruptedAddressedPacketIsStillIndicated) {
  LinkProcess link(NodeId{0}, 2);
  auto s = follow(link, link.initial(),
                  {"PDIND !0 !START", "PDIND !0 !DEST !1", "PDIND !0 !DEST !0",
                   "PAREQ !0 !IMMEDIATE", "PDIND !0 !HEADER !h0 !VALID",
                   "PDIND !0 !DATA !d0 !CORRUPTED", "PDIND !0 !END"});
  EXPECT_EQ(offered(link, s), std::vector<std::string>{"LDIND !0 !ADDR !1 !d0 !CORRUPTED"});
}

TEST(Link, PacketForAnotherNodeIsIgnoredUntilGap) {
  LinkProcess link(NodeId{0}, 3);
  auto s = follow(link, link.initial(), {"PDIND !0 !START", "PDIND !0 !DEST !1", "PDIND !0 !DEST !2"});
  EXPECT_EQ(typed(s).mode, LinkMode::kIgnore);
  EXPECT_FALSE(offers(link, s, "PAREQ !0 !IMMEDIATE"));
  s = follow(link, s, {"PDIND !0 !SUBACTGAP"});
  EXPECT_EQ(typed(s), LinkProcess::initial_state());
}

TEST(Link, StatesPackLosslessly) {
  LinkState s;
  s.mode = LinkMode::kReceive;
  s.buffer = LinkState::encode_buffer(Dest::broadcast(), Data{5});
  s.cursor = 3;
  s.flags = LinkState::kCorrupted | LinkState::kImmediate;
  s.peer = 2;
  EXPECT_EQ(unpack_state<LinkState>(pack_state(s)), s);
  EXPECT_TRUE(s.buffered_dest().is_broadcast());
  EXPECT_EQ(s.buffered_data().value, 5);
}

}  // namespace
}  // namespace firelink
