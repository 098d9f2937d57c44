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

#include "firelink/bisim.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "firelink/aut.hpp"
#include "firelink/explorer.hpp"
#include "firelink/scenario.hpp"
#include "oracles.hpp"

namespace firelink {
namespace {

TEST(Bisim, TextbookPair) {
  // a.(b + c) vs a.b + a.c
  Lts l(4);
  l.add_transition(0, "a", 1);
  l.add_transition(1, "b", 2);
  l.add_transition(1, "c", 3);
  Lts r(5);
  r.add_transition(0, "a", 1);
  r.add_transition(0, "a", 2);
  r.add_transition(1, "b", 3);
  r.add_transition(2, "c", 4);
  EXPECT_FALSE(bisimilar(l, r));
  EXPECT_FALSE(oracle::naive_bisimilar(l, r));

  // Duplicated branches collapse.
  Lts twice(3);
  twice.add_transition(0, "a", 1);
  twice.add_transition(0, "a", 2);
  Lts once(2);
  once.add_transition(0, "a", 1);
  EXPECT_TRUE(bisimilar(twice, once));
  EXPECT_EQ(minimize(twice).num_states(), 2u);
}

TEST(Bisim, LabelTextDecidesNotLabelIds) {
  Lts a(2);
  a.intern("z");
  a.add_transition(0, "a", 1);
  Lts b(2);
  b.add_transition(0, "a", 1);
  EXPECT_TRUE(bisimilar(a, b));
  Lts c(2);
  c.add_transition(0, "z", 1);
  EXPECT_FALSE(bisimilar(a, c));
}

TEST(Bisim, BlocksAreDenseAndRespectTheRelation) {
  Lts l(4);
  l.add_transition(0, "a", 1);
  l.add_transition(2, "a", 3);
  l.add_transition(1, "b", 1);
  auto blocks = bisimulation_blocks(l);
  ASSERT_EQ(blocks.size(), 4u);
  EXPECT_EQ(blocks[0], 0u);
  EXPECT_NE(blocks[0], blocks[2]);  // 1 loops on b, 3 is stuck
  EXPECT_NE(blocks[1], blocks[3]);
  std::set<std::uint32_t> ids(blocks.begin(), blocks.end());
  EXPECT_EQ(ids.size(), 4u);
  EXPECT_EQ(*ids.rbegin(), 3u);
}

TEST(BisimProperty, AgreesWithPairRefinement) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<std::size_t> size(1, 14), labels(1, 3);
  std::uniform_real_distribution<double> density(0.3, 2.0);
  for (int k = 0; k < 300; ++k) {
    Lts a = oracle::random_lts(rng, size(rng), labels(rng), density(rng));
    Lts b = (k % 3 == 0) ? oracle::shuffle_states(a, rng)
                         : oracle::random_lts(rng, size(rng), labels(rng), density(rng));
    EXPECT_EQ(bisimilar(a, b), oracle::naive_bisimilar(a, b)) << aut_to_string(a) << aut_to_string(b);
  }
}

TEST(BisimProperty, MinimizeCountsClassesAndIsIdempotent) {
  std::mt19937 rng(97);
  std::uniform_int_distribution<std::size_t> size(1, 20), labels(1, 3);
  std::uniform_real_distribution<double> density(0.3, 2.0);
  for (int k = 0; k < 200; ++k) {
    Lts a = oracle::random_lts(rng, size(rng), labels(rng), density(rng));
    Lts m = minimize(a);
    EXPECT_NO_THROW(m.validate());
    EXPECT_EQ(m.num_states(), oracle::naive_class_count(a)) << aut_to_string(a);
    EXPECT_TRUE(bisimilar(a, m));
    EXPECT_TRUE(oracle::naive_bisimilar(a, m));
    EXPECT_EQ(aut_to_string(minimize(m)), aut_to_string(m));
    // Relabelling states gives the same quotient up to numbering.
    Lts other = minimize(oracle::shuffle_states(a, rng));
    EXPECT_EQ(other.num_states(), m.num_states());
    EXPECT_EQ(other.num_transitions(), m.num_transitions());
    EXPECT_TRUE(oracle::naive_bisimilar(other, m));
  }
}

TEST(BisimProperty, EquivalenceRelation) {
  std::mt19937 rng(5);
  for (int k = 0; k < 60; ++k) {
    Lts a = oracle::random_lts(rng, 6, 2, 1.2);
    Lts b = oracle::shuffle_states(a, rng);
    Lts c = oracle::random_lts(rng, 6, 2, 1.2);
    EXPECT_TRUE(bisimilar(a, a));
    EXPECT_EQ(bisimilar(a, c), bisimilar(c, a));
    if (bisimilar(b, c)) EXPECT_TRUE(bisimilar(a, c));
  }
}

TEST(Bisim, ModelQuotients) {
  for (const char* name : {"s1_n2_b1_ok", "s3_n2_b1_ko"}) {
    auto r = explore(make_main(*find_scenario(builtin_catalog(), name)));
    Lts m = minimize(r.lts);
    EXPECT_LE(m.num_states(), r.lts.num_states());
    EXPECT_EQ(m.num_states(), oracle::naive_class_count(r.lts)) << name;
    EXPECT_TRUE(bisimilar(r.lts, m));
    EXPECT_EQ(aut_to_string(minimize(m)), aut_to_string(m));
  }
}

}  // namespace
}  // namespace firelink
