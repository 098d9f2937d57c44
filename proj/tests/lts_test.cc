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

#include "firelink/lts.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace firelink {
namespace {

TEST(Lts, InternIsStable) {
  Lts l(2);
  LabelId a = l.intern("a");
  LabelId b = l.intern("b");
  EXPECT_NE(a, b);
  EXPECT_EQ(l.intern("a"), a);
  EXPECT_EQ(l.find_label("b"), b);
  EXPECT_EQ(l.find_label("zzz"), -1);
  EXPECT_EQ(l.num_labels(), 2u);
}

TEST(Lts, CanonicalizeSortsByLabelTextAndDropsDuplicates) {
  Lts l(3);
  l.add_transition(1, "z", 2);
  l.add_transition(0, "y", 1);
  l.add_transition(0, "b", 2);
  l.add_transition(0, "b", 2);
  l.canonicalize();
  ASSERT_EQ(l.num_transitions(), 3u);
  EXPECT_EQ(l.label_text(l.transitions()[0].label), "b");
  EXPECT_EQ(l.label_text(l.transitions()[1].label), "y");
  EXPECT_EQ(l.transitions()[2].src, 1u);
  EXPECT_NO_THROW(l.validate());
}

TEST(Lts, ValidateRejectsBrokenSystems) {
  Lts empty(0);
  EXPECT_THROW(empty.validate(), std::invalid_argument);
  Lts bad_init(2, 5);
  EXPECT_THROW(bad_init.validate(), std::invalid_argument);
  Lts out_of_range(2);
  out_of_range.add_transition(0, "a", 2);
  EXPECT_THROW(out_of_range.validate(), std::invalid_argument);
  Lts dup(2);
  dup.add_transition(0, "a", 1);
  dup.add_transition(0, "a", 1);
  EXPECT_THROW(dup.validate(), std::invalid_argument);
}

TEST(Adjacency, ForwardAndReverse) {
  Lts l(3);
  l.add_transition(0, "a", 1);
  l.add_transition(0, "b", 2);
  l.add_transition(2, "a", 1);
  Adjacency fwd(l), bwd(l, true);
  EXPECT_EQ(fwd.degree(0), 2u);
  EXPECT_EQ(fwd.degree(1), 0u);
  EXPECT_EQ(bwd.degree(1), 2u);
  for (const auto& t : bwd.out(1)) EXPECT_EQ(t.dst, 1u);
}

}  // namespace
}  // namespace firelink
