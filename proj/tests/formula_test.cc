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

#include "firelink/formula.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"

namespace firelink {
namespace {

TEST(Formula, ParsesEveryOperator) {
  for (const char* text : {"true", "false", "(not true)", "(and true false true)", "(or false)",
                           "(dia any true)", "(box \"PCIND !0\" false)",
                           "(dia (match \"PDIND !? !DATA*\") true)", "(dia (gate TDCON) true)",
                           "(dia (not (or any \"i\")) true)", "(dia (and any (gate i)) true)",
                           "(EF true)", "(AG true)", "(AF true)", "(EU true false)",
                           "(AU true false)"}) {
    Formula f = parse_formula(text);
    EXPECT_EQ(to_string(f), text);
    EXPECT_EQ(parse_formula(to_string(f)), f);
  }
  EXPECT_EQ(parse_formula("deadlock_free"), deadlock_freedom());
  EXPECT_EQ(to_string(deadlock_freedom()), "(AG (dia any true))");
}

TEST(Formula, ErrorsCarryColumns) {
  auto column = [](const char* text) -> std::size_t {
    try {
      parse_formula(text);
    } catch (const FormulaError& e) {
      return e.pos() + 1;
    }
    return 0;
  };
  EXPECT_EQ(column("(EG true)"), 2u);
  EXPECT_EQ(column("(dia (gate FOO) true)"), 12u);
  EXPECT_EQ(column("(AG true"), 9u);
  EXPECT_EQ(column("true false"), 6u);
  EXPECT_EQ(column("(box \"abc true)"), 6u);
  EXPECT_EQ(column("(and)"), 2u);
  EXPECT_EQ(column("maybe"), 1u);
}

TEST(Formula, ActionMatching) {
  EXPECT_TRUE(Action::any().matches("i"));
  EXPECT_TRUE(Action::exact("PCIND !0").matches("PCIND !0"));
  EXPECT_FALSE(Action::exact("PCIND !0").matches("PCIND !1"));
  EXPECT_TRUE(Action::gate("PCIND").matches("PCIND !1"));
  EXPECT_FALSE(Action::gate("PC").matches("PCIND !1"));
  EXPECT_TRUE(Action::gate("i").matches("i"));
  EXPECT_TRUE(Action::match("PDIND !? !DATA *CORRUPTED").matches("PDIND !1 !DATA !d0 !CORRUPTED"));
  EXPECT_FALSE(Action::match("PDIND").matches("PDIND !1 !END"));
}

TEST(Formula, GlobMatchingAgreesWithRegexOracle) {
  Lts l(1);
  for (const char* t : {"a1", "a12", "b1", "i", "a1 !x"}) l.intern(t);
  for (const char* glob : {"a*", "?1", "*1", "a?", "*"}) {
    for (const auto& text : l.labels()) {
      Formula f = Formula::dia(Action::match(glob), Formula::truth());
      Lts one(2);
      one.add_transition(0, text, 1);
      EXPECT_EQ(oracle::naive_satisfying(one, f)[0] != 0, Action::match(glob).matches(text))
          << glob << " vs " << text;
    }
  }
}

TEST(Properties, FileSyntax) {
  std::istringstream in(
      "# header\n"
      "p1 = deadlock_free\n"
      "\n"
      "p2 = (EF (dia \"A # not a comment\" true))   # trailing\n");
  auto props = parse_properties(in);
  ASSERT_EQ(props.size(), 2u);
  EXPECT_EQ(props[0].name, "p1");
  EXPECT_EQ(props[1].formula.args[0].action.text, "A # not a comment");

  auto error_of = [](const std::string& text) -> std::string {
    std::istringstream s(text);
    try {
      parse_properties(s);
    } catch (const FormulaError& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_NE(error_of("p = true\nq (AG true)\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("p = true\np = false\n").find("duplicate"), std::string::npos);
  EXPECT_NE(error_of("p = (AG tru)\n").find("line 1, column 9"), std::string::npos);
}

TEST(Properties, ShippedFileParses) {
  auto props = read_properties_file(std::string(FIRELINK_DATA_DIR) + "/properties");
  ASSERT_EQ(props.size(), 5u);
  EXPECT_EQ(props[0].formula, deadlock_freedom());
}

}  // namespace
}  // namespace firelink
