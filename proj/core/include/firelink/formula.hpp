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

// Action-based temporal formulas in a prefix syntax.
//
//   formula := true | false | deadlock_free
//            | (not F) | (and F F...) | (or F F...)
//            | (dia A F) | (box A F)
//            | (EF F) | (AG F) | (AF F) | (EU F G) | (AU F G)
//   action  := any | "LABEL TEXT" | (match "GLOB") | (gate NAME)
//            | (not A) | (and A A...) | (or A A...)
//
// GLOB is matched against the whole rendered label; `*` and `?` are
// wildcards. deadlock_free abbreviates (AG (dia any true)).
//
// A property file holds lines `name = formula`; text after `#` outside a
// quoted string is a comment.

#ifndef FIRELINK_FORMULA_HPP_
#define FIRELINK_FORMULA_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace firelink {

struct Action {
  enum class Kind { kAny, kExact, kMatch, kGate, kNot, kAnd, kOr };
  Kind kind = Kind::kAny;
  std::string text;  // label, glob or gate name
  std::vector<Action> args;

  static Action any() { return {}; }
  static Action exact(std::string label) { return {Kind::kExact, std::move(label), {}}; }
  static Action match(std::string glob) { return {Kind::kMatch, std::move(glob), {}}; }
  static Action gate(std::string name) { return {Kind::kGate, std::move(name), {}}; }

  bool matches(std::string_view label) const;

  friend bool operator==(const Action&, const Action&) = default;
};

struct Formula {
  enum class Kind { kTrue, kFalse, kNot, kAnd, kOr, kDia, kBox, kEF, kAG, kAF, kEU, kAU };
  Kind kind = Kind::kTrue;
  Action action;  // kDia and kBox only
  std::vector<Formula> args;

  static Formula truth() { return {}; }
  static Formula falsity() { return {Kind::kFalse, {}, {}}; }
  static Formula negation(Formula f) { return {Kind::kNot, {}, {std::move(f)}}; }
  static Formula dia(Action a, Formula f) { return {Kind::kDia, std::move(a), {std::move(f)}}; }
  static Formula box(Action a, Formula f) { return {Kind::kBox, std::move(a), {std::move(f)}}; }
  static Formula ef(Formula f) { return {Kind::kEF, {}, {std::move(f)}}; }
  static Formula ag(Formula f) { return {Kind::kAG, {}, {std::move(f)}}; }
  static Formula af(Formula f) { return {Kind::kAF, {}, {std::move(f)}}; }
  static Formula eu(Formula f, Formula g) { return {Kind::kEU, {}, {std::move(f), std::move(g)}}; }
  static Formula au(Formula f, Formula g) { return {Kind::kAU, {}, {std::move(f), std::move(g)}}; }

  friend bool operator==(const Formula&, const Formula&) = default;
};

/// (AG (dia any true)). TERMINATED self-loops count as enabled actions.
Formula deadlock_freedom();

class FormulaError : public std::runtime_error {
 public:
  FormulaError(std::size_t pos, const std::string& reason, const std::string& where = "")
      : std::runtime_error(where + "column " + std::to_string(pos + 1) + ": " + reason),
        pos_(pos),
        reason_(reason) {}
  std::size_t pos() const { return pos_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t pos_;
  std::string reason_;
};

/// Throws FormulaError.
Formula parse_formula(std::string_view text);
std::string to_string(const Formula& f);
std::string to_string(const Action& a);

struct NamedFormula {
  std::string name;
  Formula formula;
};

/// Throws FormulaError with the line number prefixed to the message.
std::vector<NamedFormula> parse_properties(std::istream& in);
std::vector<NamedFormula> read_properties_file(const std::string& path);

}  // namespace firelink

#endif  // FIRELINK_FORMULA_HPP_
