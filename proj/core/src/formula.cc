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

#include <fnmatch.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>

#include "firelink/label.hpp"

namespace firelink {

bool Action::matches(std::string_view label) const {
  switch (kind) {
    case Kind::kAny:
      return true;
    case Kind::kExact:
      return label == text;
    case Kind::kMatch:
      return fnmatch(text.c_str(), std::string(label).c_str(), 0) == 0;
    case Kind::kGate: {
      auto space = label.find(' ');
      return label.substr(0, space) == text;
    }
    case Kind::kNot:
      return !args[0].matches(label);
    case Kind::kAnd:
      return std::all_of(args.begin(), args.end(), [&](const Action& a) { return a.matches(label); });
    case Kind::kOr:
      return std::any_of(args.begin(), args.end(), [&](const Action& a) { return a.matches(label); });
  }
  return false;
}

Formula deadlock_freedom() { return Formula::ag(Formula::dia(Action::any(), Formula::truth())); }

namespace {

struct Token {
  enum Kind { kOpen, kClose, kString, kAtom, kEnd } kind;
  std::string text;
  std::size_t pos;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) { advance(); }

  Formula formula() {
    Token t = take();
    if (t.kind == Token::kAtom) {
      if (t.text == "true") return Formula::truth();
      if (t.text == "false") return Formula::falsity();
      if (t.text == "deadlock_free") return deadlock_freedom();
      throw FormulaError(t.pos, "unknown formula '" + t.text + "'");
    }
    if (t.kind != Token::kOpen) throw FormulaError(t.pos, "expected a formula");
    Token op = take();
    if (op.kind != Token::kAtom) throw FormulaError(op.pos, "expected an operator");
    Formula f;
    const std::string& o = op.text;
    if (o == "not") {
      f = Formula::negation(formula());
    } else if (o == "and" || o == "or") {
      f.kind = o == "and" ? Formula::Kind::kAnd : Formula::Kind::kOr;
      while (cur_.kind != Token::kClose) f.args.push_back(formula());
      if (f.args.empty()) throw FormulaError(op.pos, o + " needs an operand");
    } else if (o == "dia" || o == "box") {
      Action a = action();
      Formula g = formula();
      f = o == "dia" ? Formula::dia(std::move(a), std::move(g)) : Formula::box(std::move(a), std::move(g));
    } else if (o == "EF") {
      f = Formula::ef(formula());
    } else if (o == "AG") {
      f = Formula::ag(formula());
    } else if (o == "AF") {
      f = Formula::af(formula());
    } else if (o == "EU" || o == "AU") {
      Formula a = formula();
      Formula b = formula();
      f = o == "EU" ? Formula::eu(std::move(a), std::move(b)) : Formula::au(std::move(a), std::move(b));
    } else {
      throw FormulaError(op.pos, "unknown operator '" + o + "'");
    }
    close();
    return f;
  }

  Action action() {
    Token t = take();
    if (t.kind == Token::kString) return Action::exact(t.text);
    if (t.kind == Token::kAtom) {
      if (t.text == "any") return Action::any();
      throw FormulaError(t.pos, "unknown action '" + t.text + "'");
    }
    if (t.kind != Token::kOpen) throw FormulaError(t.pos, "expected an action");
    Token op = take();
    Action a;
    if (op.kind != Token::kAtom) throw FormulaError(op.pos, "expected an action operator");
    if (op.text == "match") {
      Token g = take();
      if (g.kind != Token::kString) throw FormulaError(g.pos, "match needs a quoted pattern");
      a = Action::match(g.text);
    } else if (op.text == "gate") {
      Token g = take();
      if (g.kind != Token::kAtom || !gate_from_name(g.text)) {
        throw FormulaError(g.pos, "unknown gate '" + g.text + "'");
      }
      a = Action::gate(g.text);
    } else if (op.text == "not") {
      a.kind = Action::Kind::kNot;
      a.args.push_back(action());
    } else if (op.text == "and" || op.text == "or") {
      a.kind = op.text == "and" ? Action::Kind::kAnd : Action::Kind::kOr;
      while (cur_.kind != Token::kClose) a.args.push_back(action());
      if (a.args.empty()) throw FormulaError(op.pos, op.text + " needs an operand");
    } else {
      throw FormulaError(op.pos, "unknown action operator '" + op.text + "'");
    }
    close();
    return a;
  }

  void finish() {
    if (cur_.kind != Token::kEnd) throw FormulaError(cur_.pos, "trailing input");
  }

 private:
  Token take() {
    Token t = cur_;
    if (t.kind == Token::kEnd) throw FormulaError(t.pos, "unexpected end of input");
    advance();
    return t;
  }

  void close() {
    if (cur_.kind != Token::kClose) throw FormulaError(cur_.pos, "expected ')'");
    advance();
  }

  void advance() {
    while (at_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[at_]))) ++at_;
    cur_.pos = at_;
    cur_.text.clear();
    if (at_ == src_.size()) {
      cur_.kind = Token::kEnd;
      return;
    }
    char c = src_[at_];
    if (c == '(' || c == ')') {
      cur_.kind = c == '(' ? Token::kOpen : Token::kClose;
      ++at_;
      return;
    }
    if (c == '"') {
      auto end = src_.find('"', at_ + 1);
      if (end == std::string_view::npos) throw FormulaError(at_, "unterminated string");
      cur_.kind = Token::kString;
      cur_.text = std::string(src_.substr(at_ + 1, end - at_ - 1));
      at_ = end + 1;
      return;
    }
    cur_.kind = Token::kAtom;
    while (at_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[at_])) &&
           src_[at_] != '(' && src_[at_] != ')' && src_[at_] != '"') {
      cur_.text += src_[at_++];
    }
  }

  std::string_view src_;
  std::size_t at_ = 0;
  Token cur_{Token::kEnd, {}, 0};
};

std::string join(const char* op, const std::vector<std::string>& parts) {
  std::string s = std::string("(") + op;
  for (const auto& p : parts) s += " " + p;
  return s + ")";
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.finish();
  return f;
}

std::string to_string(const Action& a) {
  std::vector<std::string> parts;
  for (const auto& x : a.args) parts.push_back(to_string(x));
  switch (a.kind) {
    case Action::Kind::kAny:
      return "any";
    case Action::Kind::kExact:
      return "\"" + a.text + "\"";
    case Action::Kind::kMatch:
      return "(match \"" + a.text + "\")";
    case Action::Kind::kGate:
      return "(gate " + a.text + ")";
    case Action::Kind::kNot:
      return join("not", parts);
    case Action::Kind::kAnd:
      return join("and", parts);
    case Action::Kind::kOr:
      return join("or", parts);
  }
  return "?";
}

std::string to_string(const Formula& f) {
  std::vector<std::string> parts;
  for (const auto& x : f.args) parts.push_back(to_string(x));
  switch (f.kind) {
    case Formula::Kind::kTrue:
      return "true";
    case Formula::Kind::kFalse:
      return "false";
    case Formula::Kind::kNot:
      return join("not", parts);
    case Formula::Kind::kAnd:
      return join("and", parts);
    case Formula::Kind::kOr:
      return join("or", parts);
    case Formula::Kind::kDia:
      return "(dia " + to_string(f.action) + " " + parts[0] + ")";
    case Formula::Kind::kBox:
      return "(box " + to_string(f.action) + " " + parts[0] + ")";
    case Formula::Kind::kEF:
      return join("EF", parts);
    case Formula::Kind::kAG:
      return join("AG", parts);
    case Formula::Kind::kAF:
      return join("AF", parts);
    case Formula::Kind::kEU:
      return join("EU", parts);
    case Formula::Kind::kAU:
      return join("AU", parts);
  }
  return "?";
}

std::vector<NamedFormula> parse_properties(std::istream& in) {
  std::vector<NamedFormula> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line.erase(i);
        break;
      }
    }
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto fail = [&](std::size_t pos, const std::string& why) {
      return FormulaError(pos, why, "line " + std::to_string(lineno) + ", ");
    };
    auto eq = line.find('=');
    if (eq == std::string::npos) throw fail(first, "expected 'name = formula'");
    std::string name = line.substr(first, eq - first);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    if (name.empty() || name.find_first_of(" \t") != std::string::npos) {
      throw fail(first, "bad property name");
    }
    for (const auto& p : out) {
      if (p.name == name) throw fail(first, "duplicate property '" + name + "'");
    }
    try {
      out.push_back({name, parse_formula(std::string_view(line).substr(eq + 1))});
    } catch (const FormulaError& e) {
      throw fail(eq + 1 + e.pos(), e.reason());
    }
  }
  return out;
}

std::vector<NamedFormula> read_properties_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormulaError(0, "cannot open property file " + path, path + ": ");
  return parse_properties(in);
}

}  // namespace firelink
