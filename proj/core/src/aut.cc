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

#include "firelink/aut.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string_view>
#include <tuple>

namespace firelink {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::uint64_t parse_number(std::string_view s, std::size_t line, const char* what) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw AutParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

// Strips the surrounding parentheses of "( ... )".
std::string_view parenthesised(std::string_view s, std::size_t line) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw AutParseError(line, "expected '( ... )'");
  }
  return s.substr(1, s.size() - 2);
}

struct Header {
  std::uint64_t initial, transitions, states;
};

Header parse_header(std::string_view line_text, std::size_t line) {
  auto s = trim(line_text);
  if (s.substr(0, 3) != "des") throw AutParseError(line, "missing 'des' header");
  auto body = parenthesised(s.substr(3), line);
  auto c1 = body.find(',');
  auto c2 = c1 == std::string_view::npos ? c1 : body.find(',', c1 + 1);
  if (c2 == std::string_view::npos) throw AutParseError(line, "header needs three fields");
  Header h{parse_number(body.substr(0, c1), line, "initial state"),
           parse_number(body.substr(c1 + 1, c2 - c1 - 1), line, "transition count"),
           parse_number(body.substr(c2 + 1), line, "state count")};
  if (h.states == 0) throw AutParseError(line, "state count must be positive");
  if (h.initial >= h.states) throw AutParseError(line, "initial state out of range");
  return h;
}

}  // namespace

void aut_write(const Lts& lts, std::ostream& out) {
  auto rank = lts.label_ranks();
  const auto& ts = lts.transitions();
  std::vector<std::size_t> order(ts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tuple(ts[a].src, rank[ts[a].label], ts[a].dst) <
           std::tuple(ts[b].src, rank[ts[b].label], ts[b].dst);
  });

  std::string buf;
  buf.reserve(64 + ts.size() * 32);
  buf += "des (" + std::to_string(lts.initial()) + ", " + std::to_string(ts.size()) + ", " +
         std::to_string(lts.num_states()) + ")\n";
  for (std::size_t i : order) {
    const auto& t = ts[i];
    buf += '(';
    buf += std::to_string(t.src);
    buf += ", \"";
    buf += lts.label_text(t.label);
    buf += "\", ";
    buf += std::to_string(t.dst);
    buf += ")\n";
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  out.flush();
  if (!out) throw std::ios_base::failure("aut_write: output stream failed");
}

std::string aut_to_string(const Lts& lts) {
  std::ostringstream out;
  aut_write(lts, out);
  return out.str();
}

void aut_write_file(const Lts& lts, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
  aut_write(lts, out);
}

Lts aut_read(std::istream& in) {
  std::string text;
  std::size_t line = 0;
  bool have_header = false;
  Header h{};
  Lts lts;
  std::size_t seen = 0;

  while (std::getline(in, text)) {
    ++line;
    auto s = trim(text);
    if (s.empty()) continue;
    if (!have_header) {
      h = parse_header(s, line);
      lts = Lts(h.states, static_cast<StateId>(h.initial));
      lts.reserve_transitions(h.transitions);
      have_header = true;
      continue;
    }
    auto body = parenthesised(s, line);
    auto c1 = body.find(',');
    if (c1 == std::string_view::npos) throw AutParseError(line, "transition needs three fields");
    auto src = parse_number(body.substr(0, c1), line, "source state");
    auto rest = trim(body.substr(c1 + 1));

    std::string_view label;
    std::string_view tail;
    if (!rest.empty() && rest.front() == '"') {
      auto close = rest.find('"', 1);
      if (close == std::string_view::npos) throw AutParseError(line, "unterminated label");
      label = rest.substr(1, close - 1);
      tail = trim(rest.substr(close + 1));
      if (tail.empty() || tail.front() != ',') throw AutParseError(line, "expected ',' after label");
      tail.remove_prefix(1);
    } else {
      auto c2 = rest.rfind(',');
      if (c2 == std::string_view::npos) throw AutParseError(line, "transition needs three fields");
      label = trim(rest.substr(0, c2));
      tail = rest.substr(c2 + 1);
    }
    auto dst = parse_number(tail, line, "target state");
    if (src >= h.states || dst >= h.states) {
      throw AutParseError(line, "state index out of range");
    }
    if (++seen > h.transitions) {
      throw AutParseError(line, "more transitions than the header declares");
    }
    lts.add_transition(static_cast<StateId>(src), label, static_cast<StateId>(dst));
  }
  if (!have_header) throw AutParseError(line + 1, "missing 'des' header");
  if (seen != h.transitions) {
    throw AutParseError(line + 1, "header declares " + std::to_string(h.transitions) +
                                      " transitions, found " + std::to_string(seen));
  }
  return lts;
}

Lts aut_from_string(const std::string& text) {
  std::istringstream in(text);
  return aut_read(in);
}

Lts aut_read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return aut_read(in);
}

}  // namespace firelink
