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

// Aldebaran (.aut) reader and writer.
//
//   des (I, T, S)
//   (src, "LABEL", dst)
//   ...
//
// Output lines are sorted by (src, label text, dst).

#ifndef FIRELINK_AUT_HPP_
#define FIRELINK_AUT_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "firelink/lts.hpp"

namespace firelink {

class AutParseError : public std::runtime_error {
 public:
  AutParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Writes `lts` in canonical order. Throws std::ios_base::failure if the
/// stream goes bad.
void aut_write(const Lts& lts, std::ostream& out);
std::string aut_to_string(const Lts& lts);
void aut_write_file(const Lts& lts, const std::string& path);

/// Parses an AUT document. Labels may be quoted or bare.
Lts aut_read(std::istream& in);
Lts aut_from_string(const std::string& text);
Lts aut_read_file(const std::string& path);

}  // namespace firelink

#endif  // FIRELINK_AUT_HPP_
