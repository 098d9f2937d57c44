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

#ifndef FIRELINK_PROCESS_HPP_
#define FIRELINK_PROCESS_HPP_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "firelink/label.hpp"

namespace firelink {

/// One transition of a leaf process: the offered label and the packed target.
struct Step {
  Label label;
  std::uint64_t next = 0;

  friend bool operator==(const Step&, const Step&) = default;
};

/// A sequential process whose control state packs into 64 bits.
///
/// step() must be a pure function of its argument: the explorer calls it
/// concurrently from several threads.
class Process {
 public:
  virtual ~Process() = default;

  virtual std::string name() const = 0;
  virtual std::uint64_t initial() const = 0;
  /// Appends every (label, successor) pair of `state` to `out`.
  virtual void step(std::uint64_t state, std::vector<Step>& out) const = 0;
  virtual std::string describe(std::uint64_t state) const = 0;

  std::vector<Step> steps(std::uint64_t state) const {
    std::vector<Step> out;
    step(state, out);
    return out;
  }
};

/// Bit-copies an 8-byte trivially copyable state into its packed form.
template <typename T>
std::uint64_t pack_state(const T& s) {
  static_assert(sizeof(T) == sizeof(std::uint64_t));
  return std::bit_cast<std::uint64_t>(s);
}

template <typename T>
T unpack_state(std::uint64_t bits) {
  static_assert(sizeof(T) == sizeof(std::uint64_t));
  return std::bit_cast<T>(bits);
}

}  // namespace firelink

#endif  // FIRELINK_PROCESS_HPP_
