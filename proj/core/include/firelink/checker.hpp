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

// Fixed-point evaluation of formulas over an explicit Lts.
//
// Paths are maximal: a sink ends a path. So AF g fails at a sink where g is
// false, and (AG (dia any true)) fails exactly at reachable sinks.

#ifndef FIRELINK_CHECKER_HPP_
#define FIRELINK_CHECKER_HPP_

#include <vector>

#include "firelink/explorer.hpp"
#include "firelink/formula.hpp"
#include "firelink/lts.hpp"

namespace firelink {

struct Verdict {
  bool holds = false;
  /// A witness for a true (EF g) or (dia a g), a counterexample for a false
  /// (AG g) or (box a g); a shortest one where it is a path. Empty
  /// otherwise.
  Trace trace;
  bool has_trace = false;
};

/// The set of states satisfying `f`, one flag per state.
std::vector<char> satisfying(const Lts& lts, const Formula& f);

Verdict check(const Lts& lts, const Formula& f);

}  // namespace firelink

#endif  // FIRELINK_CHECKER_HPP_
