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

// Strong bisimulation by signature refinement. `i` is an ordinary label.

#ifndef FIRELINK_BISIM_HPP_
#define FIRELINK_BISIM_HPP_

#include <cstdint>
#include <vector>

#include "firelink/lts.hpp"

namespace firelink {

/// Block of every state under the coarsest strong bisimulation. Blocks are
/// numbered in order of their smallest state.
std::vector<std::uint32_t> bisimulation_blocks(const Lts& lts);

/// The quotient of `lts`; state k is block k, transitions canonical.
Lts minimize(const Lts& lts);

/// Strong bisimilarity of the initial states. Labels match by text.
bool bisimilar(const Lts& a, const Lts& b);

}  // namespace firelink

#endif  // FIRELINK_BISIM_HPP_
