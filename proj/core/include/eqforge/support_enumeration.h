// Copyright 2026 The eqforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EQFORGE_SUPPORT_ENUMERATION_H_
#define EQFORGE_SUPPORT_ENUMERATION_H_

#include <functional>
#include <span>
#include <vector>

#include "eqforge/game.h"

namespace eqforge {

// Vertices of the set of `mixer`'s strategies, supported inside
// `mixer_support`, that leave the opponent indifferent across
// `indifferent_support` in expectation. With `best_reply` the opponent's
// other strategies must also cost at least as much.
std::vector<MixedStrategy> IndifferenceVertices(
    const Game& g, Player mixer, std::span<const int> mixer_support,
    std::span<const int> indifferent_support, bool best_reply);

// Visits expectation equilibria, support pairs taken by increasing total
// size, until `visit` returns false. Throws InputError when a dimension
// exceeds max_n.
void ForEachExpectationEquilibrium(
    const Game& g, int max_n,
    const std::function<bool(const Profile&)>& visit);

// Every vertex equilibrium found by the enumeration, deduplicated. Complete
// for nondegenerate games.
std::vector<Profile> SolveESupportEnumeration(const Game& g, int max_n = 5);

// Support subsets of {0..n-1} by increasing size, then lexicographically.
std::vector<std::vector<int>> SupportsBySize(int n);

}  // namespace eqforge

#endif  // EQFORGE_SUPPORT_ENUMERATION_H_
