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

#ifndef EQFORGE_EXISTENCE_H_
#define EQFORGE_EXISTENCE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqforge/equilibrium.h"
#include "eqforge/game.h"
#include "eqforge/parallel.h"
#include "eqforge/valuation.h"

namespace eqforge {

struct FoundEquilibrium {
  Profile profile;
  // Construction that produced the profile, e.g. "pure" or "three-strategy/B/2/iv".
  std::string method;
};

// Turns an expectation equilibrium of a 3x3 game into an F-equilibrium:
// pure reduction for singleton supports, half-half normalisation of
// two-point supports, then a case split on player two's cost pattern.
// Candidates are verified; the next expectation equilibrium is tried on
// failure. Throws InputError unless the game is 3x3 and F(1/2) <= b.
std::optional<FoundEquilibrium> ThreeStrategyFEquilibrium(
    const TwoValuesGame& g, const Valuation& v);

struct FinderOptions {
  // Largest dimension for which support-based candidates are tried.
  int max_support_enumeration = 6;
  double rel_tol = kDefaultRelTol;
};

// Heuristic search over known constructions and support-based candidates.
// Every returned profile passed VerifyFEquilibrium; nullopt means nothing
// in the candidate set verified, not that no equilibrium exists.
std::optional<FoundEquilibrium> FindFEquilibrium(
    const TwoValuesGame& g, const Valuation& v,
    const FinderOptions& options = {});

// Number of 3x3 two-values games: four letter pairs in each of nine cells.
inline constexpr uint32_t kAtlasSize = 1u << 18;

// Cell k = 3 * row + col uses bits 2k (player one pays b) and 2k + 1
// (player two pays b) of `id`.
TwoValuesGame AtlasGame(uint32_t id, const Rational& a, const Rational& b);

struct AtlasRow {
  uint32_t game_id;
  bool solved;
  int support1;
  int support2;
  std::string method;
};

struct AtlasSummary {
  int64_t games = 0;
  int64_t solved = 0;
  // Games where the three-strategy construction itself produced nothing.
  int64_t construction_failures = 0;
  std::vector<uint32_t> failures;
  std::vector<AtlasRow> rows;
};

// Solves every 3x3 game with costs v.a(), v.b(). Rows are kept only when
// `keep_rows` is set.
AtlasSummary Atlas3x3(const Valuation& v, bool keep_rows = true,
                      int workers = WorkerCount());

}  // namespace eqforge

#endif  // EQFORGE_EXISTENCE_H_
