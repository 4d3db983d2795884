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

#ifndef EQFORGE_WINPAIR_H_
#define EQFORGE_WINPAIR_H_

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eqforge/game.h"

namespace eqforge {

// Rows {rows[0], rows[1]} by columns {cols[0], cols[1]}; the half-half
// profile on this block is an equilibrium whenever F(1/2) = b.
struct WinningPair {
  std::array<int, 2> rows;
  std::array<int, 2> cols;

  bool operator==(const WinningPair& other) const = default;
};

enum class WinPairOutcome { kPair, kFullyMixedUniform, kSmallCase };

std::string OutcomeName(WinPairOutcome outcome);

struct WinPairResult {
  WinPairOutcome outcome;
  std::optional<WinningPair> pair;
  int n;
  // Passes over the col/row arrays, early-terminated passes included.
  int scans;
  // Which construction produced the answer.
  std::string route;
};

// C: columns hit by col. R: rows hit by row.
struct ColumnRowSets {
  std::vector<char> in_c;
  std::vector<char> in_r;
  int c_size = 0;
  int r_size = 0;
};

ColumnRowSets ComputeColumnRowSets(const CondensedNormalGame& c);

struct ColumnWitness {
  int column;
};
struct RowPair {
  std::array<int, 2> rows;
};

// One pass over col skipping rows row(j1), row(j2). Returns two rows whose
// col values are distinct and outside {j1, j2}, which together with
// {j1, j2} form a winning pair; otherwise a column j such that every such
// row has col in {j1, j2, j}.
std::variant<ColumnWitness, RowPair> ScanPair(const CondensedNormalGame& c,
                                              int j1, int j2);

// Linear time. Pair for n >= 5 and for n = 4 unless |C| = |R| = 4.
WinPairResult FindWinningPair(const CondensedNormalGame& c);

bool ValidateWinningPair(const CondensedNormalGame& c, const WinningPair& p);

// Exhaustive search over all 2x2 blocks, for testing. O(n^4).
std::optional<WinningPair> BruteForceWinningPair(const CondensedNormalGame& c);

// Uniform on pair.rows for player one and pair.cols for player two.
Profile PairToProfile(const WinningPair& pair, int n);

}  // namespace eqforge

#endif  // EQFORGE_WINPAIR_H_
