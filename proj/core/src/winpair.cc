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

#include "eqforge/winpair.h"

#include <algorithm>
#include <numeric>

#include "eqforge/errors.h"

namespace eqforge {
namespace {

// The game seen either as is or with the players swapped. Swapping turns
// col into row and vice versa, and winning pairs map back by swapping
// their row and column sets.
struct View {
  std::span<const int> col;
  std::span<const int> row;
  bool transposed;

  int n() const { return static_cast<int>(col.size()); }
  WinningPair Map(std::array<int, 2> rows, std::array<int, 2> cols) const {
    return transposed ? WinningPair{cols, rows} : WinningPair{rows, cols};
  }
};

View Plain(const CondensedNormalGame& c) { return {c.cols(), c.rows(), false}; }
View Swapped(const CondensedNormalGame& c) { return {c.rows(), c.cols(), true}; }

std::variant<ColumnWitness, RowPair> Scan(const View& v, int j1, int j2) {
  const int skip1 = v.row[j1], skip2 = v.row[j2];
  int first_row = -1, first_col = -1;
  for (int i = 0; i < v.n(); ++i) {
    if (i == skip1 || i == skip2) continue;
    const int c = v.col[i];
    if (c == j1 || c == j2) continue;
    if (first_row < 0) {
      first_row = i;
      first_col = c;
    } else if (c != first_col) {
      return RowPair{{first_row, i}};
    }
  }
  if (first_col >= 0) return ColumnWitness{first_col};
  for (int j = 0; j < v.n(); ++j) {
    if (j != j1 && j != j2) return ColumnWitness{j};
  }
  return ColumnWitness{j1};
}

// Positions of the first occurrences of up to four distinct values.
std::vector<int> FirstDistinct(std::span<const int> values) {
  std::vector<int> pos, seen;
  for (int i = 0; i < static_cast<int>(values.size()) && seen.size() < 4; ++i) {
    if (std::find(seen.begin(), seen.end(), values[i]) == seen.end()) {
      seen.push_back(values[i]);
      pos.push_back(i);
    }
  }
  return pos;
}

bool IsWinning(std::span<const int> col, std::span<const int> row,
               const WinningPair& p) {
  const auto [r1, r2] = p.rows;
  const auto [c1, c2] = p.cols;
  const int n = static_cast<int>(col.size());
  for (int x : {r1, r2, c1, c2}) {
    if (x < 0 || x >= n) return false;
  }
  if (r1 == r2 || c1 == c2) return false;
  // Block shape for a 0/1 indicator: all zero, or one of the two diagonals.
  auto shape_ok = [](bool x11, bool x12, bool x21, bool x22) {
    const int count = x11 + x12 + x21 + x22;
    if (count == 0) return true;
    return count == 2 && ((x11 && x22) || (x12 && x21));
  };
  const bool alpha_ok = shape_ok(row[c1] == r1, row[c2] == r1, row[c1] == r2,
                                 row[c2] == r2);
  const bool beta_ok = shape_ok(col[r1] == c1, col[r1] == c2, col[r2] == c1,
                                col[r2] == c2);
  return alpha_ok && beta_ok && row[c1] != row[c2] && col[r1] != col[r2];
}

// Canonical forms of the four 4x4 games in which no diagonal 2x2 block is a
// winning pair, with their winning pairs. Coordinates: col(i) = i, rows in
// R listed first and the one row outside R last.
struct Nis4Pattern {
  std::array<int, 4> row;
  WinningPair pair;
};

constexpr std::array<Nis4Pattern, 4> kNis4Patterns = {{
    {{1, 2, 0, 2}, {{1, 2}, {0, 3}}},
    {{2, 0, 1, 2}, {{0, 2}, {1, 3}}},
    {{1, 2, 0, 0}, {{0, 2}, {1, 3}}},
    {{2, 0, 1, 1}, {{0, 3}, {0, 3}}},
}};

// n = 4 with col a permutation and |R| <= 3 in view coordinates.
std::optional<WinningPair> Nis4(const View& v, const std::vector<char>& in_r) {
  std::vector<int> r_rows, other_rows;
  for (int i = 0; i < 4; ++i) (in_r[i] ? r_rows : other_rows).push_back(i);

  if (r_rows.size() == 2) {
    return v.Map({other_rows[0], other_rows[1]},
                 {v.col[r_rows[0]], v.col[r_rows[1]]});
  }
  if (r_rows.size() != 3) return std::nullopt;

  std::array<int, 3> order = {r_rows[0], r_rows[1], r_rows[2]};
  do {
    // perm[k]: original row at canonical position k; cperm likewise.
    const std::array<int, 4> perm = {order[0], order[1], order[2],
                                     other_rows[0]};
    std::array<int, 4> cperm, row_pos{};
    for (int k = 0; k < 4; ++k) {
      cperm[k] = v.col[perm[k]];
      row_pos[perm[k]] = k;
    }
    for (int k = 0; k < 3; ++k) {
      const WinningPair block{{perm[k], perm[k + 1]},
                              {cperm[k], cperm[k + 1]}};
      if (IsWinning(v.col, v.row, block)) return v.Map(block.rows, block.cols);
    }
    std::array<int, 4> canonical_row;
    for (int k = 0; k < 4; ++k) canonical_row[k] = row_pos[v.row[cperm[k]]];
    for (const auto& pattern : kNis4Patterns) {
      if (pattern.row != canonical_row) continue;
      const WinningPair p = pattern.pair;
      return v.Map({perm[p.rows[0]], perm[p.rows[1]]},
                   {cperm[p.cols[0]], cperm[p.cols[1]]});
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

// Every row outside R has the same col value (view coordinates).
WinningPair CaseAnalysis(const View& v, const std::vector<char>& in_r) {
  const int n = v.n();
  int r4 = -1;
  for (int i = 0; i < n && r4 < 0; ++i) {
    if (!in_r[i]) r4 = i;
  }
  const int c1 = v.col[r4];
  const int r1 = v.row[c1];
  int c2 = -1;
  for (int j = 0; j < n && c2 < 0; ++j) {
    if (v.row[j] != r1) c2 = j;
  }
  const int r2 = v.row[c2];
  const int col_r1 = v.col[r1], col_r2 = v.col[r2];

  if ((col_r1 == c2 && col_r2 == c1) ||
      (col_r1 != c2 && col_r2 != c1 && col_r1 != col_r2)) {
    return v.Map({r1, r2}, {c1, c2});
  }
  if (col_r2 != c1) {
    const int j = col_r2;
    // With row(j) = r1 the block on {r2, r4} fails the distinct-row test,
    // but {r1, r2} x {c2, j} is then winning.
    if (col_r1 == c2 && v.row[j] == r1) return v.Map({r1, r2}, {c2, j});
    return v.Map({r2, r4}, {c1, j});
  }
  const int c3 = col_r1;
  if (v.row[c3] == r2) return v.Map({r1, r2}, {c1, c3});
  const int r3 = v.row[c3];
  if (v.col[r3] == c1) return v.Map({r1, r3}, {c1, c3});
  if (v.col[r3] == c2) return v.Map({r3, r4}, {c1, c2});
  return v.Map({r2, r3}, {c2, c3});
}

}  // namespace

std::string OutcomeName(WinPairOutcome outcome) {
  switch (outcome) {
    case WinPairOutcome::kPair: return "pair";
    case WinPairOutcome::kFullyMixedUniform: return "fully-mixed-uniform";
    case WinPairOutcome::kSmallCase: return "small-case";
  }
  return "unknown";
}

ColumnRowSets ComputeColumnRowSets(const CondensedNormalGame& c) {
  ColumnRowSets s;
  s.in_c.assign(c.n(), 0);
  s.in_r.assign(c.n(), 0);
  for (int i = 0; i < c.n(); ++i) {
    if (!s.in_c[c.col(i)]) {
      s.in_c[c.col(i)] = 1;
      ++s.c_size;
    }
    if (!s.in_r[c.row(i)]) {
      s.in_r[c.row(i)] = 1;
      ++s.r_size;
    }
  }
  return s;
}

std::variant<ColumnWitness, RowPair> ScanPair(const CondensedNormalGame& c,
                                              int j1, int j2) {
  if (j1 < 0 || j2 < 0 || j1 >= c.n() || j2 >= c.n() || j1 == j2) {
    throw InputError("ScanPair needs two distinct columns in range");
  }
  if (c.row(j1) == c.row(j2)) {
    throw InputError("ScanPair needs columns with distinct row values");
  }
  return Scan(Plain(c), j1, j2);
}

WinPairResult FindWinningPair(const CondensedNormalGame& c) {
  const int n = c.n();
  WinPairResult result{WinPairOutcome::kPair, std::nullopt, n, 0, ""};
  if (n <= 3) {
    result.outcome = WinPairOutcome::kSmallCase;
    result.route = "small";
    return result;
  }
  auto finish = [&](WinningPair p, const char* route) {
    if (!ValidateWinningPair(c, p)) {
      throw InvariantError(std::string("route ") + route +
                           " produced an invalid pair");
    }
    result.pair = p;
    result.route = route;
    return result;
  };

  // Distinct-value probes stop as soon as four values are seen.
  const std::vector<int> distinct_row_cols = FirstDistinct(c.rows());
  const std::vector<int> distinct_col_rows = FirstDistinct(c.cols());
  result.scans += 2;
  const bool r_big = distinct_row_cols.size() == 4;
  const bool c_big = distinct_col_rows.size() == 4;

  if (n == 4 && r_big && c_big) {
    result.outcome = WinPairOutcome::kFullyMixedUniform;
    result.route = "fully-mixed";
    return result;
  }
  if (n >= 5 && (r_big || c_big)) {
    const View v = r_big ? Plain(c) : Swapped(c);
    const auto& four = r_big ? distinct_row_cols : distinct_col_rows;
    for (int x = 0; x < 4; ++x) {
      for (int y = x + 1; y < 4; ++y) {
        ++result.scans;
        auto s = Scan(v, four[x], four[y]);
        if (auto* rp = std::get_if<RowPair>(&s)) {
          return finish(v.Map(rp->rows, {four[x], four[y]}), "four-rows");
        }
      }
    }
    throw InvariantError("no scan produced a row pair");
  }

  const ColumnRowSets sets = ComputeColumnRowSets(c);
  result.scans += 1;

  // Two rows outside R with distinct col, two columns outside C with
  // distinct row.
  auto two_distinct = [&](std::span<const int> values,
                          const std::vector<char>& in_set) {
    std::optional<std::array<int, 2>> out;
    int first = -1;
    for (int i = 0; i < n; ++i) {
      if (in_set[i]) continue;
      if (first < 0) {
        first = i;
      } else if (values[i] != values[first]) {
        out = std::array<int, 2>{first, i};
        break;
      }
    }
    return out;
  };
  result.scans += 2;
  const auto free_rows = two_distinct(c.cols(), sets.in_r);
  const auto free_cols = two_distinct(c.rows(), sets.in_c);
  if (free_rows && free_cols) return finish({*free_rows, *free_cols}, "free-rows");

  if (n == 4 && (sets.c_size == 4 || sets.r_size == 4)) {
    const View v = sets.c_size == 4 ? Plain(c) : Swapped(c);
    const auto& in_r = sets.c_size == 4 ? sets.in_r : sets.in_c;
    if (auto p = Nis4(v, in_r)) return finish(*p, "nis4");
    throw InvariantError("4x4 case analysis found no pair");
  }

  ++result.scans;
  const View v = free_rows ? Swapped(c) : Plain(c);
  const auto& in_r = free_rows ? sets.in_c : sets.in_r;
  return finish(CaseAnalysis(v, in_r), "case-analysis");
}

bool ValidateWinningPair(const CondensedNormalGame& c, const WinningPair& p) {
  return IsWinning(c.cols(), c.rows(), p);
}

std::optional<WinningPair> BruteForceWinningPair(const CondensedNormalGame& c) {
  const int n = c.n();
  for (int r1 = 0; r1 < n; ++r1) {
    for (int r2 = r1 + 1; r2 < n; ++r2) {
      for (int c1 = 0; c1 < n; ++c1) {
        for (int c2 = c1 + 1; c2 < n; ++c2) {
          const WinningPair p{{r1, r2}, {c1, c2}};
          if (ValidateWinningPair(c, p)) return p;
        }
      }
    }
  }
  return std::nullopt;
}

Profile PairToProfile(const WinningPair& pair, int n) {
  const std::array<int, 2> rows = pair.rows, cols = pair.cols;
  return {MixedStrategy::UniformOn(n, rows), MixedStrategy::UniformOn(n, cols)};
}

}  // namespace eqforge
