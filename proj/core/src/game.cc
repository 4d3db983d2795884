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

#include "eqforge/game.h"

#include <algorithm>
#include <string>
#include <utility>

#include "eqforge/errors.h"

namespace eqforge {
namespace {

void CheckShape(const Game& g, const Profile& prof) {
  if (prof.p1.size() != g.num_rows() || prof.p2.size() != g.num_cols()) {
    throw InputError("profile dimensions " + std::to_string(prof.p1.size()) +
                     "x" + std::to_string(prof.p2.size()) +
                     " do not match game " + std::to_string(g.num_rows()) +
                     "x" + std::to_string(g.num_cols()));
  }
}

void CheckStrategy(const Game& g, Player k, int strategy) {
  if (strategy < 0 || strategy >= g.NumStrategies(k)) {
    throw InputError("strategy index " + std::to_string(strategy) +
                     " out of range for player " +
                     std::to_string(static_cast<int>(k)));
  }
}

// Cost entry for player k where k plays `own` and the opponent `theirs`.
const Rational& CostFor(const Game& g, Player k, int own, int theirs) {
  return k == Player::kOne ? g.cost(k, own, theirs) : g.cost(k, theirs, own);
}

}  // namespace

Game::Game(int num_rows, int num_cols, std::vector<Rational> row_player_costs,
           std::vector<Rational> col_player_costs)
    : num_rows_(num_rows), num_cols_(num_cols) {
  if (num_rows < 1 || num_cols < 1) {
    throw InputError("game needs at least one row and one column");
  }
  const size_t cells = static_cast<size_t>(num_rows) * num_cols;
  if (row_player_costs.size() != cells || col_player_costs.size() != cells) {
    throw InputError("cost matrix size does not match " +
                     std::to_string(num_rows) + "x" + std::to_string(num_cols));
  }
  for (auto* costs : {&row_player_costs, &col_player_costs}) {
    for (Rational& c : *costs) {
      c.canonicalize();
      if (c < 0) throw InputError("negative cost " + ToString(c));
    }
  }
  costs_[0] = std::move(row_player_costs);
  costs_[1] = std::move(col_player_costs);
}

TwoValuesGame::TwoValuesGame(Game game, Rational a, Rational b)
    : game_(std::move(game)),
      a_(Canonical(std::move(a))),
      b_(Canonical(std::move(b))) {
  if (a_ < 0 || !(a_ < b_)) {
    throw InputError("two-values game needs 0 <= a < b, got a=" +
                     ToString(a_) + " b=" + ToString(b_));
  }
  const int cells = game_.num_rows() * game_.num_cols();
  for (Player p : {Player::kOne, Player::kTwo}) {
    auto& flags = is_a_[PlayerIndex(p)];
    flags.resize(cells);
    for (int r = 0; r < game_.num_rows(); ++r) {
      for (int c = 0; c < game_.num_cols(); ++c) {
        const Rational& v = game_.cost(p, r, c);
        if (v != a_ && v != b_) {
          throw InputError("cost " + ToString(v) + " is neither a nor b");
        }
        flags[r * game_.num_cols() + c] = v == a_;
      }
    }
  }
}

TwoValuesGame TwoValuesGame::FromPattern(int num_rows, int num_cols,
                                         const std::vector<bool>& row_player_is_a,
                                         const std::vector<bool>& col_player_is_a,
                                         Rational a, Rational b) {
  const size_t cells = static_cast<size_t>(num_rows) * num_cols;
  if (row_player_is_a.size() != cells || col_player_is_a.size() != cells) {
    throw InputError("pattern size does not match the game shape");
  }
  std::vector<Rational> c1(cells), c2(cells);
  for (size_t i = 0; i < cells; ++i) {
    c1[i] = row_player_is_a[i] ? a : b;
    c2[i] = col_player_is_a[i] ? a : b;
  }
  return TwoValuesGame(Game(num_rows, num_cols, std::move(c1), std::move(c2)),
                       std::move(a), std::move(b));
}

MixedStrategy::MixedStrategy(std::vector<Rational> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) throw InputError("empty mixed strategy");
  Rational total = 0;
  for (Rational& p : probs_) {
    p.canonicalize();
    if (p < 0) throw InputError("negative probability " + ToString(p));
    total += p;
  }
  if (total != 1) {
    throw InputError("probabilities sum to " + ToString(total) + ", not 1");
  }
}

MixedStrategy MixedStrategy::Pure(int size, int strategy) {
  if (strategy < 0 || strategy >= size) {
    throw InputError("pure strategy " + std::to_string(strategy) +
                     " out of range");
  }
  std::vector<Rational> probs(size, Rational(0));
  probs[strategy] = 1;
  return MixedStrategy(std::move(probs));
}

MixedStrategy MixedStrategy::UniformOn(int size, std::span<const int> support) {
  if (support.empty()) throw InputError("empty support");
  std::vector<Rational> probs(size, Rational(0));
  const Rational w(1, static_cast<unsigned long>(support.size()));
  for (int s : support) {
    if (s < 0 || s >= size || probs[s] != 0) {
      throw InputError("invalid support index " + std::to_string(s));
    }
    probs[s] = w;
  }
  return MixedStrategy(std::move(probs));
}

MixedStrategy MixedStrategy::Uniform(int size) {
  std::vector<int> all(size);
  for (int i = 0; i < size; ++i) all[i] = i;
  return UniformOn(size, all);
}

std::vector<int> MixedStrategy::Support() const {
  std::vector<int> s;
  for (int i = 0; i < size(); ++i) {
    if (probs_[i] != 0) s.push_back(i);
  }
  return s;
}

Profile ToProfile(const Game& g, PureProfile pure) {
  return {MixedStrategy::Pure(g.num_rows(), pure.row),
          MixedStrategy::Pure(g.num_cols(), pure.col)};
}

CondensedNormalGame::CondensedNormalGame(std::vector<int> col,
                                         std::vector<int> row, Rational a,
                                         Rational b)
    : col_(std::move(col)), row_(std::move(row)), a_(std::move(a)),
      b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
  const int n = static_cast<int>(col_.size());
  if (n < 1 || row_.size() != col_.size()) {
    throw InputError("col and row must be non-empty and of equal length");
  }
  if (a_ < 0 || !(a_ < b_)) throw InputError("condensed game needs 0 <= a < b");
  std::vector<char> seen_c(n, 0), seen_r(n, 0);
  int distinct_c = 0, distinct_r = 0;
  for (int i = 0; i < n; ++i) {
    if (col_[i] < 0 || col_[i] >= n || row_[i] < 0 || row_[i] >= n) {
      throw InputError("index out of range at position " + std::to_string(i));
    }
    if (!seen_c[col_[i]]++) ++distinct_c;
    if (!seen_r[row_[i]]++) ++distinct_r;
  }
  for (int j = 0; j < n; ++j) {
    if (col_[row_[j]] == j) {
      throw InputError("cell (" + std::to_string(row_[j]) + "," +
                       std::to_string(j) + ") is (a,a)");
    }
  }
  if (distinct_c < 2 || distinct_r < 2) {
    throw InputError("col and row must each take at least two values");
  }
}

Rational PureXValue(const TwoValuesGame& g, Player k, int strategy,
                    const MixedStrategy& opponent) {
  CheckStrategy(g.game(), k, strategy);
  if (opponent.size() != g.game().NumStrategies(Opponent(k))) {
    throw InputError("opponent strategy has wrong dimension");
  }
  Rational x = 0;
  for (int t = 0; t < opponent.size(); ++t) {
    if (opponent[t] == 0) continue;
    const bool is_a = k == Player::kOne ? g.IsA(k, strategy, t)
                                        : g.IsA(k, t, strategy);
    if (is_a) x += opponent[t];
  }
  return x;
}

Rational XValue(const TwoValuesGame& g, Player k, const Profile& prof) {
  CheckShape(g.game(), prof);
  const MixedStrategy& own = prof.of(k);
  const MixedStrategy& other = prof.of(Opponent(k));
  Rational x = 0;
  for (int s = 0; s < own.size(); ++s) {
    if (own[s] == 0) continue;
    x += own[s] * PureXValue(g, k, s, other);
  }
  return x;
}

Rational PureExpectation(const Game& g, Player k, int strategy,
                         const MixedStrategy& opponent) {
  CheckStrategy(g, k, strategy);
  if (opponent.size() != g.NumStrategies(Opponent(k))) {
    throw InputError("opponent strategy has wrong dimension");
  }
  Rational e = 0;
  for (int t = 0; t < opponent.size(); ++t) {
    if (opponent[t] == 0) continue;
    e += opponent[t] * CostFor(g, k, strategy, t);
  }
  return e;
}

Rational Expectation(const Game& g, Player k, const Profile& prof) {
  CheckShape(g, prof);
  const MixedStrategy& own = prof.of(k);
  Rational e = 0;
  for (int s = 0; s < own.size(); ++s) {
    if (own[s] == 0) continue;
    e += own[s] * PureExpectation(g, k, s, prof.of(Opponent(k)));
  }
  return e;
}

bool IsNormal(const TwoValuesGame& g) {
  const int n = g.num_rows();
  if (n != g.num_cols()) return false;
  for (int i = 0; i < n; ++i) {
    int count = 0;
    for (int j = 0; j < n; ++j) count += g.IsA(Player::kTwo, i, j);
    if (count != 1) return false;
  }
  for (int j = 0; j < n; ++j) {
    int count = 0;
    for (int i = 0; i < n; ++i) {
      count += g.IsA(Player::kOne, i, j);
      if (g.IsA(Player::kOne, i, j) && g.IsA(Player::kTwo, i, j)) return false;
    }
    if (count != 1) return false;
  }
  return true;
}

CondensedNormalGame ToCondensed(const TwoValuesGame& g) {
  if (!IsNormal(g)) throw InputError("game is not normal");
  const int n = g.num_rows();
  std::vector<int> col(n), row(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (g.IsA(Player::kTwo, i, j)) col[i] = j;
      if (g.IsA(Player::kOne, i, j)) row[j] = i;
    }
  }
  return CondensedNormalGame(std::move(col), std::move(row), g.a(), g.b());
}

TwoValuesGame FromCondensed(const CondensedNormalGame& c) {
  const int n = c.n();
  std::vector<bool> a1(static_cast<size_t>(n) * n), a2(a1.size());
  for (int i = 0; i < n; ++i) a2[static_cast<size_t>(i) * n + c.col(i)] = true;
  for (int j = 0; j < n; ++j) a1[static_cast<size_t>(c.row(j)) * n + j] = true;
  return TwoValuesGame::FromPattern(n, n, a1, a2, c.a(), c.b());
}

bool Dominates(const Game& g, Player k, int strategy, int other,
               std::span<const int> opponent_support) {
  CheckStrategy(g, k, strategy);
  CheckStrategy(g, k, other);
  if (opponent_support.empty()) throw InputError("empty opponent support");
  bool strict = false;
  for (int t : opponent_support) {
    CheckStrategy(g, Opponent(k), t);
    const Rational& mine = CostFor(g, k, strategy, t);
    const Rational& theirs = CostFor(g, k, other, t);
    if (mine > theirs) return false;
    if (mine < theirs) strict = true;
  }
  return strict;
}

bool IsBBlock(const TwoValuesGame& g, std::span<const int> rows,
              std::span<const int> cols, BlockKind kind) {
  if (rows.empty() || cols.empty()) throw InputError("empty b-block side");
  for (int r : rows) CheckStrategy(g.game(), Player::kOne, r);
  for (int c : cols) CheckStrategy(g.game(), Player::kTwo, c);
  for (int r : rows) {
    for (int c : cols) {
      if (kind != BlockKind::kPlayerTwo && g.IsA(Player::kOne, r, c)) return false;
      if (kind != BlockKind::kPlayerOne && g.IsA(Player::kTwo, r, c)) return false;
    }
  }
  return true;
}

std::vector<PureProfile> PureEquilibria(const Game& g) {
  const int rows = g.num_rows(), cols = g.num_cols();
  // Column minima for player one, row minima for player two.
  std::vector<Rational> best1(cols), best2(rows);
  for (int c = 0; c < cols; ++c) {
    best1[c] = g.cost(Player::kOne, 0, c);
    for (int r = 1; r < rows; ++r)
      best1[c] = std::min(best1[c], g.cost(Player::kOne, r, c));
  }
  for (int r = 0; r < rows; ++r) {
    best2[r] = g.cost(Player::kTwo, r, 0);
    for (int c = 1; c < cols; ++c)
      best2[r] = std::min(best2[r], g.cost(Player::kTwo, r, c));
  }
  std::vector<PureProfile> out;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (g.cost(Player::kOne, r, c) == best1[c] &&
          g.cost(Player::kTwo, r, c) == best2[r]) {
        out.push_back({r, c});
      }
    }
  }
  return out;
}

bool IsExpectationEquilibrium(const Game& g, const Profile& prof) {
  CheckShape(g, prof);
  for (Player k : {Player::kOne, Player::kTwo}) {
    const MixedStrategy& other = prof.of(Opponent(k));
    std::vector<Rational> pure(g.NumStrategies(k));
    Rational best;
    for (int s = 0; s < g.NumStrategies(k); ++s) {
      pure[s] = PureExpectation(g, k, s, other);
      if (s == 0 || pure[s] < best) best = pure[s];
    }
    for (int s : prof.of(k).Support()) {
      if (pure[s] != best) return false;
    }
  }
  return true;
}

PureProfile DerivePureFromSingleton(const TwoValuesGame& g,
                                    const Profile& prof) {
  const Game& game = g.game();
  if (!IsExpectationEquilibrium(game, prof)) {
    throw InputError("profile is not an expectation equilibrium");
  }
  const std::vector<int> s1 = prof.p1.Support();
  const std::vector<int> s2 = prof.p2.Support();
  PureProfile out;
  if (s1.size() == 1) {
    // Smallest column of the opponent's support minimising the row cost.
    out.row = s1[0];
    out.col = s2[0];
    for (int c : s2) {
      if (game.cost(Player::kOne, out.row, c) <
          game.cost(Player::kOne, out.row, out.col)) {
        out.col = c;
      }
    }
  } else if (s2.size() == 1) {
    out.col = s2[0];
    out.row = s1[0];
    for (int r : s1) {
      if (game.cost(Player::kTwo, r, out.col) <
          game.cost(Player::kTwo, out.row, out.col)) {
        out.row = r;
      }
    }
  } else {
    throw InputError("neither player uses a pure strategy");
  }
  if (!IsExpectationEquilibrium(game, ToProfile(game, out))) {
    throw InvariantError("derived pure profile is not an equilibrium");
  }
  return out;
}

Profile HalfHalfNormalize(const TwoValuesGame& g, const Profile& prof,
                          Player player) {
  if (!IsExpectationEquilibrium(g.game(), prof)) {
    throw InputError("profile is not an expectation equilibrium");
  }
  const MixedStrategy& mix = prof.of(player);
  const std::vector<int> support = mix.Support();
  if (support.size() != 2) {
    throw InputError("strategy to normalise must have a two-point support");
  }
  Profile out = prof;
  (player == Player::kOne ? out.p1 : out.p2) =
      MixedStrategy::UniformOn(mix.size(), support);
  if (!IsExpectationEquilibrium(g.game(), out)) {
    throw InvariantError("half-half normalisation broke the equilibrium");
  }
  return out;
}

Game Transpose(const Game& g) {
  const int rows = g.num_cols(), cols = g.num_rows();
  std::vector<Rational> c1(static_cast<size_t>(rows) * cols), c2(c1.size());
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      c1[r * cols + c] = g.cost(Player::kTwo, c, r);
      c2[r * cols + c] = g.cost(Player::kOne, c, r);
    }
  }
  return Game(rows, cols, std::move(c1), std::move(c2));
}

TwoValuesGame Transpose(const TwoValuesGame& g) {
  return TwoValuesGame(Transpose(g.game()), g.a(), g.b());
}

Profile Transpose(const Profile& prof) { return {prof.p2, prof.p1}; }

}  // namespace eqforge
