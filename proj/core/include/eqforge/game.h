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

#ifndef EQFORGE_GAME_H_
#define EQFORGE_GAME_H_

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eqforge/rational.h"

namespace eqforge {

enum class Player : int { kOne = 1, kTwo = 2 };

constexpr Player Opponent(Player p) {
  return p == Player::kOne ? Player::kTwo : Player::kOne;
}
constexpr int PlayerIndex(Player p) { return static_cast<int>(p) - 1; }

// Bimatrix cost game. Player one picks the row, player two the column, and
// both minimise. Costs are stored row-major.
class Game {
 public:
  // Throws InputError on a shape mismatch or a negative cost.
  Game(int num_rows, int num_cols, std::vector<Rational> row_player_costs,
       std::vector<Rational> col_player_costs);

  int num_rows() const { return num_rows_; }
  int num_cols() const { return num_cols_; }
  int NumStrategies(Player p) const {
    return p == Player::kOne ? num_rows_ : num_cols_;
  }
  const Rational& cost(Player p, int row, int col) const {
    return costs_[PlayerIndex(p)][row * num_cols_ + col];
  }

  bool operator==(const Game& other) const = default;

 private:
  int num_rows_;
  int num_cols_;
  std::array<std::vector<Rational>, 2> costs_;
};

// Every cost is one of two values a < b.
class TwoValuesGame {
 public:
  // Throws InputError unless a < b, a >= 0 and every cost is a or b.
  TwoValuesGame(Game game, Rational a, Rational b);

  // `is_a[p]` is row-major; true marks cost a for player p + 1.
  static TwoValuesGame FromPattern(int num_rows, int num_cols,
                                   const std::vector<bool>& row_player_is_a,
                                   const std::vector<bool>& col_player_is_a,
                                   Rational a = 0, Rational b = 1);

  const Game& game() const { return game_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  int num_rows() const { return game_.num_rows(); }
  int num_cols() const { return game_.num_cols(); }
  bool IsA(Player p, int row, int col) const {
    return is_a_[PlayerIndex(p)][row * game_.num_cols() + col] != 0;
  }

  bool operator==(const TwoValuesGame& other) const {
    return game_ == other.game_ && a_ == other.a_ && b_ == other.b_;
  }

 private:
  Game game_;
  Rational a_;
  Rational b_;
  std::array<std::vector<char>, 2> is_a_;
};

class MixedStrategy {
 public:
  // Throws InputError unless entries are non-negative and sum to one.
  explicit MixedStrategy(std::vector<Rational> probs);

  static MixedStrategy Pure(int size, int strategy);
  static MixedStrategy UniformOn(int size, std::span<const int> support);
  static MixedStrategy Uniform(int size);

  int size() const { return static_cast<int>(probs_.size()); }
  const Rational& operator[](int i) const { return probs_[i]; }
  const std::vector<Rational>& probs() const { return probs_; }
  std::vector<int> Support() const;

  bool operator==(const MixedStrategy& other) const = default;

 private:
  std::vector<Rational> probs_;
};

struct Profile {
  MixedStrategy p1;
  MixedStrategy p2;

  const MixedStrategy& of(Player p) const {
    return p == Player::kOne ? p1 : p2;
  }
  bool operator==(const Profile& other) const = default;
};

struct PureProfile {
  int row;
  int col;
  auto operator<=>(const PureProfile&) const = default;
};

Profile ToProfile(const Game& g, PureProfile pure);

// Normal game stored as two index maps: col[i] is the unique column where
// player two pays a in row i, row[j] the unique row where player one pays a
// in column j. Construction enforces the normal-game invariants.
class CondensedNormalGame {
 public:
  // Throws InputError on out-of-range entries, an (a,a) cell
  // (col[row[j]] == j) or fewer than two distinct values in either map.
  CondensedNormalGame(std::vector<int> col, std::vector<int> row,
                      Rational a = 0, Rational b = 1);

  int n() const { return static_cast<int>(col_.size()); }
  int col(int i) const { return col_[i]; }
  int row(int j) const { return row_[j]; }
  std::span<const int> cols() const { return col_; }
  std::span<const int> rows() const { return row_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool operator==(const CondensedNormalGame& other) const = default;

 private:
  std::vector<int> col_;
  std::vector<int> row_;
  Rational a_;
  Rational b_;
};

// Probability that player k pays a under the profile.
Rational XValue(const TwoValuesGame& g, Player k, const Profile& prof);
// Same, with player k committed to the pure strategy `strategy`.
Rational PureXValue(const TwoValuesGame& g, Player k, int strategy,
                    const MixedStrategy& opponent);

Rational Expectation(const Game& g, Player k, const Profile& prof);
Rational PureExpectation(const Game& g, Player k, int strategy,
                         const MixedStrategy& opponent);

// Square game, every row and every column holds exactly one a for the
// respective player, and no (a,a) cell.
bool IsNormal(const TwoValuesGame& g);
CondensedNormalGame ToCondensed(const TwoValuesGame& g);
TwoValuesGame FromCondensed(const CondensedNormalGame& c);

// Strategy `strategy` of player k costs no more than `other` against every
// opponent strategy in `opponent_support`, and strictly less against one.
bool Dominates(const Game& g, Player k, int strategy, int other,
               std::span<const int> opponent_support);

enum class BlockKind { kPlayerOne, kPlayerTwo, kDouble };

// All cells of rows x cols cost b for the player(s) named by `kind`.
bool IsBBlock(const TwoValuesGame& g, std::span<const int> rows,
              std::span<const int> cols, BlockKind kind);

std::vector<PureProfile> PureEquilibria(const Game& g);

// Exact check that no player gains in expectation by a pure deviation.
bool IsExpectationEquilibrium(const Game& g, const Profile& prof);

// Given an expectation equilibrium in which some player is pure, returns a
// pure equilibrium. Throws InputError if `prof` is not such an equilibrium.
PureProfile DerivePureFromSingleton(const TwoValuesGame& g,
                                    const Profile& prof);

// Replaces the two-point strategy of `player` with the uniform strategy on
// the same support. Throws InputError unless `prof` is an expectation
// equilibrium in which `player` mixes over exactly two strategies.
Profile HalfHalfNormalize(const TwoValuesGame& g, const Profile& prof,
                          Player player = Player::kTwo);

// Swaps the players' roles.
Game Transpose(const Game& g);
TwoValuesGame Transpose(const TwoValuesGame& g);
Profile Transpose(const Profile& prof);

}  // namespace eqforge

#endif  // EQFORGE_GAME_H_
