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


#include <algorithm>
#include <vector>

#include "eqforge/errors.h"
#include "eqforge/families.h"
#include "eqforge/game.h"
#include "eqforge/support_enumeration.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace eqforge {
namespace {

using ::eqforge::testing::BruteX;
using ::eqforge::testing::RandomMixed;
using ::eqforge::testing::RandomProfile;
using ::eqforge::testing::RandomTwoValuesGame;
using ::eqforge::testing::Rng;

// Cells written as two letters, player one's first.
TwoValuesGame Cells(const std::vector<std::vector<std::string>>& cells,
                    Rational a = 0, Rational b = 1) {
  const int rows = static_cast<int>(cells.size());
  const int cols = static_cast<int>(cells[0].size());
  std::vector<bool> p1, p2;
  for (const auto& row : cells) {
    for (const std::string& cell : row) {
      p1.push_back(cell[0] == 'a');
      p2.push_back(cell[1] == 'a');
    }
  }
  return TwoValuesGame::FromPattern(rows, cols, p1, p2, a, b);
}

MixedStrategy Mixed(std::vector<Rational> probs) {
  return MixedStrategy(std::move(probs));
}

TEST(GameTest, RejectsMalformedGames) {
  EXPECT_THROW(Game(2, 2, {0, 1, 1}, {0, 1, 1, 0}), InputError);
  EXPECT_THROW(Game(1, 1, {-1}, {0}), InputError);
  EXPECT_THROW(Game(0, 1, {}, {}), InputError);
  EXPECT_THROW(TwoValuesGame(Game(1, 2, {0, 2}, {0, 0}), 0, 1), InputError);
  EXPECT_THROW(TwoValuesGame(Game(1, 1, {1}, {1}), 1, 1), InputError);
}

TEST(MixedStrategyTest, ValidatesDistribution) {
  EXPECT_THROW(Mixed({Rational(1, 2), Rational(1, 3)}), InputError);
  EXPECT_THROW(Mixed({Rational(3, 2), Rational(-1, 2)}), InputError);
  EXPECT_THROW(Mixed({}), InputError);
  const MixedStrategy s = Mixed({0, Rational(1, 4), Rational(3, 4)});
  EXPECT_EQ(s.Support(), (std::vector<int>{1, 2}));
  EXPECT_EQ(MixedStrategy::Pure(3, 2).Support(), std::vector<int>{2});
  const std::vector<int> support = {0, 2};
  EXPECT_EQ(MixedStrategy::UniformOn(3, support),
            Mixed({Rational(1, 2), 0, Rational(1, 2)}));
}

TEST(XValueTest, UniformOnD2IsOneHalf) {
  const TwoValuesGame d2 = GenD(2);
  const Profile uniform{MixedStrategy::Uniform(2), MixedStrategy::Uniform(2)};
  EXPECT_EQ(XValue(d2, Player::kOne, uniform), Rational(1, 2));
  EXPECT_EQ(XValue(d2, Player::kTwo, uniform), Rational(1, 2));
}

TEST(XValueTest, PureProfileOnACellIsOne) {
  const TwoValuesGame c3 = GenC(3);
  for (int r = 0; r < c3.num_rows(); ++r) {
    for (int c = 0; c < c3.num_cols(); ++c) {
      const Profile pure = ToProfile(c3.game(), {r, c});
      for (Player k : {Player::kOne, Player::kTwo}) {
        EXPECT_EQ(XValue(c3, k, pure), c3.IsA(k, r, c) ? 1 : 0);
      }
    }
  }
}

TEST(XValueTest, MatchingPenniesRowOneQuarter) {
  const TwoValuesGame g = Cells({{"ab", "ba"}, {"ba", "ab"}});
  const Profile prof{MixedStrategy::Pure(2, 0),
                     Mixed({Rational(1, 4), Rational(3, 4)})};
  EXPECT_EQ(XValue(g, Player::kOne, prof), Rational(1, 4));
  EXPECT_EQ(PureXValue(g, Player::kOne, 0, prof.p2), Rational(1, 4));
}

TEST(XValueTest, DimensionMismatchThrows) {
  const Profile prof{MixedStrategy::Uniform(3), MixedStrategy::Uniform(2)};
  EXPECT_THROW(XValue(GenD(2), Player::kOne, prof), InputError);
  EXPECT_THROW(Expectation(GenD(2).game(), Player::kOne, prof), InputError);
}

TEST(ExpectationTest, UniformOnDm) {
  const Rational a(1, 3), b(5, 2);
  for (int m = 2; m <= 7; ++m) {
    const TwoValuesGame d = GenD(m, a, b);
    const Profile uniform{MixedStrategy::Uniform(m), MixedStrategy::Uniform(m)};
    for (Player k : {Player::kOne, Player::kTwo}) {
      EXPECT_EQ(Expectation(d.game(), k, uniform),
                a / m + b * Rational(m - 1, m));
    }
  }
}

TEST(ExpectationTest, PureProfileIsCellCost) {
  const Game crawford = Crawford();
  for (int r = 0; r < crawford.num_rows(); ++r) {
    for (int c = 0; c < crawford.num_cols(); ++c) {
      const Profile pure = ToProfile(crawford, {r, c});
      EXPECT_EQ(Expectation(crawford, Player::kOne, pure),
                crawford.cost(Player::kOne, r, c));
      EXPECT_EQ(Expectation(crawford, Player::kTwo, pure),
                crawford.cost(Player::kTwo, r, c));
    }
  }
}

TEST(ExpectationTest, AffineInXOnC3) {
  Rng rng(11);
  const Rational a(2), b(7);
  const TwoValuesGame c3 = GenC(3, a, b);
  for (int trial = 0; trial < 100; ++trial) {
    const Profile prof = RandomProfile(rng, 4, 4);
    for (Player k : {Player::kOne, Player::kTwo}) {
      EXPECT_EQ(Expectation(c3.game(), k, prof),
                (a - b) * BruteX(c3, k, prof) + b);
    }
  }
}

TEST(PropertyTest, XValueIsBilinear) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    const TwoValuesGame g = RandomTwoValuesGame(rng, rows, cols);
    const MixedStrategy p = RandomMixed(rng, rows), q = RandomMixed(rng, rows);
    const MixedStrategy r = RandomMixed(rng, cols);
    const Rational lambda = Canonical(Rational(static_cast<long>(rng() % 9), 8));
    std::vector<Rational> mix(rows);
    for (int i = 0; i < rows; ++i) {
      mix[i] = lambda * p[i] + (1 - lambda) * q[i];
    }
    const Profile combined{Mixed(mix), r};
    for (Player k : {Player::kOne, Player::kTwo}) {
      const Rational lhs = XValue(g, k, combined);
      const Rational rhs = lambda * XValue(g, k, Profile{p, r}) +
                           (1 - lambda) * XValue(g, k, Profile{q, r});
      EXPECT_EQ(lhs, rhs);
      EXPECT_EQ(lhs, BruteX(g, k, combined));
    }
  }
}

TEST(IsNormalTest, FamiliesAreNormal) {
  EXPECT_TRUE(IsNormal(GenC(2)));
  EXPECT_TRUE(IsNormal(GenD(5)));
  for (int m = 2; m <= 8; ++m) {
    EXPECT_TRUE(IsNormal(GenD(m)));
    EXPECT_TRUE(IsNormal(GenC(m)));
  }
}

TEST(IsNormalTest, RejectsAaCellAndShapes) {
  EXPECT_FALSE(IsNormal(Cells({{"aa", "bb"}, {"bb", "ab"}})));
  // One a per row and column for each player, but (0,0) is (a,a).
  EXPECT_FALSE(IsNormal(Cells({{"aa", "bb"}, {"bb", "aa"}})));
  EXPECT_FALSE(IsNormal(Cells({{"ab", "ba", "bb"}, {"ba", "ab", "bb"}})));
  EXPECT_FALSE(IsNormal(Cells({{"ab"}})));
}

TEST(CondensedTest, D4Arrays) {
  const CondensedNormalGame c = ToCondensed(GenD(4));
  ASSERT_EQ(c.n(), 4);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(c.col(i), (i + 1) % 4);
    EXPECT_EQ(c.row(i), i);
  }
}

TEST(CondensedTest, RoundTripOnRandomNormalGames) {
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    const CondensedNormalGame c = RandomNormal(8, seed);
    const TwoValuesGame g = FromCondensed(c);
    ASSERT_TRUE(IsNormal(g));
    EXPECT_EQ(ToCondensed(g), c);
    EXPECT_EQ(FromCondensed(ToCondensed(g)), g);
    // Expansion rule, checked cell by cell.
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        EXPECT_EQ(g.IsA(Player::kOne, i, j), i == c.row(j));
        EXPECT_EQ(g.IsA(Player::kTwo, i, j), j == c.col(i));
      }
    }
  }
}

TEST(CondensedTest, Errors) {
  Rng rng(3);
  const TwoValuesGame dense = RandomTwoValuesGame(rng, 3, 3);
  ASSERT_FALSE(IsNormal(dense));
  EXPECT_THROW(ToCondensed(dense), InputError);
  EXPECT_THROW(CondensedNormalGame({1, 0}, {1, 0}), InputError);  // (a,a)
  EXPECT_THROW(CondensedNormalGame({1, 2}, {1, 0}), InputError);  // range
  EXPECT_THROW(CondensedNormalGame({1, 1, 1}, {0, 2, 0}), InputError);
}

TEST(DominatesTest, Examples) {
  const std::vector<int> col0 = {0}, all3 = {0, 1, 2};
  EXPECT_TRUE(Dominates(GenD(2).game(), Player::kOne, 0, 1, col0));
  EXPECT_FALSE(Dominates(GenD(3).game(), Player::kOne, 0, 1, all3));
  for (int s = 0; s < 3; ++s) {
    EXPECT_FALSE(Dominates(GenD(3).game(), Player::kTwo, s, s, all3));
  }
  const std::vector<int> empty;
  EXPECT_THROW(Dominates(GenD(2).game(), Player::kOne, 0, 1, empty),
               InputError);
  EXPECT_THROW(Dominates(GenD(2).game(), Player::kOne, 0, 2, col0),
               InputError);
}

std::vector<int> Members(int mask, int m) {
  std::vector<int> out;
  for (int i = 0; i < m; ++i) {
    if (mask >> i & 1) out.push_back(i);
  }
  return out;
}

TEST(BBlockTest, Examples) {
  const std::vector<int> rows = {2, 3}, cols = {0, 1};
  EXPECT_TRUE(IsBBlock(GenD(5), rows, cols, BlockKind::kDouble));
  for (int m = 2; m <= 6; ++m) {
    for (int i = 0; i < m; ++i) {
      const std::vector<int> one = {i};
      EXPECT_FALSE(IsBBlock(GenD(m), one, one, BlockKind::kPlayerOne));
    }
  }
  const std::vector<int> empty;
  EXPECT_THROW(IsBBlock(GenD(3), empty, cols, BlockKind::kDouble), InputError);
}

// Largest |A| + |B| over b-blocks of D_m of the given kind.
int MaxBlock(int m, BlockKind kind) {
  const TwoValuesGame d = GenD(m);
  int best = 0;
  for (int ra = 1; ra < (1 << m); ++ra) {
    const std::vector<int> rows = Members(ra, m);
    for (int cb = 1; cb < (1 << m); ++cb) {
      const std::vector<int> cols = Members(cb, m);
      const int size = static_cast<int>(rows.size() + cols.size());
      if (size > best && IsBBlock(d, rows, cols, kind)) best = size;
    }
  }
  return best;
}

TEST(BBlockTest, D4DoubleMaximumIsThree) {
  EXPECT_EQ(MaxBlock(4, BlockKind::kDouble), 3);
}

TEST(PropertyTest, BlockSizeBoundsOnDm) {
  for (int m = 2; m <= 7; ++m) {
    EXPECT_LE(MaxBlock(m, BlockKind::kPlayerOne), m) << "m=" << m;
    EXPECT_LE(MaxBlock(m, BlockKind::kPlayerTwo), m) << "m=" << m;
    EXPECT_LE(MaxBlock(m, BlockKind::kDouble), m - 1) << "m=" << m;
  }
}

TEST(PureEquilibriaTest, IsolatedAaCell) {
  const TwoValuesGame g = Cells({{"bb", "bb"}, {"bb", "aa"}});
  EXPECT_EQ(PureEquilibria(g.game()),
            (std::vector<PureProfile>{{0, 0}, {1, 1}}));
  const TwoValuesGame h = Cells({{"ab", "ba"}, {"bb", "aa"}});
  EXPECT_EQ(PureEquilibria(h.game()), (std::vector<PureProfile>{{1, 1}}));
}

TEST(PureEquilibriaTest, NormalGamesHaveNone) {
  EXPECT_TRUE(PureEquilibria(GenC(3).game()).empty());
  for (int n = 2; n <= 12; ++n) {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
      const TwoValuesGame g = FromCondensed(RandomNormal(n, seed));
      EXPECT_TRUE(PureEquilibria(g.game()).empty()) << n << " " << seed;
    }
  }
}

TEST(DerivePureTest, ConstructedExample) {
  const TwoValuesGame g = Cells({{"ab", "ab"}, {"bb", "bb"}});
  const Profile prof{MixedStrategy::Pure(2, 0), MixedStrategy::Uniform(2)};
  ASSERT_TRUE(IsExpectationEquilibrium(g.game(), prof));
  const PureProfile pure = DerivePureFromSingleton(g, prof);
  EXPECT_EQ(pure, (PureProfile{0, 0}));
  const std::vector<PureProfile> all = PureEquilibria(g.game());
  EXPECT_NE(std::find(all.begin(), all.end(), pure), all.end());
}

TEST(DerivePureTest, PureEquilibriumIsKept) {
  const TwoValuesGame g = Cells({{"bb", "ba"}, {"ab", "aa"}});
  const Profile prof = ToProfile(g.game(), {1, 1});
  EXPECT_EQ(DerivePureFromSingleton(g, prof), (PureProfile{1, 1}));
}

TEST(DerivePureTest, SymmetricWhenPlayerTwoIsPure) {
  const TwoValuesGame g = Transpose(Cells({{"ab", "ab"}, {"bb", "bb"}}));
  const Profile prof{MixedStrategy::Uniform(2), MixedStrategy::Pure(2, 0)};
  ASSERT_TRUE(IsExpectationEquilibrium(g.game(), prof));
  const PureProfile pure = DerivePureFromSingleton(g, prof);
  const std::vector<PureProfile> all = PureEquilibria(g.game());
  EXPECT_NE(std::find(all.begin(), all.end(), pure), all.end());
}

TEST(DerivePureTest, RejectsNonEquilibrium) {
  const Profile prof{MixedStrategy::Pure(2, 0), MixedStrategy::Pure(2, 0)};
  EXPECT_THROW(DerivePureFromSingleton(GenD(2), prof), InputError);
}

TEST(HalfHalfTest, MatchingPennies) {
  const TwoValuesGame g = Cells({{"ab", "ba"}, {"ba", "ab"}});
  const Profile uniform{MixedStrategy::Uniform(2), MixedStrategy::Uniform(2)};
  EXPECT_EQ(HalfHalfNormalize(g, uniform), uniform);
  const Profile skewed{MixedStrategy::Uniform(2),
                       Mixed({Rational(1, 3), Rational(2, 3)})};
  EXPECT_FALSE(IsExpectationEquilibrium(g.game(), skewed));
  EXPECT_THROW(HalfHalfNormalize(g, skewed), InputError);
}

TEST(HalfHalfTest, SolverEquilibriaOnRandom3x3) {
  Rng rng(5);
  int normalised = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const TwoValuesGame g = RandomTwoValuesGame(rng, 3, 3);
    for (const Profile& prof : SolveESupportEnumeration(g.game())) {
      ASSERT_TRUE(IsExpectationEquilibrium(g.game(), prof));
      if (prof.p2.Support().size() != 2) continue;
      const Profile out = HalfHalfNormalize(g, prof);
      EXPECT_TRUE(IsExpectationEquilibrium(g.game(), out));
      EXPECT_EQ(out.p2.Support(), prof.p2.Support());
      EXPECT_EQ(out.p2[out.p2.Support()[0]], Rational(1, 2));
      ++normalised;
    }
  }
  EXPECT_GT(normalised, 20);
}

TEST(TransposeTest, SwapsRoles) {
  const TwoValuesGame c2 = GenC(2);
  const TwoValuesGame t = Transpose(c2);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      EXPECT_EQ(t.IsA(Player::kOne, c, r), c2.IsA(Player::kTwo, r, c));
      EXPECT_EQ(t.IsA(Player::kTwo, c, r), c2.IsA(Player::kOne, r, c));
    }
  }
  EXPECT_EQ(Transpose(t), c2);
}

}  // namespace
}  // namespace eqforge
