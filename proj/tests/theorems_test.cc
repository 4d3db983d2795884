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


#include <optional>
#include <vector>

#include "eqforge/equilibrium.h"
#include "eqforge/errors.h"
#include "eqforge/existence.h"
#include "eqforge/families.h"
#include "eqforge/theorems.h"
#include "eqforge/valuation.h"
#include "gtest/gtest.h"

namespace eqforge {
namespace {

std::vector<Valuation> GammaSweep(int max_k) {
  std::vector<Valuation> out;
  for (int k = 1; k <= max_k; ++k) {
    out.push_back(Valuation::EVar(0, 1, Rational(k, 8)));
    out.push_back(Valuation::ESD(0, 1, Rational(k, 8)));
  }
  return out;
}

TEST(DmUniquenessTest, M4EsdOneHasSplitEquilibrium) {
  const TheoremVerdict t = DmUniqueness(4, Valuation::ESD(0, 1, 1));
  EXPECT_EQ(t.theorem, TheoremId::kDmUniqueness);
  EXPECT_FALSE(t.holds);
  ASSERT_TRUE(t.witness);
  EXPECT_EQ(*t.witness_regime, Regime::kEvenSplit);
  EXPECT_TRUE(t.witness_verified);
  EXPECT_EQ(*t.witness, KnownEquilibrium(Family::kD, 4, Regime::kEvenSplit));
  EXPECT_FALSE(t.conditions.empty());
}

TEST(DmUniquenessTest, SmallMAlwaysHolds) {
  for (const Valuation& v : GammaSweep(40)) {
    EXPECT_TRUE(DmUniqueness(2, v).holds) << v.name();
    EXPECT_TRUE(DmUniqueness(3, v).holds) << v.name();
  }
}

TEST(DmUniquenessTest, M5SmallGamma) {
  // F(1/2) = 1/2 + 1/8 < b.
  const TheoremVerdict t = DmUniqueness(5, Valuation::EVar(0, 1, Rational(1, 2)));
  EXPECT_TRUE(t.holds);
  EXPECT_FALSE(t.witness);
}

// Whenever uniqueness fails, the attached construction is a second
// equilibrium of D_m.
TEST(DmUniquenessTest, WitnessesVerify) {
  int failures = 0;
  for (int m = 4; m <= 9; ++m) {
    for (const Valuation& v : GammaSweep(64)) {
      const TheoremVerdict t = DmUniqueness(m, v);
      if (t.holds) continue;
      ++failures;
      ASSERT_TRUE(t.witness) << m << " " << v.name();
      EXPECT_NE(*t.witness, KnownEquilibrium(Family::kD, m, Regime::kUniform));
      EXPECT_TRUE(VerifyFEquilibrium(GenD(m), v, *t.witness).is_equilibrium())
          << m << " " << v.name();
    }
  }
  EXPECT_GT(failures, 50);
}

TEST(CmNonexistenceTest, Examples) {
  EXPECT_TRUE(CmNonexistence(2, Valuation::EVar(0, 1, 4)).holds);

  const TheoremVerdict esd = CmNonexistence(2, Valuation::ESD(0, 1, 1));
  EXPECT_FALSE(esd.holds);
  ASSERT_TRUE(esd.witness);
  const std::vector<int> first_two = {0, 1};
  EXPECT_EQ(*esd.witness,
            (Profile{MixedStrategy::UniformOn(3, first_two),
                     MixedStrategy::UniformOn(3, first_two)}));
  EXPECT_TRUE(esd.witness_verified);

  // F(1/5) = 4/5 + 8/25 > b and F(2/4) = b.
  const TheoremVerdict odd = CmNonexistence(5, Valuation::EVar(0, 1, 2));
  EXPECT_FALSE(odd.holds);
  ASSERT_TRUE(odd.witness);
  EXPECT_EQ(*odd.witness_regime, Regime::kCOddGeq);
  EXPECT_EQ(odd.witness->p1.Support(), (std::vector<int>{3, 5}));
  EXPECT_EQ(odd.witness->p2.Support(), (std::vector<int>{0, 1}));
  EXPECT_TRUE(odd.witness_verified);
}

TEST(CmNonexistenceTest, AgreesWithFinderOnSmallM) {
  for (int m = 2; m <= 5; ++m) {
    for (const Valuation& v : GammaSweep(48)) {
      const TheoremVerdict t = CmNonexistence(m, v);
      if (t.holds) {
        EXPECT_FALSE(FindFEquilibrium(GenC(m), v)) << m << " " << v.name();
      } else {
        ASSERT_TRUE(t.witness) << m << " " << v.name();
        EXPECT_TRUE(VerifyFEquilibrium(GenC(m), v, *t.witness).is_equilibrium())
            << m << " " << v.name();
      }
    }
  }
}

TEST(SynthesizeTest, Examples) {
  const SynthesisResult evar = SynthesizeCounterexample(Valuation::EVar(0, 1, 4));
  ASSERT_TRUE(evar.counterexample);
  EXPECT_EQ(evar.counterexample->m, 2);
  EXPECT_EQ(evar.counterexample->game, GenC(2));
  EXPECT_TRUE(evar.counterexample->verdict.holds);

  EXPECT_FALSE(SynthesizeCounterexample(Valuation::ESD(0, 1, 1)).counterexample);
  const SynthesisResult e = SynthesizeCounterexample(Valuation::Expectation(0, 1));
  EXPECT_FALSE(e.counterexample);
  EXPECT_FALSE(e.reason.empty());
}

TEST(SynthesizeTest, ChosenSizeBracketsX1) {
  int produced = 0;
  for (const Valuation& v : GammaSweep(80)) {
    const SynthesisResult r = SynthesizeCounterexample(v);
    const bool excluded =
        X0(v) == 0 || ClassifyHalf(v) == Comparison::kEqual;
    EXPECT_EQ(r.counterexample.has_value(), !excluded) << v.name();
    if (!r.counterexample) continue;
    ++produced;
    const int m = r.counterexample->m;
    ASSERT_TRUE(X1(v)) << v.name();
    const double x1 = *X1(v);
    EXPECT_LT(1.0 / m, x1) << v.name();
    EXPECT_LE(x1, 1.0 / (m - 1) + 1e-12) << v.name();
    EXPECT_TRUE(CmNonexistence(m, v).holds) << v.name();
  }
  EXPECT_GT(produced, 80);
}

TEST(EvarPpadTest, Regime) {
  EXPECT_TRUE(EvarPpadRegime(Valuation::EVar(0, 1, 1)));
  EXPECT_FALSE(EvarPpadRegime(Valuation::EVar(0, 1, 4)));
  EXPECT_TRUE(EvarPpadRegime(Valuation::EVar(0, 2, Rational(1, 2))));
  EXPECT_THROW(EvarPpadRegime(Valuation::ESD(0, 1, 1)), InputError);
  for (int k = 1; k <= 40; ++k) {
    const Valuation v = Valuation::EVar(0, 1, Rational(k, 8));
    EXPECT_EQ(EvarPpadRegime(v), X0(v) == 0) << k;
  }
}

}  // namespace
}  // namespace eqforge
