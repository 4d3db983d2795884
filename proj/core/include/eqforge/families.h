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

#ifndef EQFORGE_FAMILIES_H_
#define EQFORGE_FAMILIES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "eqforge/game.h"
#include "eqforge/winpair.h"

namespace eqforge {

// m x m cyclic game: player one pays a on the diagonal, player two one
// step to the right of it (wrapping around).
TwoValuesGame GenD(int m, Rational a = 0, Rational b = 1);

// D_m extended by one row and column (index m). The new cells cost b except
// player one's cell (0, m) and player two's cell (m, m).
TwoValuesGame GenC(int m, Rational a = 0, Rational b = 1);

// Two-strategy game with no equilibrium under CVaR for several alpha.
Game Crawford();

enum class Family { kD, kC };

enum class Regime {
  kUniform,      // D_m: everything; C_m: the D-part only
  kEvenSplit,    // D_m, F(2/m) = b
  kEvenBlock,    // D_m, m even, F(2/(m-2)) >= b
  kOddBlock,     // D_m, m odd, F(2/(m-1)) >= b
  kCEven,        // C_m, m even, F(2/m) >= b
  kCOddEqual,    // C_m, m odd, F(2/(m+1)) = b
  kCOddGeq,      // C_m, m odd, F(2/(m-1)) >= b
};

std::string RegimeName(Regime r);
std::string FamilyName(Family f);

// The closed-form equilibrium candidate of a family regime. Each player is
// uniform on the listed support. Throws InputError when the regime does
// not apply to the family or to m.
Profile KnownEquilibrium(Family family, int m, Regime regime);

struct Nis4Fixture {
  std::string id;
  TwoValuesGame game;
  WinningPair expected;
};

// The four 4x4 normal games whose diagonal blocks hold no winning pair.
std::vector<Nis4Fixture> Nis4Fixtures(Rational a = 0, Rational b = 1);

// Uniform normal game by rejection sampling. Deterministic in the seed.
// Throws InputError after 1000 * n failed attempts or for n < 2.
CondensedNormalGame RandomNormal(int n, uint64_t seed, Rational a = 0,
                                 Rational b = 1);

}  // namespace eqforge

#endif  // EQFORGE_FAMILIES_H_
