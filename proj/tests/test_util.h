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


#ifndef EQFORGE_TESTS_TEST_UTIL_H_
#define EQFORGE_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <random>
#include <vector>

#include "eqforge/game.h"
#include "eqforge/rational.h"

namespace eqforge::testing {

using Rng = std::mt19937_64;

// Random two-values game with independent fair letters per cell.
inline TwoValuesGame RandomTwoValuesGame(Rng& rng, int rows, int cols,
                                         Rational a = 0, Rational b = 1) {
  std::bernoulli_distribution coin(0.5);
  std::vector<bool> p1(rows * cols), p2(rows * cols);
  for (int i = 0; i < rows * cols; ++i) {
    p1[i] = coin(rng);
    p2[i] = coin(rng);
  }
  return TwoValuesGame::FromPattern(rows, cols, p1, p2, a, b);
}

// Random distribution with rational weights k / total, some of them zero.
inline MixedStrategy RandomMixed(Rng& rng, int size, int max_weight = 7) {
  std::uniform_int_distribution<int> weight(0, max_weight);
  std::vector<int> w(size);
  int total = 0;
  while (total == 0) {
    total = 0;
    for (int& x : w) {
      x = weight(rng);
      total += x;
    }
  }
  std::vector<Rational> probs(size);
  for (int i = 0; i < size; ++i) probs[i] = Rational(w[i], total);
  return MixedStrategy(std::move(probs));
}

inline Profile RandomProfile(Rng& rng, int rows, int cols) {
  return Profile{RandomMixed(rng, rows), RandomMixed(rng, cols)};
}

// Cell-by-cell probability of paying a, written independently of the
// library's bilinear form.
inline Rational BruteX(const TwoValuesGame& g, Player k, const Profile& p) {
  Rational x = 0;
  for (int r = 0; r < g.num_rows(); ++r) {
    for (int c = 0; c < g.num_cols(); ++c) {
      if (g.game().cost(k, r, c) == g.a()) x += p.p1[r] * p.p2[c];
    }
  }
  return x;
}

}  // namespace eqforge::testing

#endif  // EQFORGE_TESTS_TEST_UTIL_H_
