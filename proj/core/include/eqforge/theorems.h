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

#ifndef EQFORGE_THEOREMS_H_
#define EQFORGE_THEOREMS_H_

#include <optional>
#include <string>
#include <vector>

#include "eqforge/families.h"
#include "eqforge/game.h"
#include "eqforge/valuation.h"

namespace eqforge {

enum class TheoremId { kDmUniqueness, kCmNonexistence, kSynthesis };

std::string TheoremName(TheoremId id);

struct Clause {
  std::string name;
  bool value;
};

struct TheoremVerdict {
  TheoremId theorem;
  int m;
  bool holds;
  // Some equality test on F was settled by a tolerance band, not exactly.
  bool undecided_at_tolerance = false;
  // When the theorem's conclusion fails: the construction showing it.
  std::optional<Profile> witness;
  std::optional<Regime> witness_regime;
  bool witness_verified = false;
  std::vector<Clause> conditions;
};

// Whether the uniform profile is the only F-equilibrium of D_m, decided by
// the values of F at 2/m, 2/(m-2), 2/(m-1). F(x) < b is tested at the
// threshold only, which suffices for concave F with F(0) = b.
TheoremVerdict DmUniqueness(int m, const Valuation& v, double rel_tol = 1e-10);

// Whether C_m has no F-equilibrium, decided by F at 1/m, 2/m, 2/(m+1),
// 2/(m-1).
TheoremVerdict CmNonexistence(int m, const Valuation& v,
                              double rel_tol = 1e-10);

struct Counterexample {
  int m;
  TwoValuesGame game;
  TheoremVerdict verdict;
};

struct SynthesisResult {
  std::optional<Counterexample> counterexample;
  // Why nothing was produced, empty otherwise.
  std::string reason;
};

// For unimodal F with x0 > 0 and F(1/2) != b, the C_m with
// 1/m < x1 <= 1/(m-1), which has no F-equilibrium.
SynthesisResult SynthesizeCounterexample(const Valuation& v);

// gamma * (b - a) <= 1: the maximiser sits at 0 and F-equilibria are the
// expectation equilibria. Throws InputError for non-EVar valuations.
bool EvarPpadRegime(const Valuation& v);

}  // namespace eqforge

#endif  // EQFORGE_THEOREMS_H_
