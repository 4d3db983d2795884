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

#ifndef EQFORGE_EQUILIBRIUM_H_
#define EQFORGE_EQUILIBRIUM_H_

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eqforge/game.h"
#include "eqforge/valuation.h"

namespace eqforge {

// Tolerance for floating-point cost comparisons, relative to b - a.
inline constexpr double kDefaultRelTol = 1e-9;

enum class Verdict { kEquilibrium, kNotEquilibrium };

// A profitable pure deviation.
struct Deviation {
  Player player;
  int strategy;
  Cost current;
  Cost deviation;
};

struct EquilibriumReport {
  Verdict verdict;
  std::optional<Deviation> witness;
  // Weak equal expectations property, per player.
  std::array<bool, 2> weep;

  bool is_equilibrium() const { return verdict == Verdict::kEquilibrium; }
};

// `lhs` is below `rhs` by more than the tolerance band, or exactly when
// both sides are exact.
bool StrictlyLess(const Cost& lhs, const Cost& rhs, double band);

// Cheapest pure reply of player k. Every supported valuation is concave, so
// the minimum over mixed replies sits at a pure strategy.
Cost BestResponseCost(const TwoValuesGame& g, const Valuation& v, Player k,
                      const MixedStrategy& opponent);

EquilibriumReport VerifyFEquilibrium(const TwoValuesGame& g,
                                     const Valuation& v, const Profile& prof,
                                     double rel_tol = kDefaultRelTol);

// Valuation of an arbitrary finite cost distribution.
class DistributionValuation {
 public:
  static DistributionValuation Expectation();
  static DistributionValuation CVaR(Rational alpha);

  Rational operator()(const Distribution& d) const { return fn_(d); }
  const std::string& name() const { return name_; }

 private:
  DistributionValuation(std::string name,
                        std::function<Rational(const Distribution&)> fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}

  std::string name_;
  std::function<Rational(const Distribution&)> fn_;
};

// Exact check over pure deviations, for valuations concave in the
// deviating player's own mixed strategy.
EquilibriumReport VerifyGeneralEquilibrium(
    const Game& g, const std::array<DistributionValuation, 2>& valuations,
    const Profile& prof);

struct WeepResult {
  std::array<bool, 2> holds;
  // The shared expectation over the support, when it holds.
  std::array<std::optional<Rational>, 2> common_values;
};

// Every strategy in a player's support has the same expected cost.
WeepResult WeepHolds(const Game& g, const Profile& prof);

}  // namespace eqforge

#endif  // EQFORGE_EQUILIBRIUM_H_
