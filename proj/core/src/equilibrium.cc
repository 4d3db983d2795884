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

#include "eqforge/equilibrium.h"

#include <utility>

#include "eqforge/errors.h"

namespace eqforge {

bool StrictlyLess(const Cost& lhs, const Cost& rhs, double band) {
  if (lhs.exact && rhs.exact) return *lhs.exact < *rhs.exact;
  return lhs.value < rhs.value - band;
}

Cost BestResponseCost(const TwoValuesGame& g, const Valuation& v, Player k,
                      const MixedStrategy& opponent) {
  if (v.a() != g.a() || v.b() != g.b()) {
    throw InputError("valuation costs do not match the game's a and b");
  }
  std::optional<Cost> best;
  const double band = 0;
  for (int s = 0; s < g.game().NumStrategies(k); ++s) {
    Cost c = v.Evaluate(PureXValue(g, k, s, opponent));
    if (!best || StrictlyLess(c, *best, band)) best = std::move(c);
  }
  return *best;
}

EquilibriumReport VerifyFEquilibrium(const TwoValuesGame& g,
                                     const Valuation& v, const Profile& prof,
                                     double rel_tol) {
  if (v.a() != g.a() || v.b() != g.b()) {
    throw InputError("valuation costs do not match the game's a and b");
  }
  if (prof.p1.size() != g.num_rows() || prof.p2.size() != g.num_cols()) {
    throw InputError("profile dimensions do not match the game");
  }
  const double band = rel_tol * Rational(g.b() - g.a()).get_d();
  const WeepResult weep = WeepHolds(g.game(), prof);
  EquilibriumReport report{Verdict::kEquilibrium, std::nullopt, weep.holds};

  for (Player k : {Player::kOne, Player::kTwo}) {
    const Cost current = ValuationOfProfile(g, k, v, prof);
    std::optional<Deviation> best;
    for (int s = 0; s < g.game().NumStrategies(k); ++s) {
      Cost dev = v.Evaluate(PureXValue(g, k, s, prof.of(Opponent(k))));
      if (!StrictlyLess(dev, current, band)) continue;
      if (!best || StrictlyLess(dev, best->deviation, 0)) {
        best = Deviation{k, s, current, std::move(dev)};
      }
    }
    if (best) {
      report.verdict = Verdict::kNotEquilibrium;
      report.witness = std::move(best);
      return report;
    }
  }
  return report;
}

DistributionValuation DistributionValuation::Expectation() {
  return DistributionValuation("expectation", [](const Distribution& d) {
    Rational e = 0;
    for (size_t i = 0; i < d.values.size(); ++i) e += d.values[i] * d.probs[i];
    return e;
  });
}

DistributionValuation DistributionValuation::CVaR(Rational alpha) {
  if (alpha < 0 || alpha >= 1) throw InputError("CVaR needs 0 <= alpha < 1");
  return DistributionValuation(
      "cvar", [alpha](const Distribution& d) {
        return CvarOfDistribution(d, alpha);
      });
}

EquilibriumReport VerifyGeneralEquilibrium(
    const Game& g, const std::array<DistributionValuation, 2>& valuations,
    const Profile& prof) {
  const WeepResult weep = WeepHolds(g, prof);
  EquilibriumReport report{Verdict::kEquilibrium, std::nullopt, weep.holds};
  for (Player k : {Player::kOne, Player::kTwo}) {
    const auto& val = valuations[PlayerIndex(k)];
    const Rational current = val(CostDistribution(g, k, prof));
    std::optional<Deviation> best;
    for (int s = 0; s < g.NumStrategies(k); ++s) {
      Profile dev_prof = prof;
      (k == Player::kOne ? dev_prof.p1 : dev_prof.p2) =
          MixedStrategy::Pure(g.NumStrategies(k), s);
      const Rational dev = val(CostDistribution(g, k, dev_prof));
      if (dev < current &&
          (!best || dev < *best->deviation.exact)) {
        best = Deviation{k, s, Cost{current.get_d(), current},
                         Cost{dev.get_d(), dev}};
      }
    }
    if (best) {
      report.verdict = Verdict::kNotEquilibrium;
      report.witness = std::move(best);
      return report;
    }
  }
  return report;
}

WeepResult WeepHolds(const Game& g, const Profile& prof) {
  if (prof.p1.size() != g.num_rows() || prof.p2.size() != g.num_cols()) {
    throw InputError("profile dimensions do not match the game");
  }
  WeepResult out{{true, true}, {}};
  for (Player k : {Player::kOne, Player::kTwo}) {
    std::optional<Rational> common;
    bool holds = true;
    for (int s : prof.of(k).Support()) {
      Rational e = PureExpectation(g, k, s, prof.of(Opponent(k)));
      if (!common) {
        common = std::move(e);
      } else if (*common != e) {
        holds = false;
        break;
      }
    }
    out.holds[PlayerIndex(k)] = holds;
    if (holds) out.common_values[PlayerIndex(k)] = std::move(common);
  }
  return out;
}

}  // namespace eqforge
