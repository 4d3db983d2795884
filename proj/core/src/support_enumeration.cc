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

#include "eqforge/support_enumeration.h"

#include <algorithm>
#include <string>

#include "eqforge/errors.h"
#include "linear_system.h"

namespace eqforge {
namespace {

using internal::LinearConstraint;

const Rational& CostOf(const Game& g, Player k, int own, int theirs) {
  return k == Player::kOne ? g.cost(k, own, theirs) : g.cost(k, theirs, own);
}

}  // namespace

std::vector<std::vector<int>> SupportsBySize(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

std::vector<MixedStrategy> IndifferenceVertices(
    const Game& g, Player mixer, std::span<const int> mixer_support,
    std::span<const int> indifferent_support, bool best_reply) {
  const Player other = Opponent(mixer);
  const int m = static_cast<int>(mixer_support.size());
  const int dim = m + 1;  // mixing weights, then the common cost
  std::vector<char> in_support(g.NumStrategies(other), 0);
  for (int s : indifferent_support) in_support[s] = 1;

  auto cost_row = [&](int s) {
    LinearConstraint c{std::vector<Rational>(dim), 0};
    for (int t = 0; t < m; ++t) c.coeffs[t] = CostOf(g, other, s, mixer_support[t]);
    c.coeffs[m] = -1;
    return c;
  };

  std::vector<LinearConstraint> eqs, ineqs;
  for (int s : indifferent_support) eqs.push_back(cost_row(s));
  LinearConstraint total{std::vector<Rational>(dim, Rational(1)), 1};
  total.coeffs[m] = 0;
  eqs.push_back(std::move(total));
  for (int t = 0; t < m; ++t) {
    LinearConstraint nonneg{std::vector<Rational>(dim), 0};
    nonneg.coeffs[t] = 1;
    ineqs.push_back(std::move(nonneg));
  }
  if (best_reply) {
    for (int s = 0; s < g.NumStrategies(other); ++s) {
      if (!in_support[s]) ineqs.push_back(cost_row(s));
    }
  }

  std::vector<MixedStrategy> out;
  for (const auto& x : internal::EnumerateVertices(dim, eqs, ineqs)) {
    std::vector<Rational> probs(g.NumStrategies(mixer), Rational(0));
    for (int t = 0; t < m; ++t) probs[mixer_support[t]] = x[t];
    out.emplace_back(std::move(probs));
  }
  return out;
}

void ForEachExpectationEquilibrium(
    const Game& g, int max_n,
    const std::function<bool(const Profile&)>& visit) {
  if (g.num_rows() > max_n || g.num_cols() > max_n) {
    throw InputError("support enumeration is limited to " +
                     std::to_string(max_n) + " strategies per player");
  }
  const auto rows = SupportsBySize(g.num_rows());
  const auto cols = SupportsBySize(g.num_cols());
  const int max_total = g.num_rows() + g.num_cols();
  std::vector<Profile> seen;

  auto emit = [&](Profile prof) {
    if (std::find(seen.begin(), seen.end(), prof) != seen.end()) return true;
    if (!IsExpectationEquilibrium(g, prof)) {
      throw InvariantError("support enumeration produced a non-equilibrium");
    }
    seen.push_back(prof);
    return visit(seen.back());
  };

  for (int total = 2; total <= max_total; ++total) {
    for (const auto& s1 : rows) {
      const int size2 = total - static_cast<int>(s1.size());
      if (size2 < 1 || size2 > g.num_cols()) continue;
      for (const auto& s2 : cols) {
        if (static_cast<int>(s2.size()) != size2) continue;
        if (total == 2) {
          const Profile pure = ToProfile(g, {s1[0], s2[0]});
          if (IsExpectationEquilibrium(g, pure) && !emit(pure)) return;
          continue;
        }
        const auto p1s = IndifferenceVertices(g, Player::kOne, s1, s2, true);
        if (p1s.empty()) continue;
        const auto p2s = IndifferenceVertices(g, Player::kTwo, s2, s1, true);
        for (const auto& p1 : p1s) {
          for (const auto& p2 : p2s) {
            if (!emit(Profile{p1, p2})) return;
          }
        }
      }
    }
  }
}

std::vector<Profile> SolveESupportEnumeration(const Game& g, int max_n) {
  std::vector<Profile> out;
  ForEachExpectationEquilibrium(g, max_n, [&](const Profile& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace eqforge
