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

#include "eqforge/existence.h"

#include <algorithm>
#include <utility>

#include "eqforge/errors.h"
#include "eqforge/families.h"
#include "eqforge/support_enumeration.h"
#include "eqforge/winpair.h"

namespace eqforge {
namespace {

struct Candidate {
  Profile profile;
  std::string label;
};

// Player two mixes two columns half-half, player one uses all three rows.
// Only player one's strategy changes.
std::optional<Candidate> MixedColumnsCase(const TwoValuesGame& g,
                                          const Valuation& v,
                                          const Profile& e) {
  const std::vector<int> s2 = e.p2.Support();
  const int j1 = s2[0], j2 = s2[1], j3 = 3 - j1 - j2;
  std::array<bool, 3> on1, on2, on3;
  for (int k = 0; k < 3; ++k) {
    on1[k] = g.IsA(Player::kTwo, k, j1);
    on2[k] = g.IsA(Player::kTwo, k, j2);
    on3[k] = g.IsA(Player::kTwo, k, j3);
  }
  auto with_rows = [&](std::vector<Rational> probs, const char* label) {
    return Candidate{{MixedStrategy(std::move(probs)), e.p2},
                     std::string(label)};
  };
  const Rational third(1, 3), half(1, 2), quarter(1, 4);

  int aa = 0, bb = 0, ab = 0, ba = 0;
  for (int k = 0; k < 3; ++k) {
    if (on1[k] && on2[k]) ++aa;
    else if (!on1[k] && !on2[k]) ++bb;
    else if (on1[k]) ++ab;
    else ++ba;
  }

  if (ab == 0 && ba == 0) {
    if (aa == 3) return Candidate{e, "B/1/i"};
    if (aa == 0) return Candidate{e, "B/1/ii"};
    if (aa == 2) return with_rows({third, third, third}, "B/1/iii");
    const int k = static_cast<int>(
        std::find_if(on1.begin(), on1.end(), [](bool x) { return x; }) -
        on1.begin());
    if (on3[k]) return Candidate{e, "B/1/iii"};
    std::vector<Rational> probs(3, quarter);
    probs[k] = half;
    return with_rows(std::move(probs), "B/1/iii");
  }
  if (aa == 1 && ab == 1 && ba == 1) {
    return with_rows({third, third, third}, "B/2/i");
  }
  if (aa == 0 && bb == 0) return Candidate{e, "B/2/ii-iii"};
  if (bb == 1 && ab == 1 && ba == 1) {
    const int third_col_a = on3[0] + on3[1] + on3[2];
    if (third_col_a == 1 ||
        CompareToB(v, third).result != Comparison::kGreater) {
      return with_rows({third, third, third}, "B/2/iv");
    }
    std::vector<Rational> probs(3, Rational(0));
    for (int k = 0; k < 3; ++k) {
      if (on1[k] != on2[k]) probs[k] = half;
    }
    return with_rows(std::move(probs), "B/2/iv");
  }
  return std::nullopt;
}

std::optional<Candidate> FromExpectationEquilibrium(const TwoValuesGame& g,
                                                    const Valuation& v,
                                                    const Profile& e) {
  const size_t s1 = e.p1.Support().size(), s2 = e.p2.Support().size();
  if (s1 == 1 || s2 == 1) {
    return Candidate{ToProfile(g.game(), DerivePureFromSingleton(g, e)),
                     "pure-reduction"};
  }
  if (s1 == 3 && s2 == 3) return Candidate{e, "fully-mixed"};
  Profile p = e;
  if (s1 == 2) p = HalfHalfNormalize(g, p, Player::kOne);
  if (s2 == 2) p = HalfHalfNormalize(g, p, Player::kTwo);
  if (s1 == 2 && s2 == 2) return Candidate{p, "A"};
  if (s2 == 2) return MixedColumnsCase(g, v, p);
  auto swapped = MixedColumnsCase(Transpose(g), v, Transpose(p));
  if (!swapped) return std::nullopt;
  return Candidate{Transpose(swapped->profile), swapped->label};
}

bool Verifies(const TwoValuesGame& g, const Valuation& v, const Profile& p,
              double rel_tol) {
  return VerifyFEquilibrium(g, v, p, rel_tol).is_equilibrium();
}

std::optional<FoundEquilibrium> FamilyCandidates(const TwoValuesGame& g,
                                                 const Valuation& v,
                                                 double rel_tol) {
  const int n = g.num_rows();
  if (n != g.num_cols() || n < 2) return std::nullopt;
  std::vector<std::pair<Family, int>> families;
  if (g == GenD(n, g.a(), g.b())) families.push_back({Family::kD, n});
  if (n >= 3 && g == GenC(n - 1, g.a(), g.b())) {
    families.push_back({Family::kC, n - 1});
  }
  for (const auto& [family, m] : families) {
    for (Regime r : {Regime::kUniform, Regime::kEvenSplit, Regime::kEvenBlock,
                     Regime::kOddBlock, Regime::kCEven, Regime::kCOddEqual,
                     Regime::kCOddGeq}) {
      std::optional<Profile> p;
      try {
        p = KnownEquilibrium(family, m, r);
      } catch (const InputError&) {
        continue;
      }
      if (Verifies(g, v, *p, rel_tol)) {
        return FoundEquilibrium{*p, "family:" + FamilyName(family) + "/" +
                                        RegimeName(r)};
      }
    }
  }
  return std::nullopt;
}

std::vector<MixedStrategy> SupportCandidates(const Game& g, Player mixer,
                                             const std::vector<int>& own,
                                             const std::vector<int>& other) {
  std::vector<MixedStrategy> out =
      IndifferenceVertices(g, mixer, own, other, false);
  for (auto& s : IndifferenceVertices(g, mixer, own, other, true)) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  MixedStrategy uniform = MixedStrategy::UniformOn(g.NumStrategies(mixer), own);
  if (std::find(out.begin(), out.end(), uniform) == out.end()) {
    out.push_back(std::move(uniform));
  }
  return out;
}

}  // namespace

std::optional<FoundEquilibrium> ThreeStrategyFEquilibrium(
    const TwoValuesGame& g, const Valuation& v) {
  if (g.num_rows() != 3 || g.num_cols() != 3) {
    throw InputError("three-strategy construction needs a 3x3 game");
  }
  if (ClassifyHalf(v) == Comparison::kGreater) {
    throw InputError("three-strategy construction needs F(1/2) <= b");
  }
  std::optional<FoundEquilibrium> found;
  ForEachExpectationEquilibrium(g.game(), 3, [&](const Profile& e) {
    auto candidate = FromExpectationEquilibrium(g, v, e);
    if (candidate && Verifies(g, v, candidate->profile, kDefaultRelTol)) {
      found = FoundEquilibrium{std::move(candidate->profile),
                               "three-strategy/" + candidate->label};
      return false;
    }
    return true;
  });
  return found;
}

std::optional<FoundEquilibrium> FindFEquilibrium(const TwoValuesGame& g,
                                                 const Valuation& v,
                                                 const FinderOptions& options) {
  if (v.a() != g.a() || v.b() != g.b()) {
    throw InputError("valuation costs do not match the game's a and b");
  }
  const double tol = options.rel_tol;
  const Game& game = g.game();

  for (PureProfile pure : PureEquilibria(game)) {
    Profile p = ToProfile(game, pure);
    if (Verifies(g, v, p, tol)) return FoundEquilibrium{std::move(p), "pure"};
  }

  const Comparison half = ClassifyHalf(v);
  if (half == Comparison::kEqual && IsNormal(g)) {
    const WinPairResult w = FindWinningPair(ToCondensed(g));
    std::optional<Profile> p;
    if (w.outcome == WinPairOutcome::kPair) {
      p = PairToProfile(*w.pair, g.num_rows());
    } else if (w.outcome == WinPairOutcome::kFullyMixedUniform) {
      p = Profile{MixedStrategy::Uniform(4), MixedStrategy::Uniform(4)};
    }
    if (p && Verifies(g, v, *p, tol)) {
      return FoundEquilibrium{std::move(*p), "winning-pair/" + w.route};
    }
  }

  if (g.num_rows() == 3 && g.num_cols() == 3 && half != Comparison::kGreater) {
    if (auto found = ThreeStrategyFEquilibrium(g, v)) return found;
  }

  {
    Profile p{MixedStrategy::Uniform(g.num_rows()),
              MixedStrategy::Uniform(g.num_cols())};
    if (Verifies(g, v, p, tol)) return FoundEquilibrium{std::move(p), "uniform"};
  }

  if (auto found = FamilyCandidates(g, v, tol)) return found;

  if (g.num_rows() > options.max_support_enumeration ||
      g.num_cols() > options.max_support_enumeration) {
    return std::nullopt;
  }
  const auto rows = SupportsBySize(g.num_rows());
  const auto cols = SupportsBySize(g.num_cols());
  for (size_t total = 2; total <= static_cast<size_t>(g.num_rows() + g.num_cols());
       ++total) {
    for (const auto& s1 : rows) {
      for (const auto& s2 : cols) {
        if (s1.size() + s2.size() != total) continue;
        const auto c1 = SupportCandidates(game, Player::kOne, s1, s2);
        const auto c2 = SupportCandidates(game, Player::kTwo, s2, s1);
        for (const auto& p1 : c1) {
          for (const auto& p2 : c2) {
            Profile p{p1, p2};
            if (Verifies(g, v, p, tol)) {
              return FoundEquilibrium{std::move(p), "support-candidates"};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

TwoValuesGame AtlasGame(uint32_t id, const Rational& a, const Rational& b) {
  if (id >= kAtlasSize) throw InputError("atlas id out of range");
  std::vector<bool> a1(9), a2(9);
  for (int k = 0; k < 9; ++k) {
    a1[k] = ((id >> (2 * k)) & 1u) == 0;
    a2[k] = ((id >> (2 * k + 1)) & 1u) == 0;
  }
  return TwoValuesGame::FromPattern(3, 3, a1, a2, a, b);
}

AtlasSummary Atlas3x3(const Valuation& v, bool keep_rows, int workers) {
  if (ClassifyHalf(v) == Comparison::kGreater) {
    throw InputError("atlas needs F(1/2) <= b; " + v.name() +
                     " has F(1/2) > b");
  }
  const int chunks = std::max(1, workers);
  std::vector<AtlasSummary> partial(chunks);
  const int64_t per_chunk = (kAtlasSize + chunks - 1) / chunks;

  ParallelFor(
      chunks,
      [&](int64_t begin, int64_t end) {
        for (int64_t c = begin; c < end; ++c) {
          AtlasSummary& out = partial[c];
          const int64_t lo = c * per_chunk;
          const int64_t hi = std::min<int64_t>(kAtlasSize, lo + per_chunk);
          for (int64_t id = lo; id < hi; ++id) {
            const TwoValuesGame g =
                AtlasGame(static_cast<uint32_t>(id), v.a(), v.b());
            std::optional<FoundEquilibrium> found =
                ThreeStrategyFEquilibrium(g, v);
            if (!found) {
              ++out.construction_failures;
              found = FindFEquilibrium(g, v);
              if (found) found->method = "fallback:" + found->method;
            }
            ++out.games;
            if (found) {
              ++out.solved;
            } else {
              out.failures.push_back(static_cast<uint32_t>(id));
            }
            if (keep_rows) {
              out.rows.push_back(
                  {static_cast<uint32_t>(id), found.has_value(),
                   found ? static_cast<int>(found->profile.p1.Support().size()) : 0,
                   found ? static_cast<int>(found->profile.p2.Support().size()) : 0,
                   found ? found->method : std::string("none")});
            }
          }
        }
      },
      workers);

  AtlasSummary total;
  for (auto& p : partial) {
    total.games += p.games;
    total.solved += p.solved;
    total.construction_failures += p.construction_failures;
    total.failures.insert(total.failures.end(), p.failures.begin(),
                          p.failures.end());
    std::move(p.rows.begin(), p.rows.end(), std::back_inserter(total.rows));
  }
  return total;
}

}  // namespace eqforge
