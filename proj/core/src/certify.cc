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

#include "eqforge/certify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "eqforge/errors.h"

namespace eqforge {
namespace {

constexpr double kGrid = 281474976710656.0;  // 2^48

// Intervals per coordinate. Endpoints stay dyadic rationals, so they and
// their sums are exact in double at the depths used here.
struct Box {
  std::array<std::vector<double>, 2> lo;
  std::array<std::vector<double>, 2> hi;
  int depth;
};

// Box intersected with the simplex, or false when they are disjoint.
bool Tighten(const std::vector<double>& lo, const std::vector<double>& hi,
             std::vector<double>& tlo, std::vector<double>& thi) {
  const double sum_lo = std::accumulate(lo.begin(), lo.end(), 0.0);
  const double sum_hi = std::accumulate(hi.begin(), hi.end(), 0.0);
  if (sum_lo > 1.0 || sum_hi < 1.0) return false;
  tlo.resize(lo.size());
  thi.resize(hi.size());
  for (size_t i = 0; i < lo.size(); ++i) {
    tlo[i] = std::max(lo[i], 1.0 - (sum_hi - hi[i]));
    thi[i] = std::min(hi[i], 1.0 - (sum_lo - lo[i]));
  }
  return true;
}

// Min (or max) of weights . p over {lo <= p <= hi, sum p = 1}; greedy fill
// of the remaining mass in weight order.
double LinearBound(const std::vector<double>& weights,
                   const std::vector<double>& lo,
                   const std::vector<double>& hi, bool maximise,
                   std::vector<int>& order) {
  order.resize(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return maximise ? weights[x] > weights[y] : weights[x] < weights[y];
  });
  double value = 0, remaining = 1.0;
  for (size_t i = 0; i < lo.size(); ++i) {
    value += weights[i] * lo[i];
    remaining -= lo[i];
  }
  for (int i : order) {
    if (remaining <= 0) break;
    const double add = std::min(hi[i] - lo[i], remaining);
    value += weights[i] * add;
    remaining -= add;
  }
  return value;
}

}  // namespace

std::string CertificateVerdictName(CertificateVerdict v) {
  return v == CertificateVerdict::kCertified ? "certified" : "undecided";
}

NonExistenceCertificate CertifyNoFEquilibrium(const TwoValuesGame& g,
                                              const Valuation& v, double eps,
                                              int max_depth) {
  if (v.a() != g.a() || v.b() != g.b()) {
    throw InputError("valuation costs do not match the game's a and b");
  }
  if (!(eps > 0) || max_depth < 1) {
    throw InputError("certifier needs eps > 0 and max_depth >= 1");
  }
  const int n1 = g.num_rows(), n2 = g.num_cols();
  const double peak = X0(v);
  auto F = [&](double x) { return v(std::clamp(x, 0.0, 1.0)); };

  NonExistenceCertificate cert{CertificateVerdict::kCertified, eps, 0, 0,
                               std::vector<int64_t>(max_depth + 1, 0)};

  // pays_a[k][own][theirs] is 1 when player k pays a.
  std::array<std::vector<std::vector<double>>, 2> pays_a;
  for (Player k : {Player::kOne, Player::kTwo}) {
    const int own = g.game().NumStrategies(k);
    const int theirs = g.game().NumStrategies(Opponent(k));
    auto& m = pays_a[PlayerIndex(k)];
    m.assign(own, std::vector<double>(theirs, 0.0));
    for (int s = 0; s < own; ++s) {
      for (int t = 0; t < theirs; ++t) {
        const bool a = k == Player::kOne ? g.IsA(k, s, t) : g.IsA(k, t, s);
        m[s][t] = a ? 1.0 : 0.0;
      }
    }
  }

  std::vector<double> pure_lo, pure_hi, pure_floor;
  std::vector<int> order;

  // Largest (current lower bound - eps - deviation upper bound) over both
  // players and their pure strategies. Positive means the box is pruned.
  auto margin = [&](const std::array<std::vector<double>, 2>& tlo,
                    const std::array<std::vector<double>, 2>& thi) {
    double best = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < 2; ++k) {
      const int other = 1 - k;
      const auto& m = pays_a[k];
      const int own = static_cast<int>(m.size());
      pure_lo.resize(own);
      pure_hi.resize(own);
      pure_floor.resize(own);
      for (int s = 0; s < own; ++s) {
        pure_lo[s] = LinearBound(m[s], tlo[other], thi[other], false, order);
        pure_hi[s] = LinearBound(m[s], tlo[other], thi[other], true, order);
        pure_floor[s] = std::min(F(pure_lo[s]), F(pure_hi[s]));
      }
      const double x_lo = LinearBound(pure_lo, tlo[k], thi[k], false, order);
      const double x_hi = LinearBound(pure_hi, tlo[k], thi[k], true, order);
      // Concavity also gives F(x) >= sum_s p(s) F(x_s).
      const double cheapest_current =
          std::max(std::min(F(x_lo), F(x_hi)),
                   LinearBound(pure_floor, tlo[k], thi[k], false, order));
      for (int s = 0; s < own; ++s) {
        const double worst_deviation =
            F(std::clamp(peak, pure_lo[s], pure_hi[s]));
        best = std::max(best, cheapest_current - eps - worst_deviation);
      }
    }
    return best;
  };

  // Margin of a box after intersecting it with the simplices; +inf if empty.
  std::array<std::vector<double>, 2> tlo, thi;
  auto box_margin = [&](const Box& box) {
    if (!Tighten(box.lo[0], box.hi[0], tlo[0], thi[0]) ||
        !Tighten(box.lo[1], box.hi[1], tlo[1], thi[1])) {
      return std::numeric_limits<double>::infinity();
    }
    return margin(tlo, thi);
  };

  std::vector<Box> stack;
  stack.push_back({{std::vector<double>(n1, 0.0), std::vector<double>(n2, 0.0)},
                   {std::vector<double>(n1, 1.0), std::vector<double>(n2, 1.0)},
                   0});

  while (!stack.empty()) {
    Box box = std::move(stack.back());
    stack.pop_back();
    ++cert.explored_boxes;
    ++cert.depth_histogram[box.depth];
    cert.max_depth_reached = std::max(cert.max_depth_reached, box.depth);

    if (box_margin(box) > 0) continue;
    if (box.depth >= max_depth) {
      cert.verdict = CertificateVerdict::kUndecided;
      return cert;
    }

    // Shrink to the tightened box, snapped outwards to a dyadic grid.
    for (int k = 0; k < 2; ++k) {
      for (size_t i = 0; i < tlo[k].size(); ++i) {
        box.lo[k][i] =
            std::max(box.lo[k][i], std::floor(tlo[k][i] * kGrid) / kGrid);
        box.hi[k][i] =
            std::min(box.hi[k][i], std::ceil(thi[k][i] * kGrid) / kGrid);
      }
    }

    // Widest coordinate over both players.
    int split_k = 0, split_i = 0;
    double widest = -1;
    for (int k = 0; k < 2; ++k) {
      for (size_t i = 0; i < box.lo[k].size(); ++i) {
        const double width = box.hi[k][i] - box.lo[k][i];
        if (width > widest) {
          widest = width;
          split_k = k;
          split_i = static_cast<int>(i);
        }
      }
    }
    const double mid =
        0.5 * (box.lo[split_k][split_i] + box.hi[split_k][split_i]);
    Box upper = box;
    upper.lo[split_k][split_i] = mid;
    upper.depth = box.depth + 1;
    box.hi[split_k][split_i] = mid;
    box.depth += 1;
    stack.push_back(std::move(upper));
    stack.push_back(std::move(box));
  }
  return cert;
}

}  // namespace eqforge
