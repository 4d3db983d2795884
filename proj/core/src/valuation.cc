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

#include "eqforge/valuation.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "eqforge/errors.h"

namespace eqforge {
namespace {

constexpr double kSearchTol = 1e-12;

void CheckUnitInterval(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InputError("x = " + std::to_string(x) + " is outside [0, 1]");
  }
}

}  // namespace

std::string KindName(ValuationKind kind) {
  switch (kind) {
    case ValuationKind::kExpectation: return "expectation";
    case ValuationKind::kEVar: return "evar";
    case ValuationKind::kESD: return "esd";
    case ValuationKind::kCVaR: return "cvar";
    case ValuationKind::kCustomConcave: return "custom";
  }
  return "unknown";
}

std::string ComparisonName(Comparison c) {
  switch (c) {
    case Comparison::kLess: return "less";
    case Comparison::kEqual: return "equal";
    case Comparison::kGreater: return "greater";
  }
  return "unknown";
}

Valuation::Valuation(ValuationKind kind, Rational a, Rational b,
                     Rational parameter, std::string name)
    : kind_(kind),
      a_(Canonical(std::move(a))),
      b_(Canonical(std::move(b))),
      parameter_(Canonical(std::move(parameter))),
      name_(std::move(name)) {
  if (a_ < 0 || !(a_ < b_)) {
    throw InputError("valuation needs 0 <= a < b, got a=" + ToString(a_) +
                     " b=" + ToString(b_));
  }
  ad_ = a_.get_d();
  bd_ = b_.get_d();
  pd_ = parameter_.get_d();
}

Valuation Valuation::Expectation(Rational a, Rational b) {
  return Valuation(ValuationKind::kExpectation, std::move(a), std::move(b), 0,
                   "expectation");
}

Valuation Valuation::EVar(Rational a, Rational b, Rational gamma) {
  if (gamma <= 0) throw InputError("EVar needs gamma > 0");
  return Valuation(ValuationKind::kEVar, std::move(a), std::move(b),
                   std::move(gamma), "evar");
}

Valuation Valuation::ESD(Rational a, Rational b, Rational gamma) {
  if (gamma <= 0) throw InputError("ESD needs gamma > 0");
  return Valuation(ValuationKind::kESD, std::move(a), std::move(b),
                   std::move(gamma), "esd");
}

Valuation Valuation::CVaR(Rational a, Rational b, Rational alpha) {
  if (alpha < 0 || alpha >= 1) throw InputError("CVaR needs 0 <= alpha < 1");
  return Valuation(ValuationKind::kCVaR, std::move(a), std::move(b),
                   std::move(alpha), "cvar");
}

Valuation Valuation::CustomConcave(Rational a, Rational b,
                                   std::function<double(double)> f,
                                   double declared_x0, std::string name) {
  if (!f) throw InputError("custom valuation needs a function");
  CheckUnitInterval(declared_x0);
  Valuation v(ValuationKind::kCustomConcave, std::move(a), std::move(b), 0,
              std::move(name));
  v.custom_ = std::move(f);
  v.declared_x0_ = declared_x0;

  const double scale = v.bd_ - v.ad_;
  if (std::abs(v.custom_(0.0) - v.bd_) > 1e-9 * scale ||
      std::abs(v.custom_(1.0) - v.ad_) > 1e-9 * scale) {
    throw InputError("custom valuation must satisfy F(0) = b and F(1) = a");
  }
  constexpr int kGrid = 4096;
  int best = 0;
  double best_value = v.custom_(0.0);
  for (int i = 1; i <= kGrid; ++i) {
    const double x = static_cast<double>(i) / kGrid;
    const double fx = v.custom_(x);
    if (fx > best_value) {
      best_value = fx;
      best = i;
    }
    if (i < kGrid) {
      const double mid = 0.5 * (v.custom_((i - 1.0) / kGrid) +
                                v.custom_((i + 1.0) / kGrid));
      if (fx < mid - 1e-12 * (1 + std::abs(v.bd_))) {
        throw InputError("custom valuation is not concave near x = " +
                         std::to_string(x));
      }
    }
  }
  if (std::abs(declared_x0 - static_cast<double>(best) / kGrid) >
      1.0 / kGrid + 1e-12) {
    throw InputError("declared maximiser does not match the function");
  }
  return v;
}

Valuation Valuation::WithCosts(Rational a, Rational b) const {
  Valuation v(kind_, std::move(a), std::move(b), parameter_, name_);
  v.custom_ = custom_;
  v.declared_x0_ = declared_x0_;
  return v;
}

double Valuation::Raw(double x) const {
  const double spread = bd_ - ad_;
  const double mean = ad_ * x + bd_ * (1 - x);
  switch (kind_) {
    case ValuationKind::kExpectation:
      return mean;
    case ValuationKind::kEVar:
      return mean + pd_ * spread * spread * x * (1 - x);
    case ValuationKind::kESD:
      return mean + pd_ * spread * std::sqrt(std::max(0.0, x * (1 - x)));
    case ValuationKind::kCVaR:
      if (x < pd_) return bd_;
      return ((x - pd_) * ad_ + (1 - x) * bd_) / (1 - pd_);
    case ValuationKind::kCustomConcave:
      return custom_(x);
  }
  return mean;
}

double Valuation::operator()(double x) const {
  CheckUnitInterval(x);
  return Raw(x);
}

Cost Valuation::Evaluate(const Rational& x) const {
  if (x < 0 || x > 1) {
    throw InputError("x = " + ToString(x) + " is outside [0, 1]");
  }
  const Rational mean = a_ * x + b_ * (1 - x);
  std::optional<Rational> exact;
  switch (kind_) {
    case ValuationKind::kExpectation:
      exact = mean;
      break;
    case ValuationKind::kEVar: {
      const Rational spread = b_ - a_;
      exact = mean + parameter_ * spread * spread * x * (1 - x);
      break;
    }
    case ValuationKind::kESD:
      if (auto root = ExactSqrt(x * (1 - x))) {
        exact = mean + parameter_ * (b_ - a_) * *root;
      }
      break;
    case ValuationKind::kCVaR:
      if (x < parameter_) {
        exact = b_;
      } else {
        exact = ((x - parameter_) * a_ + (1 - x) * b_) / (1 - parameter_);
      }
      break;
    case ValuationKind::kCustomConcave:
      break;
  }
  if (exact) return {exact->get_d(), std::move(exact)};
  return {Raw(x.get_d()), std::nullopt};
}

std::optional<double> Valuation::ClosedFormX0() const {
  switch (kind_) {
    case ValuationKind::kExpectation:
      return 0.0;
    case ValuationKind::kEVar: {
      const double g = pd_ * (bd_ - ad_);
      return g <= 1 ? 0.0 : 0.5 * (1 - 1 / g);
    }
    case ValuationKind::kESD:
      return 0.5 - 0.5 / std::sqrt(pd_ * pd_ + 1);
    case ValuationKind::kCustomConcave:
      return declared_x0_;
    case ValuationKind::kCVaR:
      return std::nullopt;
  }
  return std::nullopt;
}

double EvalF(const Valuation& v, double x) { return v(x); }

double X0Numeric(const Valuation& v) {
  const double ratio = (std::sqrt(5.0) - 1) / 2;
  double lo = 0, hi = 1;
  double m1 = hi - ratio * (hi - lo), m2 = lo + ratio * (hi - lo);
  double f1 = v(m1), f2 = v(m2);
  // Value comparisons stop resolving once the bracket is near the square
  // root of the rounding error, so golden section only narrows to 1e-5.
  while (hi - lo > 1e-5) {
    if (f1 < f2) {
      lo = m1;
      m1 = m2;
      f1 = f2;
      m2 = lo + ratio * (hi - lo);
      f2 = v(m2);
    } else {
      hi = m2;
      m2 = m1;
      f2 = f1;
      m1 = hi - ratio * (hi - lo);
      f1 = v(m1);
    }
  }
  // Then bisect on the sign of a symmetric difference of fixed width.
  constexpr double kStep = 1e-6;
  while (hi - lo > kSearchTol) {
    const double mid = 0.5 * (lo + hi);
    const double left = std::max(0.0, mid - kStep);
    const double right = std::min(1.0, mid + kStep);
    if (v(right) > v(left)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double mid = 0.5 * (lo + hi);
  // The search never lands exactly on an endpoint maximiser.
  if (v(0.0) >= v(mid)) return 0.0;
  return mid;
}

double X0(const Valuation& v) {
  if (auto closed = v.ClosedFormX0()) return *closed;
  return X0Numeric(v);
}

std::optional<Rational> X1Exact(const Valuation& v) {
  const Rational spread = v.b() - v.a();
  switch (v.kind()) {
    case ValuationKind::kEVar: {
      const Rational g = v.parameter() * spread;
      if (g <= 1) return std::nullopt;
      return Rational(1 - 1 / g);
    }
    case ValuationKind::kESD: {
      const Rational g2 = v.parameter() * v.parameter();
      return Rational(g2 / (1 + g2));
    }
    default:
      return std::nullopt;
  }
}

std::optional<double> X1(const Valuation& v) {
  if (v.kind() == ValuationKind::kCVaR) {
    throw InputError("x1 is undefined for CVaR, which is not unimodal");
  }
  const double x0 = X0(v);
  if (x0 == 0.0) return std::nullopt;
  if (auto exact = X1Exact(v)) return exact->get_d();
  const double b = v.b().get_d();
  double lo = x0, hi = 1.0;
  while (hi - lo > kSearchTol) {
    const double mid = 0.5 * (lo + hi);
    if (v(mid) >= b) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

BComparison CompareToB(const Valuation& v, const Rational& x, double rel_tol) {
  const Cost c = v.Evaluate(x);
  if (c.exact) {
    const int s = cmp(*c.exact, v.b());
    return {s < 0 ? Comparison::kLess
                  : (s == 0 ? Comparison::kEqual : Comparison::kGreater),
            true};
  }
  const double band = rel_tol * Rational(v.b() - v.a()).get_d();
  const double diff = c.value - v.b().get_d();
  if (diff < -band) return {Comparison::kLess, false};
  if (diff > band) return {Comparison::kGreater, false};
  return {Comparison::kEqual, false};
}

Comparison ClassifyHalf(const Valuation& v, double rel_tol) {
  return CompareToB(v, Rational(1, 2), rel_tol).result;
}

bool IsUnimodal(const Valuation& v, int grid_size, double tol) {
  if (grid_size < 16) throw InputError("grid_size must be at least 16");
  std::vector<double> f(grid_size + 1);
  for (int i = 0; i <= grid_size; ++i) {
    f[i] = v(static_cast<double>(i) / grid_size);
  }
  const double band = tol * (1 + std::abs(v.b().get_d()));
  for (int i = 1; i < grid_size; ++i) {
    if (f[i] < 0.5 * (f[i - 1] + f[i + 1]) - band) return false;
  }
  const double top = *std::max_element(f.begin(), f.end());
  int first = -1, last = -1;
  for (int i = 0; i <= grid_size; ++i) {
    if (f[i] >= top - band) {
      if (first < 0) first = i;
      if (last >= 0 && i != last + 1) return false;
      last = i;
    }
  }
  return last - first <= 2;
}

ValuationAnalysis Analyze(const Valuation& v) {
  const bool unimodal = IsUnimodal(v);
  return {X0(v), unimodal ? X1(v) : std::nullopt, ClassifyHalf(v), unimodal};
}

namespace {

std::vector<std::pair<Rational, Rational>> SortedMasses(const Distribution& d) {
  if (d.values.size() != d.probs.size() || d.values.empty()) {
    throw InputError("distribution needs matching non-empty values and probs");
  }
  std::map<Rational, Rational> merged;
  Rational total = 0;
  for (size_t i = 0; i < d.values.size(); ++i) {
    if (d.probs[i] < 0) throw InputError("negative probability");
    total += d.probs[i];
    if (d.probs[i] != 0) merged[d.values[i]] += d.probs[i];
  }
  if (total != 1) throw InputError("distribution probabilities must sum to 1");
  return {merged.begin(), merged.end()};
}

void CheckAlpha(const Rational& alpha) {
  if (alpha < 0 || alpha >= 1) throw InputError("alpha must lie in [0, 1)");
}

}  // namespace

Rational VarOfDistribution(const Distribution& d, const Rational& alpha) {
  CheckAlpha(alpha);
  const auto masses = SortedMasses(d);
  Rational cumulative = 0;
  for (const auto& [value, prob] : masses) {
    cumulative += prob;
    if (cumulative >= alpha) return value;
  }
  return masses.back().first;
}

Rational CvarOfDistribution(const Distribution& d, const Rational& alpha) {
  const Rational var = VarOfDistribution(d, alpha);
  Rational at_or_below = 0, tail = 0;
  for (const auto& [value, prob] : SortedMasses(d)) {
    if (value <= var) {
      at_or_below += prob;
    } else {
      tail += prob * value;
    }
  }
  return ((at_or_below - alpha) * var + tail) / (1 - alpha);
}

Distribution CostDistribution(const Game& g, Player k, const Profile& prof) {
  if (prof.p1.size() != g.num_rows() || prof.p2.size() != g.num_cols()) {
    throw InputError("profile dimensions do not match the game");
  }
  std::map<Rational, Rational> merged;
  for (int r = 0; r < g.num_rows(); ++r) {
    if (prof.p1[r] == 0) continue;
    for (int c = 0; c < g.num_cols(); ++c) {
      if (prof.p2[c] == 0) continue;
      merged[g.cost(k, r, c)] += prof.p1[r] * prof.p2[c];
    }
  }
  Distribution d;
  for (auto& [value, prob] : merged) {
    d.values.push_back(value);
    d.probs.push_back(prob);
  }
  return d;
}

Cost ValuationOfProfile(const TwoValuesGame& g, Player k, const Valuation& v,
                        const Profile& prof) {
  if (v.a() != g.a() || v.b() != g.b()) {
    throw InputError("valuation costs do not match the game's a and b");
  }
  return v.Evaluate(XValue(g, k, prof));
}

}  // namespace eqforge
