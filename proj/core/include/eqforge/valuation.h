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

#ifndef EQFORGE_VALUATION_H_
#define EQFORGE_VALUATION_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eqforge/game.h"
#include "eqforge/rational.h"

namespace eqforge {

enum class ValuationKind { kExpectation, kEVar, kESD, kCVaR, kCustomConcave };

std::string KindName(ValuationKind kind);

// A valuation value. `exact` is filled whenever the closed form can be
// evaluated in rationals; `value` always holds the double approximation.
struct Cost {
  double value = 0;
  std::optional<Rational> exact;
};

// Cost of a distribution over {a, b}, written as a function of the
// probability x of paying a. Every kind satisfies F(0) = b and F(1) = a.
class Valuation {
 public:
  static Valuation Expectation(Rational a, Rational b);
  // Mean plus gamma times variance.
  static Valuation EVar(Rational a, Rational b, Rational gamma);
  // Mean plus gamma times standard deviation.
  static Valuation ESD(Rational a, Rational b, Rational gamma);
  static Valuation CVaR(Rational a, Rational b, Rational alpha);
  // `f` must be concave with f(0) = b, f(1) = a and maximiser `declared_x0`.
  // The declaration is checked on a grid; throws InputError on mismatch.
  static Valuation CustomConcave(Rational a, Rational b,
                                 std::function<double(double)> f,
                                 double declared_x0, std::string name);

  ValuationKind kind() const { return kind_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  // gamma for EVar and ESD, alpha for CVaR, zero otherwise.
  const Rational& parameter() const { return parameter_; }
  const std::string& name() const { return name_; }

  // Same family and parameter, rebased on costs a < b.
  Valuation WithCosts(Rational a, Rational b) const;

  // Throws InputError when x is outside [0, 1].
  double operator()(double x) const;
  Cost Evaluate(const Rational& x) const;

  // Closed-form maximiser, or the declared one for custom valuations.
  std::optional<double> ClosedFormX0() const;

 private:
  Valuation(ValuationKind kind, Rational a, Rational b, Rational parameter,
            std::string name);
  double Raw(double x) const;

  ValuationKind kind_;
  Rational a_;
  Rational b_;
  Rational parameter_;
  std::string name_;
  double ad_, bd_, pd_;
  std::function<double(double)> custom_;
  double declared_x0_ = 0;
};

double EvalF(const Valuation& v, double x);

// Maximiser of F on [0, 1].
double X0(const Valuation& v);
// Golden-section bracketing refined by bisection on the slope sign;
// independent of any closed form.
double X0Numeric(const Valuation& v);

// The point x1 > x0 where F returns to b; nullopt when x0 = 0.
// Throws InputError for valuations that are not unimodal.
std::optional<double> X1(const Valuation& v);
// x1 in rationals when a closed form exists (EVar, ESD).
std::optional<Rational> X1Exact(const Valuation& v);

enum class Comparison { kLess, kEqual, kGreater };

std::string ComparisonName(Comparison c);

struct BComparison {
  Comparison result;
  // False when the answer came from a tolerance band rather than exactly.
  bool exact;
};

// Compares F(x) with b; doubles use a band of rel_tol * (b - a).
BComparison CompareToB(const Valuation& v, const Rational& x,
                       double rel_tol = 1e-10);

// Classification of F(1/2) against b.
Comparison ClassifyHalf(const Valuation& v, double rel_tol = 1e-10);

// Midpoint concavity on a uniform grid plus a single narrow maximum plateau.
bool IsUnimodal(const Valuation& v, int grid_size = 4096, double tol = 1e-12);

struct ValuationAnalysis {
  double x0;
  std::optional<double> x1;
  Comparison half_class;
  bool unimodal;
};

ValuationAnalysis Analyze(const Valuation& v);

// Finite cost distribution, values paired with probabilities.
struct Distribution {
  std::vector<Rational> values;
  std::vector<Rational> probs;
};

// Lower alpha-quantile. Throws InputError for alpha outside [0, 1).
Rational VarOfDistribution(const Distribution& d, const Rational& alpha);
// Mean of the upper (1 - alpha) tail.
Rational CvarOfDistribution(const Distribution& d, const Rational& alpha);

// Cost outcomes of player k under the profile, merged and sorted by value.
Distribution CostDistribution(const Game& g, Player k, const Profile& prof);

// F(x_k) for the profile.
Cost ValuationOfProfile(const TwoValuesGame& g, Player k, const Valuation& v,
                        const Profile& prof);

}  // namespace eqforge

#endif  // EQFORGE_VALUATION_H_
