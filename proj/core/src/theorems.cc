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

#include "eqforge/theorems.h"

#include <cmath>

#include "eqforge/equilibrium.h"
#include "eqforge/errors.h"

namespace eqforge {
namespace {

// F(x) against b, recording whether a tolerance band decided it.
class Probe {
 public:
  Probe(const Valuation& v, double rel_tol) : v_(v), rel_tol_(rel_tol) {}

  Comparison At(const Rational& x) {
    const BComparison c = CompareToB(v_, x, rel_tol_);
    if (!c.exact && c.result == Comparison::kEqual) banded_ = true;
    return c.result;
  }
  bool banded() const { return banded_; }

 private:
  const Valuation& v_;
  double rel_tol_;
  bool banded_ = false;
};

void AttachWitness(TheoremVerdict& verdict, Family family, Regime regime,
                   const Valuation& v) {
  const TwoValuesGame game = family == Family::kD
                                 ? GenD(verdict.m, v.a(), v.b())
                                 : GenC(verdict.m, v.a(), v.b());
  verdict.witness = KnownEquilibrium(family, verdict.m, regime);
  verdict.witness_regime = regime;
  verdict.witness_verified =
      VerifyFEquilibrium(game, v, *verdict.witness).is_equilibrium();
}

}  // namespace

std::string TheoremName(TheoremId id) {
  switch (id) {
    case TheoremId::kDmUniqueness: return "dm-uniqueness";
    case TheoremId::kCmNonexistence: return "cm-nonexistence";
    case TheoremId::kSynthesis: return "synthesis";
  }
  return "unknown";
}

TheoremVerdict DmUniqueness(int m, const Valuation& v, double rel_tol) {
  if (m < 2) throw InputError("D_m needs m >= 2");
  TheoremVerdict out;
  out.theorem = TheoremId::kDmUniqueness;
  out.m = m;
  out.holds = false;
  Probe probe(v, rel_tol);
  const bool small = m <= 3;
  out.conditions.push_back({"m <= 3", small});
  if (small) {
    out.holds = true;
    return out;
  }
  if (m % 2 == 0) {
    const bool split_ne_b = probe.At(Rational(2, m)) != Comparison::kEqual;
    const bool block_lt_b = probe.At(Rational(2, m - 2)) == Comparison::kLess;
    out.conditions.push_back({"F(2/m) != b", split_ne_b});
    out.conditions.push_back({"F(2/(m-2)) < b", block_lt_b});
    out.holds = split_ne_b && block_lt_b;
    if (!out.holds) {
      AttachWitness(out, Family::kD,
                    split_ne_b ? Regime::kEvenBlock : Regime::kEvenSplit, v);
    }
  } else {
    const bool block_lt_b = probe.At(Rational(2, m - 1)) == Comparison::kLess;
    out.conditions.push_back({"F(2/(m-1)) < b", block_lt_b});
    out.holds = block_lt_b;
    if (!out.holds) AttachWitness(out, Family::kD, Regime::kOddBlock, v);
  }
  out.undecided_at_tolerance = probe.banded();
  return out;
}

TheoremVerdict CmNonexistence(int m, const Valuation& v, double rel_tol) {
  if (m < 2) throw InputError("C_m needs m >= 2");
  TheoremVerdict out;
  out.theorem = TheoremId::kCmNonexistence;
  out.m = m;
  out.holds = false;
  Probe probe(v, rel_tol);
  const bool uniform_gt_b = probe.At(Rational(1, m)) == Comparison::kGreater;
  out.conditions.push_back({"F(1/m) > b", uniform_gt_b});
  std::optional<Regime> regime;
  if (!uniform_gt_b) regime = Regime::kUniform;

  if (m % 2 == 0) {
    const bool half_lt_b = probe.At(Rational(2, m)) == Comparison::kLess;
    out.conditions.push_back({"F(2/m) < b", half_lt_b});
    if (!regime && !half_lt_b) regime = Regime::kCEven;
  } else {
    const bool wide_ne_b = probe.At(Rational(2, m + 1)) != Comparison::kEqual;
    const bool narrow_lt_b = probe.At(Rational(2, m - 1)) == Comparison::kLess;
    out.conditions.push_back({"F(2/(m+1)) != b", wide_ne_b});
    out.conditions.push_back({"F(2/(m-1)) < b", narrow_lt_b});
    if (!regime && !wide_ne_b) regime = Regime::kCOddEqual;
    if (!regime && !narrow_lt_b) regime = Regime::kCOddGeq;
  }
  out.holds = !regime.has_value();
  if (regime) AttachWitness(out, Family::kC, *regime, v);
  out.undecided_at_tolerance = probe.banded();
  return out;
}

SynthesisResult SynthesizeCounterexample(const Valuation& v) {
  if (v.kind() == ValuationKind::kCVaR) {
    return {std::nullopt, "valuation is not unimodal"};
  }
  if (X0(v) == 0.0) {
    return {std::nullopt,
            "maximiser x0 = 0: every game has an equilibrium"};
  }
  if (ClassifyHalf(v) == Comparison::kEqual) {
    return {std::nullopt,
            "F(1/2) = b: normal games with n >= 5 always have an equilibrium"};
  }
  int m;
  if (auto exact = X1Exact(v)) {
    // Smallest m with 1/m < x1, i.e. floor(1/x1) + 1.
    const Rational inv = 1 / *exact;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
    m = static_cast<int>(fl.get_si()) + 1;
  } else {
    m = static_cast<int>(std::floor(1.0 / *X1(v))) + 1;
  }
  if (m < 2) m = 2;
  TheoremVerdict verdict = CmNonexistence(m, v);
  if (!verdict.holds) {
    return {std::nullopt,
            "C_" + std::to_string(m) + " does not meet the non-existence test"};
  }
  return {Counterexample{m, GenC(m, v.a(), v.b()), std::move(verdict)}, ""};
}

bool EvarPpadRegime(const Valuation& v) {
  if (v.kind() != ValuationKind::kEVar) {
    throw InputError("EvarPpadRegime needs an EVar valuation");
  }
  return v.parameter() * (v.b() - v.a()) <= 1;
}

}  // namespace eqforge
