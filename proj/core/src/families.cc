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

#include "eqforge/families.h"

#include <algorithm>
#include <random>
#include <utility>

#include "eqforge/errors.h"

namespace eqforge {
namespace {

std::vector<int> Range(int lo, int hi) {  // [lo, hi]
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

Profile UniformProfile(int size, const std::vector<int>& s1,
                       const std::vector<int>& s2) {
  return {MixedStrategy::UniformOn(size, s1), MixedStrategy::UniformOn(size, s2)};
}

// Cell codes: first letter player one, second letter player two.
TwoValuesGame FromCells(const std::vector<std::string>& cells, int n,
                        const Rational& a, const Rational& b) {
  std::vector<bool> a1(n * n), a2(n * n);
  for (int k = 0; k < n * n; ++k) {
    a1[k] = cells[k][0] == 'a';
    a2[k] = cells[k][1] == 'a';
  }
  return TwoValuesGame::FromPattern(n, n, a1, a2, a, b);
}

}  // namespace

TwoValuesGame GenD(int m, Rational a, Rational b) {
  if (m < 2) throw InputError("D_m needs m >= 2");
  std::vector<bool> a1(m * m), a2(m * m);
  for (int i = 0; i < m; ++i) {
    a1[i * m + i] = true;
    a2[i * m + (i + 1) % m] = true;
  }
  return TwoValuesGame::FromPattern(m, m, a1, a2, std::move(a), std::move(b));
}

TwoValuesGame GenC(int m, Rational a, Rational b) {
  if (m < 2) throw InputError("C_m needs m >= 2");
  const int n = m + 1;
  std::vector<bool> a1(n * n), a2(n * n);
  for (int i = 0; i < m; ++i) {
    a1[i * n + i] = true;
    a2[i * n + (i + 1) % m] = true;
  }
  a1[0 * n + m] = true;
  a2[m * n + m] = true;
  return TwoValuesGame::FromPattern(n, n, a1, a2, std::move(a), std::move(b));
}

Game Crawford() {
  auto r = [](int v) { return Rational(v); };
  return Game(2, 2, {r(2), r(1), r(1), r(3)}, {r(2), r(3), r(3), r(1)});
}

std::string RegimeName(Regime r) {
  switch (r) {
    case Regime::kUniform: return "uniform";
    case Regime::kEvenSplit: return "even-split";
    case Regime::kEvenBlock: return "even-block";
    case Regime::kOddBlock: return "odd-block";
    case Regime::kCEven: return "c-even";
    case Regime::kCOddEqual: return "c-odd-equal";
    case Regime::kCOddGeq: return "c-odd-geq";
  }
  return "unknown";
}

std::string FamilyName(Family f) { return f == Family::kD ? "D" : "C"; }

Profile KnownEquilibrium(Family family, int m, Regime regime) {
  if (m < 2) throw InputError("families need m >= 2");
  const bool even = m % 2 == 0;
  auto inapplicable = [&]() {
    return InputError("regime " + RegimeName(regime) + " does not apply to " +
                      FamilyName(family) + "_" + std::to_string(m));
  };
  if (family == Family::kD) {
    switch (regime) {
      case Regime::kUniform:
        return UniformProfile(m, Range(0, m - 1), Range(0, m - 1));
      case Regime::kEvenSplit: {
        if (!even || m < 4) throw inapplicable();
        std::vector<int> evens, odds;
        for (int i = 0; i < m; ++i) (i % 2 == 0 ? evens : odds).push_back(i);
        return UniformProfile(m, evens, odds);
      }
      case Regime::kEvenBlock:
        if (!even || m < 4) throw inapplicable();
        return UniformProfile(m, Range(m / 2, m - 2), Range(0, m / 2 - 2));
      case Regime::kOddBlock:
        if (even || m < 5) throw inapplicable();
        return UniformProfile(m, Range((m - 1) / 2, m - 2),
                              Range(0, (m - 3) / 2));
      default:
        throw inapplicable();
    }
  }
  const int n = m + 1;
  switch (regime) {
    case Regime::kUniform:
      return UniformProfile(n, Range(0, m - 1), Range(0, m - 1));
    case Regime::kCEven: {
      if (!even) throw inapplicable();
      std::vector<int> s1 = Range(m / 2, m - 2);
      s1.push_back(m);
      return UniformProfile(n, s1, Range(0, m / 2 - 1));
    }
    case Regime::kCOddEqual: {
      if (even) throw inapplicable();
      std::vector<int> s1, s2;
      for (int i = 1; i <= m; i += 2) s1.push_back(i);
      for (int j = 2; j <= m - 1; j += 2) s2.push_back(j);
      s2.push_back(m);
      return UniformProfile(n, s1, s2);
    }
    case Regime::kCOddGeq: {
      if (even || m < 5) throw inapplicable();
      std::vector<int> s1 = Range((m + 1) / 2, m - 2);
      s1.push_back(m);
      return UniformProfile(n, s1, Range(0, (m - 3) / 2));
    }
    default:
      throw inapplicable();
  }
}

std::vector<Nis4Fixture> Nis4Fixtures(Rational a, Rational b) {
  std::vector<Nis4Fixture> out;
  out.push_back({"1.1",
                 FromCells({"ba", "bb", "ab", "bb",
                            "ab", "ba", "bb", "bb",
                            "bb", "ab", "ba", "ab",
                            "bb", "bb", "bb", "ba"}, 4, a, b),
                 {{1, 2}, {0, 3}}});
  out.push_back({"1.2",
                 FromCells({"ba", "ab", "bb", "bb",
                            "bb", "ba", "ab", "bb",
                            "ab", "bb", "ba", "ab",
                            "bb", "bb", "bb", "ba"}, 4, a, b),
                 {{0, 2}, {1, 3}}});
  out.push_back({"2.3",
                 FromCells({"ba", "bb", "ab", "ab",
                            "ab", "ba", "bb", "bb",
                            "bb", "ab", "ba", "bb",
                            "bb", "bb", "bb", "ba"}, 4, a, b),
                 {{0, 2}, {1, 3}}});
  out.push_back({"2.4",
                 FromCells({"ba", "ab", "bb", "bb",
                            "bb", "ba", "ab", "ab",
                            "ab", "bb", "ba", "bb",
                            "bb", "bb", "bb", "ba"}, 4, a, b),
                 {{0, 3}, {0, 3}}});
  return out;
}

CondensedNormalGame RandomNormal(int n, uint64_t seed, Rational a, Rational b) {
  if (n < 2) throw InputError("random normal games need n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> col(n), row(n), seen(n);
  const long long max_attempts = 1000LL * n;
  for (long long attempt = 0; attempt < max_attempts; ++attempt) {
    for (int i = 0; i < n; ++i) col[i] = pick(rng);
    for (int j = 0; j < n; ++j) row[j] = pick(rng);
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = col[row[j]] != j;
    if (!ok) continue;
    int distinct_c = 0, distinct_r = 0;
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) distinct_c += seen[col[i]]++ == 0;
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) distinct_r += seen[row[j]]++ == 0;
    if (distinct_c < 2 || distinct_r < 2) continue;
    return CondensedNormalGame(std::move(col), std::move(row), std::move(a),
                               std::move(b));
  }
  throw InputError("rejection sampling exhausted for n = " + std::to_string(n));
}

}  // namespace eqforge
