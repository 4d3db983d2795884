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

#include "linear_system.h"

#include <algorithm>
#include <utility>

namespace eqforge::internal {
namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix Augmented(int dim, const std::vector<LinearConstraint>& rows) {
  Matrix m;
  m.reserve(rows.size());
  for (const auto& c : rows) {
    std::vector<Rational> r(c.coeffs);
    r.resize(dim);
    r.push_back(c.rhs);
    m.push_back(std::move(r));
  }
  return m;
}

// Reduced row echelon form in place. Returns the rank, or -1 when a row
// reduces to 0 = nonzero.
int Reduce(Matrix& m, int dim) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  for (int col = 0; col < dim && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const Rational inv = 1 / m[rank][col];
    for (int c = col; c <= dim; ++c) m[rank][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (int c = col; c <= dim; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  for (int r = rank; r < rows; ++r) {
    if (m[r][dim] != 0) return -1;
  }
  return rank;
}

std::optional<std::vector<Rational>> SolveReduced(Matrix m, int dim) {
  if (Reduce(m, dim) != dim) return std::nullopt;
  std::vector<Rational> x(dim);
  for (int r = 0; r < dim; ++r) x[r] = m[r][dim];
  return x;
}

bool Satisfies(const LinearConstraint& c, const std::vector<Rational>& x) {
  Rational lhs = 0;
  for (size_t i = 0; i < c.coeffs.size(); ++i) {
    if (c.coeffs[i] != 0) lhs += c.coeffs[i] * x[i];
  }
  return lhs >= c.rhs;
}

}  // namespace

std::optional<std::vector<Rational>> SolveUnique(
    int dim, const std::vector<LinearConstraint>& equations) {
  return SolveReduced(Augmented(dim, equations), dim);
}

std::vector<std::vector<Rational>> EnumerateVertices(
    int dim, const std::vector<LinearConstraint>& equalities,
    const std::vector<LinearConstraint>& inequalities) {
  std::vector<std::vector<Rational>> out;
  Matrix base = Augmented(dim, equalities);
  const int rank = Reduce(base, dim);
  if (rank < 0) return out;
  base.resize(rank);

  const int need = dim - rank;
  const int m = static_cast<int>(inequalities.size());
  if (need > m) return out;

  std::vector<int> pick(need);
  for (int i = 0; i < need; ++i) pick[i] = i;
  while (true) {
    Matrix sys = base;
    for (int idx : pick) {
      std::vector<Rational> r(inequalities[idx].coeffs);
      r.resize(dim);
      r.push_back(inequalities[idx].rhs);
      sys.push_back(std::move(r));
    }
    if (auto x = SolveReduced(std::move(sys), dim)) {
      const bool feasible = std::all_of(
          inequalities.begin(), inequalities.end(),
          [&](const LinearConstraint& c) { return Satisfies(c, *x); });
      if (feasible && std::find(out.begin(), out.end(), *x) == out.end()) {
        out.push_back(std::move(*x));
      }
    }
    // Next combination in lexicographic order.
    int i = need - 1;
    while (i >= 0 && pick[i] == m - need + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace eqforge::internal
