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

#ifndef EQFORGE_SRC_LINEAR_SYSTEM_H_
#define EQFORGE_SRC_LINEAR_SYSTEM_H_

#include <optional>
#include <vector>

#include "eqforge/rational.h"

namespace eqforge::internal {

// coeffs . x (= or >=) rhs
struct LinearConstraint {
  std::vector<Rational> coeffs;
  Rational rhs;
};

// Unique solution of the square-or-taller system, nullopt when the system
// is inconsistent or underdetermined.
std::optional<std::vector<Rational>> SolveUnique(
    int dim, const std::vector<LinearConstraint>& equations);

// All vertices of {x : E x = e, G x >= g}, in discovery order.
std::vector<std::vector<Rational>> EnumerateVertices(
    int dim, const std::vector<LinearConstraint>& equalities,
    const std::vector<LinearConstraint>& inequalities);

}  // namespace eqforge::internal

#endif  // EQFORGE_SRC_LINEAR_SYSTEM_H_
