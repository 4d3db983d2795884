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

#ifndef EQFORGE_RATIONAL_H_
#define EQFORGE_RATIONAL_H_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace eqforge {

using Rational = mpq_class;

// Accepts "p/q", integers and finite decimals ("0.75"). Throws InputError.
Rational ParseRational(std::string_view text);

// Lowest terms, "p/q" or "p" when the denominator is one.
std::string ToString(const Rational& value);

// Exact square root when `value` is the square of a rational.
std::optional<Rational> ExactSqrt(const Rational& value);

// Lowest-terms copy. Values built from a numerator and denominator pair are
// not reduced by gmpxx.
inline Rational Canonical(Rational value) {
  value.canonicalize();
  return value;
}

inline double ToDouble(const Rational& value) { return value.get_d(); }

}  // namespace eqforge

#endif  // EQFORGE_RATIONAL_H_
