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

#ifndef EQFORGE_JSON_IO_H_
#define EQFORGE_JSON_IO_H_

#include <optional>
#include <string>

#include "eqforge/certify.h"
#include "eqforge/equilibrium.h"
#include "eqforge/existence.h"
#include "eqforge/game.h"
#include "eqforge/theorems.h"
#include "eqforge/valuation.h"
#include "eqforge/winpair.h"
#include "json.hpp"

namespace eqforge {

using Json = nlohmann::ordered_json;

// Rationals travel as canonical strings; numbers are accepted on input.
Json ToJson(const Rational& r);
Rational RationalFromJson(const Json& j);

// Two-values games: {"a", "b", "cells": [[["a","b"], ...], ...]}.
// General games: {"mu1": [[...]], "mu2": [[...]]}.
Json ToJson(const Game& g);
Json ToJson(const TwoValuesGame& g);

struct GameDocument {
  Game game;
  std::optional<TwoValuesGame> two_values;
};
// A general game whose costs take exactly two values is also returned as a
// two-values game.
GameDocument GameFromJson(const Json& j);

// {"n", "col", "row", "a", "b"}
Json ToJson(const CondensedNormalGame& c);
CondensedNormalGame CondensedFromJson(const Json& j);

// {"p1": [...], "p2": [...]}
Json ToJson(const MixedStrategy& s);
Json ToJson(const Profile& p);
Profile ProfileFromJson(const Json& j);

// {"kind", "a", "b", "gamma" | "alpha"}; custom valuations are not
// serialisable.
Json ToJson(const Valuation& v);
Valuation ValuationFromJson(const Json& j);

Json ToJson(const Cost& c);
Json ToJson(const EquilibriumReport& r);
Json ToJson(const NonExistenceCertificate& c);
Json ToJson(const TheoremVerdict& v);
Json ToJson(const WinningPair& p);
Json ToJson(const WinPairResult& r);
Json ToJson(const ValuationAnalysis& a);

// Throws InputError with the file name on read or parse failure.
Json ReadJsonFile(const std::string& path);

}  // namespace eqforge

#endif  // EQFORGE_JSON_IO_H_
