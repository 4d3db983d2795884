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

#include "eqforge/json_io.h"

#include <fstream>
#include <set>
#include <sstream>

#include "eqforge/errors.h"

namespace eqforge {
namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int IntFromJson(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw InputError(std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

std::vector<std::vector<Rational>> MatrixFromJson(const Json& j,
                                                  const char* what) {
  if (!j.is_array() || j.empty()) {
    throw InputError(std::string(what) + " must be a non-empty matrix");
  }
  std::vector<std::vector<Rational>> m;
  for (const Json& row : j) {
    if (!row.is_array() || row.empty()) {
      throw InputError(std::string(what) + " rows must be non-empty arrays");
    }
    std::vector<Rational> r;
    for (const Json& x : row) r.push_back(RationalFromJson(x));
    if (!m.empty() && r.size() != m.front().size()) {
      throw InputError(std::string(what) + " is ragged");
    }
    m.push_back(std::move(r));
  }
  return m;
}

std::vector<Rational> Flatten(const std::vector<std::vector<Rational>>& m) {
  std::vector<Rational> out;
  for (const auto& r : m) out.insert(out.end(), r.begin(), r.end());
  return out;
}

Json Matrix(const Game& g, Player p) {
  Json m = Json::array();
  for (int r = 0; r < g.num_rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < g.num_cols(); ++c) row.push_back(ToJson(g.cost(p, r, c)));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

Json ToJson(const Rational& r) { return ToString(r); }

Rational RationalFromJson(const Json& j) {
  if (j.is_string()) return ParseRational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) {
    // Decimal text keeps "0.75" exact.
    return ParseRational(j.dump());
  }
  throw InputError("expected a rational, got " + j.dump());
}

Json ToJson(const Game& g) {
  Json j;
  j["mu1"] = Matrix(g, Player::kOne);
  j["mu2"] = Matrix(g, Player::kTwo);
  return j;
}

Json ToJson(const TwoValuesGame& g) {
  Json j;
  j["a"] = ToJson(g.a());
  j["b"] = ToJson(g.b());
  Json cells = Json::array();
  for (int r = 0; r < g.num_rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < g.num_cols(); ++c) {
      row.push_back(Json::array({g.IsA(Player::kOne, r, c) ? "a" : "b",
                                 g.IsA(Player::kTwo, r, c) ? "a" : "b"}));
    }
    cells.push_back(std::move(row));
  }
  j["cells"] = std::move(cells);
  return j;
}

GameDocument GameFromJson(const Json& j) {
  try {
    if (j.is_object() && j.contains("cells")) {
      const Rational a = RationalFromJson(Field(j, "a"));
      const Rational b = RationalFromJson(Field(j, "b"));
      const Json& cells = j.at("cells");
      if (!cells.is_array() || cells.empty()) {
        throw InputError("cells must be a non-empty matrix");
      }
      const int rows = static_cast<int>(cells.size());
      const int cols = static_cast<int>(cells[0].size());
      std::vector<bool> a1, a2;
      for (const Json& row : cells) {
        if (!row.is_array() || static_cast<int>(row.size()) != cols) {
          throw InputError("cells is ragged");
        }
        for (const Json& cell : row) {
          if (!cell.is_array() || cell.size() != 2) {
            throw InputError("each cell must be a pair of letters");
          }
          for (int p = 0; p < 2; ++p) {
            const std::string letter = cell[p].get<std::string>();
            if (letter != "a" && letter != "b") {
              throw InputError("cell entries must be \"a\" or \"b\"");
            }
            (p == 0 ? a1 : a2).push_back(letter == "a");
          }
        }
      }
      TwoValuesGame g = TwoValuesGame::FromPattern(rows, cols, a1, a2, a, b);
      return {g.game(), g};
    }
    const auto m1 = MatrixFromJson(Field(j, "mu1"), "mu1");
    const auto m2 = MatrixFromJson(Field(j, "mu2"), "mu2");
    if (m1.size() != m2.size() || m1[0].size() != m2[0].size()) {
      throw InputError("mu1 and mu2 differ in shape");
    }
    Game game(static_cast<int>(m1.size()), static_cast<int>(m1[0].size()),
              Flatten(m1), Flatten(m2));
    std::set<Rational> values;
    for (const auto* m : {&m1, &m2}) {
      for (const auto& r : *m) values.insert(r.begin(), r.end());
    }
    GameDocument doc{game, std::nullopt};
    if (values.size() == 2) {
      doc.two_values = TwoValuesGame(game, *values.begin(), *values.rbegin());
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed game: ") + e.what());
  }
}

Json ToJson(const CondensedNormalGame& c) {
  Json j;
  j["n"] = c.n();
  j["col"] = std::vector<int>(c.cols().begin(), c.cols().end());
  j["row"] = std::vector<int>(c.rows().begin(), c.rows().end());
  j["a"] = ToJson(c.a());
  j["b"] = ToJson(c.b());
  return j;
}

CondensedNormalGame CondensedFromJson(const Json& j) {
  try {
    const int n = IntFromJson(Field(j, "n"), "n");
    auto ints = [&](const char* key) {
      const Json& arr = Field(j, key);
      if (!arr.is_array() || static_cast<int>(arr.size()) != n) {
        throw InputError(std::string(key) + " must have n entries");
      }
      std::vector<int> v;
      for (const Json& x : arr) v.push_back(IntFromJson(x, key));
      return v;
    };
    const Rational a = j.contains("a") ? RationalFromJson(j.at("a")) : Rational(0);
    const Rational b = j.contains("b") ? RationalFromJson(j.at("b")) : Rational(1);
    return CondensedNormalGame(ints("col"), ints("row"), a, b);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed condensed game: ") + e.what());
  }
}

Json ToJson(const MixedStrategy& s) {
  Json arr = Json::array();
  for (const Rational& p : s.probs()) arr.push_back(ToJson(p));
  return arr;
}

Json ToJson(const Profile& p) {
  Json j;
  j["p1"] = ToJson(p.p1);
  j["p2"] = ToJson(p.p2);
  return j;
}

Profile ProfileFromJson(const Json& j) {
  auto strategy = [&](const char* key) {
    const Json& arr = Field(j, key);
    if (!arr.is_array()) throw InputError(std::string(key) + " must be an array");
    std::vector<Rational> probs;
    for (const Json& x : arr) probs.push_back(RationalFromJson(x));
    return MixedStrategy(std::move(probs));
  };
  return {strategy("p1"), strategy("p2")};
}

Json ToJson(const Valuation& v) {
  Json j;
  j["kind"] = KindName(v.kind());
  j["a"] = ToJson(v.a());
  j["b"] = ToJson(v.b());
  if (v.kind() == ValuationKind::kEVar || v.kind() == ValuationKind::kESD) {
    j["gamma"] = ToJson(v.parameter());
  } else if (v.kind() == ValuationKind::kCVaR) {
    j["alpha"] = ToJson(v.parameter());
  }
  return j;
}

Valuation ValuationFromJson(const Json& j) {
  try {
    const std::string kind = Field(j, "kind").get<std::string>();
    const Rational a = j.contains("a") ? RationalFromJson(j.at("a")) : Rational(0);
    const Rational b = j.contains("b") ? RationalFromJson(j.at("b")) : Rational(1);
    if (kind == "expectation") return Valuation::Expectation(a, b);
    if (kind == "evar") return Valuation::EVar(a, b, RationalFromJson(Field(j, "gamma")));
    if (kind == "esd") return Valuation::ESD(a, b, RationalFromJson(Field(j, "gamma")));
    if (kind == "cvar") return Valuation::CVaR(a, b, RationalFromJson(Field(j, "alpha")));
    throw InputError("unknown valuation kind \"" + kind + "\"");
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed valuation: ") + e.what());
  }
}

Json ToJson(const Cost& c) {
  Json j;
  j["value"] = c.value;
  if (c.exact) j["exact"] = ToJson(*c.exact);
  return j;
}

Json ToJson(const EquilibriumReport& r) {
  Json j;
  j["verdict"] = r.is_equilibrium() ? "equilibrium" : "not-equilibrium";
  if (r.witness) {
    Json w;
    w["player"] = static_cast<int>(r.witness->player);
    w["strategy"] = r.witness->strategy;
    w["current"] = ToJson(r.witness->current);
    w["deviation"] = ToJson(r.witness->deviation);
    j["witness"] = std::move(w);
  }
  j["weep"] = {r.weep[0], r.weep[1]};
  return j;
}

Json ToJson(const NonExistenceCertificate& c) {
  Json j;
  j["verdict"] = CertificateVerdictName(c.verdict);
  j["epsilon"] = c.epsilon;
  j["explored_boxes"] = c.explored_boxes;
  j["max_depth_reached"] = c.max_depth_reached;
  j["depth_histogram"] = c.depth_histogram;
  return j;
}

Json ToJson(const TheoremVerdict& v) {
  Json j;
  j["theorem"] = TheoremName(v.theorem);
  j["m"] = v.m;
  j["holds"] = v.holds;
  j["undecided_at_tolerance"] = v.undecided_at_tolerance;
  Json conditions = Json::object();
  for (const Clause& c : v.conditions) conditions[c.name] = c.value;
  j["conditions"] = std::move(conditions);
  if (v.witness) {
    j["witness"] = ToJson(*v.witness);
    j["witness_regime"] = RegimeName(*v.witness_regime);
    j["witness_verified"] = v.witness_verified;
  }
  return j;
}

Json ToJson(const WinningPair& p) {
  Json j;
  j["rows"] = {p.rows[0], p.rows[1]};
  j["cols"] = {p.cols[0], p.cols[1]};
  return j;
}

Json ToJson(const WinPairResult& r) {
  Json j;
  j["outcome"] = OutcomeName(r.outcome);
  if (r.pair) j["pair"] = ToJson(*r.pair);
  j["n"] = r.n;
  j["scans"] = r.scans;
  j["route"] = r.route;
  return j;
}

Json ToJson(const ValuationAnalysis& a) {
  Json j;
  j["x0"] = a.x0;
  if (a.x1) {
    j["x1"] = *a.x1;
  } else {
    j["x1"] = nullptr;
  }
  j["half_class"] = ComparisonName(a.half_class);
  j["unimodal"] = a.unimodal;
  return j;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("cannot parse " + path + ": " + e.what());
  }
}

}  // namespace eqforge
