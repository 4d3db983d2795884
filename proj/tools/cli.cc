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


#include "cli.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "eqforge/certify.h"
#include "eqforge/errors.h"
#include "eqforge/existence.h"
#include "eqforge/families.h"
#include "eqforge/json_io.h"
#include "eqforge/theorems.h"
#include "eqforge/winpair.h"

namespace eqforge::cli {
namespace {

enum class FlagType { kString, kInt, kDouble, kRational, kSwitch };

struct FlagSpec {
  std::string name;
  FlagType type;
  bool required = false;
  std::string help;
};

struct VerbSpec {
  std::string name;
  std::string help;
  std::vector<FlagSpec> flags;
};

constexpr double kDefaultTol = 1e-9;
constexpr double kDefaultEps = 1e-6;
constexpr int kDefaultMaxDepth = 40;

std::vector<FlagSpec> ValuationFlags(bool required) {
  return {
      {"valuation", FlagType::kString, required,
       "expectation | evar | esd | cvar"},
      {"gamma", FlagType::kRational, false, "risk weight for evar and esd"},
      {"alpha", FlagType::kRational, false, "tail level for cvar"},
      {"a", FlagType::kRational, false, "low cost (default 0, or the game's)"},
      {"b", FlagType::kRational, false, "high cost (default 1, or the game's)"},
  };
}

std::vector<FlagSpec> Concat(std::vector<FlagSpec> lhs,
                             const std::vector<FlagSpec>& rhs) {
  lhs.insert(lhs.end(), rhs.begin(), rhs.end());
  return lhs;
}

const std::vector<VerbSpec>& Verbs() {
  static const std::vector<VerbSpec> verbs = {
      {"gen",
       "Generate a game: D, C, nis4, crawford or random",
       {{"family", FlagType::kString, true, "D | C | nis4 | crawford | random"},
        {"m", FlagType::kInt, false, "size parameter for D and C"},
        {"id", FlagType::kString, false, "nis4 fixture id, e.g. 1.1"},
        {"n", FlagType::kInt, false, "size of a random normal game"},
        {"seed", FlagType::kInt, false, "random seed (default 1)"},
        {"expand", FlagType::kSwitch, false,
         "write random games in the cell format"},
        {"regime", FlagType::kString, false,
         "also write the regime's closed-form profile"},
        {"profile-out", FlagType::kString, false, "path for --regime"},
        {"a", FlagType::kRational, false, "low cost (default 0)"},
        {"b", FlagType::kRational, false, "high cost (default 1)"},
        {"o", FlagType::kString, false, "output path (default stdout)"}}},
      {"check",
       "Verify that a profile is an F-equilibrium",
       Concat({{"game", FlagType::kString, true, "game JSON"},
               {"profile", FlagType::kString, true, "profile JSON"},
               {"tol", FlagType::kDouble, false, "relative tolerance"}},
              ValuationFlags(true))},
      {"solve",
       "Search for an F-equilibrium",
       Concat({{"game", FlagType::kString, true, "game JSON"},
               {"tol", FlagType::kDouble, false, "relative tolerance"},
               {"max-support", FlagType::kInt, false,
                "largest dimension for support candidates (default 6)"},
               {"o", FlagType::kString, false, "write the profile here"}},
              ValuationFlags(true))},
      {"certify",
       "Certify that a game has no F-equilibrium",
       Concat({{"game", FlagType::kString, true, "game JSON"},
               {"eps", FlagType::kDouble, false, "pruning slack"},
               {"max-depth", FlagType::kInt, false, "box split limit"}},
              ValuationFlags(true))},
      {"theorem",
       "Decide dm-unique or cm-nonexist for a family size",
       Concat({{"m", FlagType::kInt, true, "family size"}},
              ValuationFlags(true))},
      {"synthesize",
       "Build a normal game without F-equilibrium",
       Concat({{"o", FlagType::kString, false, "output path for the game"}},
              ValuationFlags(true))},
      {"winpair",
       "Find a winning pair in a normal game",
       {{"condensed", FlagType::kString, false, "condensed game JSON"},
        {"game", FlagType::kString, false, "normal game in the cell format"},
        {"emit-profile", FlagType::kSwitch, false,
         "include the half-half profile"}}},
      {"winpair-bench",
       "Time the winning pair search on random normal games (CSV)",
       {{"nmin", FlagType::kInt, false, "smallest n (default 16384)"},
        {"nmax", FlagType::kInt, false, "largest n (default 1048576)"},
        {"seeds", FlagType::kInt, false, "seeds per size (default 5)"},
        {"o", FlagType::kString, false, "CSV path (default stdout)"}}},
      {"atlas",
       "Solve every 3x3 two-values game",
       Concat({{"o", FlagType::kString, false, "CSV path for per-game rows"}},
              ValuationFlags(true))},
      {"scan",
       "Classify a valuation and synthesize a counterexample if one exists",
       Concat({{"o", FlagType::kString, false, "output path for the game"}},
              ValuationFlags(true))},
  };
  return verbs;
}

std::string Dashed(const std::string& name) {
  return (name == "o" ? "-" : "--") + name;
}

int64_t ParseInt(const std::string& flag, const std::string& text) {
  int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(Dashed(flag) + ": expected an integer, got '" + text +
                     "'");
  }
  return value;
}

double ParseDouble(const std::string& flag, const std::string& text) {
  size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || !std::isfinite(value)) {
    throw UsageError(Dashed(flag) + ": expected a number, got '" + text + "'");
  }
  return value;
}

void CheckValue(const FlagSpec& spec, const std::string& text) {
  switch (spec.type) {
    case FlagType::kInt:
      ParseInt(spec.name, text);
      break;
    case FlagType::kDouble:
      ParseDouble(spec.name, text);
      break;
    case FlagType::kRational:
      try {
        ParseRational(text);
      } catch (const InputError& e) {
        throw UsageError(Dashed(spec.name) + ": " + e.what());
      }
      break;
    default:
      break;
  }
}

void Require(const Command& cmd, const std::string& flag,
             const std::string& because) {
  if (!cmd.has(flag)) {
    throw UsageError(Dashed(flag) + " is required " + because);
  }
}

// Requirements that depend on the values of other flags.
void ValidateVerb(const Command& cmd) {
  if (cmd.has("valuation")) {
    const std::string& kind = cmd.options.at("valuation");
    if (kind == "evar" || kind == "esd") {
      Require(cmd, "gamma", "for --valuation " + kind);
    } else if (kind == "cvar") {
      Require(cmd, "alpha", "for --valuation cvar");
    } else if (kind != "expectation") {
      throw UsageError("--valuation: unknown kind '" + kind + "'");
    }
  }
  if (cmd.verb == "gen") {
    const std::string& family = cmd.options.at("family");
    if (family == "D" || family == "C") {
      Require(cmd, "m", "for --family " + family);
    } else if (family == "nis4") {
      Require(cmd, "id", "for --family nis4");
    } else if (family == "random") {
      Require(cmd, "n", "for --family random");
    } else if (family != "crawford") {
      throw UsageError("--family: unknown family '" + family + "'");
    }
    if (cmd.has("regime") != cmd.has("profile-out")) {
      throw UsageError("--regime and --profile-out go together");
    }
    if (cmd.has("regime") && family != "D" && family != "C") {
      throw UsageError("--regime needs --family D or C");
    }
  } else if (cmd.verb == "theorem") {
    if (cmd.subject != "dm-unique" && cmd.subject != "cm-nonexist") {
      throw UsageError("theorem: expected dm-unique or cm-nonexist, got '" +
                       cmd.subject + "'");
    }
  } else if (cmd.verb == "winpair") {
    if (cmd.has("condensed") == cmd.has("game")) {
      throw UsageError("winpair needs exactly one of --condensed and --game");
    }
  }
}

// ---------------------------------------------------------------------------
// Execution helpers.

Rational RationalFlag(const Command& cmd, const std::string& flag,
                      const Rational& fallback) {
  return cmd.has(flag) ? ParseRational(cmd.options.at(flag)) : fallback;
}

int64_t IntFlag(const Command& cmd, const std::string& flag,
                int64_t fallback) {
  return cmd.has(flag) ? ParseInt(flag, cmd.options.at(flag)) : fallback;
}

double DoubleFlag(const Command& cmd, const std::string& flag,
                  double fallback) {
  return cmd.has(flag) ? ParseDouble(flag, cmd.options.at(flag)) : fallback;
}

// Costs default to the game's when a game is involved, else to 0 and 1.
Valuation ValuationFromFlags(const Command& cmd, const Rational& default_a,
                             const Rational& default_b) {
  const Rational a = RationalFlag(cmd, "a", default_a);
  const Rational b = RationalFlag(cmd, "b", default_b);
  const std::string& kind = cmd.options.at("valuation");
  if (kind == "evar") {
    return Valuation::EVar(a, b, RationalFlag(cmd, "gamma", 0));
  }
  if (kind == "esd") return Valuation::ESD(a, b, RationalFlag(cmd, "gamma", 0));
  if (kind == "cvar") {
    return Valuation::CVaR(a, b, RationalFlag(cmd, "alpha", 0));
  }
  return Valuation::Expectation(a, b);
}

Valuation RequireUnimodal(Valuation v) {
  if (!IsUnimodal(v)) {
    throw InputError("valuation " + v.name() + " is not unimodal");
  }
  return v;
}

TwoValuesGame LoadTwoValuesGame(const std::string& path) {
  GameDocument doc = GameFromJson(ReadJsonFile(path));
  if (!doc.two_values) {
    throw InputError(path + ": the game does not take exactly two values");
  }
  return *doc.two_values;
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << content) || !file.flush()) {
    throw InputError("cannot write " + path);
  }
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

// Writes to -o when given, to `out` otherwise.
void Output(const Command& cmd, std::ostream& out, const std::string& text) {
  if (cmd.has("o")) {
    WriteFile(cmd.options.at("o"), text);
  } else {
    out << text;
  }
}

std::string FormatDouble(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string FormatCost(const Cost& c) {
  return c.exact ? ToString(*c.exact) : FormatDouble(c.value);
}

std::string FormatStrategy(const MixedStrategy& s) {
  std::string text = "(";
  for (int i = 0; i < s.size(); ++i) {
    if (i > 0) text += ", ";
    text += ToString(s[i]);
  }
  return text + ")";
}

std::string FormatProfile(const Profile& p) {
  return "p1 = " + FormatStrategy(p.p1) + "\np2 = " + FormatStrategy(p.p2) +
         "\n";
}

// ---------------------------------------------------------------------------
// Verbs.

int RunGen(const Command& cmd, std::ostream& out) {
  const std::string& family = cmd.options.at("family");
  const Rational a = RationalFlag(cmd, "a", 0), b = RationalFlag(cmd, "b", 1);
  Json game;
  if (family == "D" || family == "C") {
    const int m = static_cast<int>(IntFlag(cmd, "m", 0));
    game = ToJson(family == "D" ? GenD(m, a, b) : GenC(m, a, b));
    if (cmd.has("regime")) {
      const std::string& name = cmd.options.at("regime");
      std::optional<Regime> regime;
      for (int r = 0; r <= static_cast<int>(Regime::kCOddGeq); ++r) {
        if (RegimeName(static_cast<Regime>(r)) == name) {
          regime = static_cast<Regime>(r);
        }
      }
      if (!regime) throw InputError("unknown regime '" + name + "'");
      const Profile prof = KnownEquilibrium(
          family == "D" ? Family::kD : Family::kC, m, *regime);
      WriteFile(cmd.options.at("profile-out"), Dump(ToJson(prof)));
    }
  } else if (family == "nis4") {
    const std::string& id = cmd.options.at("id");
    for (const Nis4Fixture& f : Nis4Fixtures(a, b)) {
      if (f.id == id) game = ToJson(f.game);
    }
    if (game.is_null()) throw InputError("unknown nis4 fixture '" + id + "'");
  } else if (family == "crawford") {
    game = ToJson(Crawford());
  } else {
    const CondensedNormalGame c = RandomNormal(
        static_cast<int>(IntFlag(cmd, "n", 0)),
        static_cast<uint64_t>(IntFlag(cmd, "seed", 1)), a, b);
    game = cmd.has("expand") ? ToJson(FromCondensed(c)) : ToJson(c);
  }
  Output(cmd, out, Dump(game));
  return kExitOk;
}

int RunCheck(const Command& cmd, std::ostream& out) {
  const TwoValuesGame g = LoadTwoValuesGame(cmd.options.at("game"));
  const Profile prof = ProfileFromJson(ReadJsonFile(cmd.options.at("profile")));
  const Valuation v = ValuationFromFlags(cmd, g.a(), g.b());
  const EquilibriumReport report =
      VerifyFEquilibrium(g, v, prof, DoubleFlag(cmd, "tol", kDefaultTol));
  if (cmd.json) {
    out << Dump(ToJson(report));
  } else if (report.is_equilibrium()) {
    out << "Equilibrium\n";
  } else {
    const Deviation& d = *report.witness;
    out << "NotEquilibrium: player " << static_cast<int>(d.player)
        << " deviates to strategy " << d.strategy << ", cost "
        << FormatCost(d.current) << " -> " << FormatCost(d.deviation) << "\n";
  }
  return report.is_equilibrium() ? kExitOk : kExitVerdictFalse;
}

int RunSolve(const Command& cmd, std::ostream& out) {
  const TwoValuesGame g = LoadTwoValuesGame(cmd.options.at("game"));
  const Valuation v = ValuationFromFlags(cmd, g.a(), g.b());
  FinderOptions options;
  options.rel_tol = DoubleFlag(cmd, "tol", kDefaultTol);
  options.max_support_enumeration = static_cast<int>(
      IntFlag(cmd, "max-support", options.max_support_enumeration));
  const std::optional<FoundEquilibrium> found = FindFEquilibrium(g, v, options);
  if (found && cmd.has("o")) {
    WriteFile(cmd.options.at("o"), Dump(ToJson(found->profile)));
  }
  if (cmd.json) {
    Json j;
    j["found"] = found.has_value();
    if (found) {
      j["method"] = found->method;
      j["profile"] = ToJson(found->profile);
    }
    out << Dump(j);
  } else if (found) {
    out << "found (" << found->method << ")\n" << FormatProfile(found->profile);
  } else {
    out << "no F-equilibrium among the candidates\n";
  }
  return found ? kExitOk : kExitVerdictFalse;
}

int RunCertify(const Command& cmd, std::ostream& out) {
  const TwoValuesGame g = LoadTwoValuesGame(cmd.options.at("game"));
  const Valuation v = RequireUnimodal(ValuationFromFlags(cmd, g.a(), g.b()));
  const NonExistenceCertificate cert = CertifyNoFEquilibrium(
      g, v, DoubleFlag(cmd, "eps", kDefaultEps),
      static_cast<int>(IntFlag(cmd, "max-depth", kDefaultMaxDepth)));
  if (cmd.json) {
    out << Dump(ToJson(cert));
  } else {
    out << (cert.verdict == CertificateVerdict::kCertified ? "Certified"
                                                           : "Undecided")
        << ": " << cert.explored_boxes << " boxes, depth "
        << cert.max_depth_reached << "\n";
  }
  return cert.verdict == CertificateVerdict::kCertified ? kExitOk
                                                        : kExitVerdictFalse;
}

int RunTheorem(const Command& cmd, std::ostream& out) {
  const Valuation v = RequireUnimodal(ValuationFromFlags(cmd, 0, 1));
  const int m = static_cast<int>(IntFlag(cmd, "m", 0));
  const TheoremVerdict verdict =
      cmd.subject == "dm-unique" ? DmUniqueness(m, v) : CmNonexistence(m, v);
  if (cmd.json) {
    out << Dump(ToJson(verdict));
  } else {
    out << cmd.subject << " m=" << m << ": "
        << (verdict.holds ? "holds" : "fails")
        << (verdict.undecided_at_tolerance ? " (settled by tolerance)" : "")
        << "\n";
    for (const Clause& c : verdict.conditions) {
      out << "  " << c.name << ": " << (c.value ? "true" : "false") << "\n";
    }
    if (verdict.witness) {
      out << "witness (" << RegimeName(*verdict.witness_regime) << ", "
          << (verdict.witness_verified ? "verified" : "not verified")
          << "):\n"
          << FormatProfile(*verdict.witness);
    }
  }
  return verdict.holds ? kExitOk : kExitVerdictFalse;
}

Json CounterexampleJson(const Counterexample& cex) {
  Json j;
  j["m"] = cex.m;
  j["game"] = ToJson(cex.game);
  j["verdict"] = ToJson(cex.verdict);
  return j;
}

int RunSynthesize(const Command& cmd, std::ostream& out) {
  const Valuation v = RequireUnimodal(ValuationFromFlags(cmd, 0, 1));
  const SynthesisResult result = SynthesizeCounterexample(v);
  if (result.counterexample && cmd.has("o")) {
    WriteFile(cmd.options.at("o"), Dump(ToJson(result.counterexample->game)));
  }
  if (cmd.json) {
    Json j;
    j["found"] = result.counterexample.has_value();
    if (result.counterexample) {
      j["counterexample"] = CounterexampleJson(*result.counterexample);
    } else {
      j["reason"] = result.reason;
    }
    out << Dump(j);
  } else if (result.counterexample) {
    out << "C_" << result.counterexample->m << " has no F-equilibrium\n";
  } else {
    out << "no counterexample: " << result.reason << "\n";
  }
  return result.counterexample ? kExitOk : kExitVerdictFalse;
}

int RunWinpair(const Command& cmd, std::ostream& out) {
  std::optional<CondensedNormalGame> c;
  if (cmd.has("condensed")) {
    c = CondensedFromJson(ReadJsonFile(cmd.options.at("condensed")));
  } else {
    const TwoValuesGame g = LoadTwoValuesGame(cmd.options.at("game"));
    if (!IsNormal(g)) throw InputError("the game is not normal");
    c = ToCondensed(g);
  }
  const WinPairResult result = FindWinningPair(*c);
  std::optional<Profile> prof;
  if (cmd.has("emit-profile")) {
    if (result.pair) {
      prof = PairToProfile(*result.pair, c->n());
    } else if (result.outcome == WinPairOutcome::kFullyMixedUniform) {
      prof = Profile{MixedStrategy::Uniform(c->n()),
                     MixedStrategy::Uniform(c->n())};
    }
  }
  if (cmd.json) {
    Json j = ToJson(result);
    if (prof) j["profile"] = ToJson(*prof);
    out << Dump(j);
  } else {
    out << OutcomeName(result.outcome) << " via " << result.route << ", "
        << result.scans << " scans\n";
    if (result.pair) {
      out << "rows {" << result.pair->rows[0] << ", " << result.pair->rows[1]
          << "} x cols {" << result.pair->cols[0] << ", "
          << result.pair->cols[1] << "}\n";
    }
    if (prof) out << FormatProfile(*prof);
  }
  return kExitOk;
}

int RunWinpairBench(const Command& cmd, std::ostream& out) {
  const int64_t nmin = IntFlag(cmd, "nmin", 16384);
  const int64_t nmax = IntFlag(cmd, "nmax", 1048576);
  const int64_t seeds = IntFlag(cmd, "seeds", 5);
  if (nmin < 2 || nmax < nmin || seeds < 1) {
    throw InputError("winpair-bench needs 2 <= nmin <= nmax and seeds >= 1");
  }
  std::ostringstream csv;
  csv << "n,seed,nanos,scans\n";
  for (int64_t n = nmin; n <= nmax; n *= 2) {
    for (int64_t seed = 1; seed <= seeds; ++seed) {
      const CondensedNormalGame c =
          RandomNormal(static_cast<int>(n), static_cast<uint64_t>(seed));
      const auto start = std::chrono::steady_clock::now();
      const WinPairResult result = FindWinningPair(c);
      const auto nanos = std::chrono::duration_cast<std::chrono::nanoseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
      csv << n << ',' << seed << ',' << nanos << ',' << result.scans << '\n';
    }
  }
  Output(cmd, out, csv.str());
  return kExitOk;
}

int RunAtlas(const Command& cmd, std::ostream& out) {
  const Valuation v = ValuationFromFlags(cmd, 0, 1);
  const AtlasSummary summary = Atlas3x3(v, cmd.has("o"));
  if (cmd.has("o")) {
    std::ostringstream csv;
    csv << "game_id,solved,support_sizes,method\n";
    for (const AtlasRow& row : summary.rows) {
      csv << row.game_id << ',' << (row.solved ? 1 : 0) << ',' << row.support1
          << 'x' << row.support2 << ',' << row.method << '\n';
    }
    WriteFile(cmd.options.at("o"), csv.str());
  }
  if (cmd.json) {
    Json j;
    j["games"] = summary.games;
    j["solved"] = summary.solved;
    j["construction_failures"] = summary.construction_failures;
    j["failures"] = summary.failures;
    out << Dump(j);
  } else {
    out << summary.games << " games, " << summary.solved << " solved, "
        << summary.failures.size() << " failures\n";
  }
  return summary.failures.empty() ? kExitOk : kExitVerdictFalse;
}

int RunScan(const Command& cmd, std::ostream& out) {
  const Valuation v = RequireUnimodal(ValuationFromFlags(cmd, 0, 1));
  const ValuationAnalysis analysis = Analyze(v);
  const std::optional<Rational> x1_exact = X1Exact(v);
  const std::string x1_text =
      x1_exact ? ToString(*x1_exact)
               : (analysis.x1 ? FormatDouble(*analysis.x1) : "none");
  std::string regime;
  std::string line;
  std::optional<SynthesisResult> synthesis;
  if (analysis.x0 == 0) {
    regime = "x0-zero";
    line = "x0=0; existence for all games; computation PPAD-hard (not "
           "implemented)";
  } else if (analysis.half_class == Comparison::kEqual) {
    regime = "half-equals-b";
    line = "x0=" + FormatDouble(analysis.x0) + "; x1=" + x1_text +
           "; F(1/2)=b; every normal game has an F-equilibrium, found in "
           "linear time from a winning pair";
  } else {
    regime = "counterexample";
    synthesis = SynthesizeCounterexample(v);
    line = "x0=" + FormatDouble(analysis.x0) + "; x1=" + x1_text + "; F(1/2) " +
           (analysis.half_class == Comparison::kGreater ? ">" : "<") + " b; ";
    line += synthesis->counterexample
                ? "C_" + std::to_string(synthesis->counterexample->m) +
                      " has no F-equilibrium"
                : "no counterexample: " + synthesis->reason;
  }
  if (synthesis && synthesis->counterexample && cmd.has("o")) {
    WriteFile(cmd.options.at("o"),
              Dump(ToJson(synthesis->counterexample->game)));
  }
  if (cmd.json) {
    Json j;
    j["valuation"] = ToJson(v);
    j["analysis"] = ToJson(analysis);
    j["regime"] = regime;
    if (synthesis && synthesis->counterexample) {
      j["counterexample"] = CounterexampleJson(*synthesis->counterexample);
    }
    out << Dump(j);
  } else {
    out << line << "\n";
  }
  return kExitOk;
}

}  // namespace

Command ParseArgs(const std::vector<std::string>& args) {
  const std::vector<VerbSpec>& verbs = Verbs();
  if (!args.empty() && args[0].rfind("-", 0) != 0 &&
      std::none_of(verbs.begin(), verbs.end(),
                   [&](const VerbSpec& v) { return v.name == args[0]; })) {
    throw UsageError("unknown verb '" + args[0] + "'");
  }

  CLI::App app{"Equilibria of two-player two-values games", "eqforge"};
  app.require_subcommand(1);
  std::map<std::string, std::string> values;
  std::map<std::string, bool> switches;
  std::string subject;
  bool json = false;
  app.add_flag("--json", json, "machine-readable JSON on stdout");
  std::map<std::string, CLI::App*> subcommands;
  for (const VerbSpec& verb : verbs) {
    CLI::App* sub = app.add_subcommand(verb.name, verb.help);
    sub->add_flag("--json", json, "machine-readable JSON on stdout");
    if (verb.name == "theorem") {
      sub->add_option("name", subject, "dm-unique | cm-nonexist")->required();
    }
    for (const FlagSpec& flag : verb.flags) {
      if (flag.type == FlagType::kSwitch) {
        sub->add_flag(Dashed(flag.name), switches[flag.name], flag.help);
        continue;
      }
      CLI::Option* opt =
          sub->add_option(Dashed(flag.name), values[flag.name], flag.help);
      if (flag.required) opt->required();
    }
    subcommands[verb.name] = sub;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream text;
    app.exit(e, text, text);
    return Command{"help", {}, text.str(), false};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Command cmd;
  cmd.json = json;
  cmd.subject = subject;
  for (const VerbSpec& verb : verbs) {
    CLI::App* sub = subcommands.at(verb.name);
    if (!sub->parsed()) continue;
    cmd.verb = verb.name;
    for (const FlagSpec& flag : verb.flags) {
      if (sub->count(Dashed(flag.name)) == 0) continue;
      if (flag.type == FlagType::kSwitch) {
        cmd.options[flag.name] = "true";
        continue;
      }
      CheckValue(flag, values[flag.name]);
      cmd.options[flag.name] = values[flag.name];
    }
  }
  ValidateVerb(cmd);
  return cmd;
}

int Run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    if (cmd.verb == "help") {
      out << cmd.subject;
      return kExitOk;
    }
    if (cmd.verb == "gen") return RunGen(cmd, out);
    if (cmd.verb == "check") return RunCheck(cmd, out);
    if (cmd.verb == "solve") return RunSolve(cmd, out);
    if (cmd.verb == "certify") return RunCertify(cmd, out);
    if (cmd.verb == "theorem") return RunTheorem(cmd, out);
    if (cmd.verb == "synthesize") return RunSynthesize(cmd, out);
    if (cmd.verb == "winpair") return RunWinpair(cmd, out);
    if (cmd.verb == "winpair-bench") return RunWinpairBench(cmd, out);
    if (cmd.verb == "atlas") return RunAtlas(cmd, out);
    if (cmd.verb == "scan") return RunScan(cmd, out);
    err << "error: unknown verb '" << cmd.verb << "'\n";
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
  }
  return kExitInputError;
}

int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err) {
  Command cmd;
  try {
    cmd = ParseArgs(args);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitInputError;
  }
  return Run(cmd, out, err);
}

}  // namespace eqforge::cli
