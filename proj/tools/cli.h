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


#ifndef EQFORGE_TOOLS_CLI_H_
#define EQFORGE_TOOLS_CLI_H_

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqforge::cli {

// Bad command line: unknown verb, missing flag or malformed value. The
// message names the offending flag.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFalse = 1;
inline constexpr int kExitInputError = 2;

struct Command {
  // gen, check, solve, certify, theorem, synthesize, winpair, winpair-bench,
  // atlas, scan; "help" when usage text was requested.
  std::string verb;
  // Flags given on the command line, keyed without leading dashes. Input and
  // output paths live here too ("game", "profile", "o", ...).
  std::map<std::string, std::string> options;
  // The theorem name for `theorem`, the usage text for `help`.
  std::string subject;
  bool json = false;

  bool has(const std::string& flag) const { return options.count(flag) > 0; }
};

// Validates every flag the verb needs before returning. Throws UsageError.
Command ParseArgs(const std::vector<std::string>& args);

// Executes a parsed command. Returns kExitOk on success or a true verdict,
// kExitVerdictFalse on a false verdict and kExitInputError on bad input.
int Run(const Command& cmd, std::ostream& out, std::ostream& err);

// ParseArgs and Run with usage errors mapped to kExitInputError.
int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

}  // namespace eqforge::cli

#endif  // EQFORGE_TOOLS_CLI_H_
