// Copyright 2026 The SAT Authors
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

#ifndef SAT_CLI_COMMANDS_HPP
#define SAT_CLI_COMMANDS_HPP

// Entry point of the `sat` command line, kept in a library so tests can
// drive it without spawning processes.
//
//   sat <spin-recover|spin-optimize|jcm-sweep|jcm-recover|roundtrip>
//       [--config PATH] [--seed N] [--shots N | --exact]
//       [--out PATH] [--format csv|json]

#include <iosfwd>
#include <string>
#include <vector>

namespace sat::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kSingularScheme = 2,
};

/// args excludes the program name. Results go to --out when given,
/// otherwise to out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sat::cli

#endif  // SAT_CLI_COMMANDS_HPP
