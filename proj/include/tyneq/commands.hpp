// Copyright 2026 The tyneq authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tyneq/problem.hpp"

namespace tyneq {

// Exit codes: 0 positive verdict, 1 negative verdict, 2 input or
// configuration error, 3 solver/oracle disagreement under --oracle.

struct CliOptions {
  bool trace = false;   // frontier size per generation on the error stream
  bool oracle = false;  // cross-check the verdict against the oracle
  bool json = false;    // machine-readable output on the output stream
  bool serial = false;  // serial expansion kernel instead of the parallel one
};

int cmd_validate(const Problem& problem, const CliOptions& options,
                 std::ostream& out);
int cmd_subtype(const Problem& problem, const CliOptions& options,
                std::ostream& out);
int cmd_gen(const Problem& problem, const CliOptions& options,
            std::ostream& out);
int cmd_solve(const Problem& problem, const CliOptions& options,
              std::ostream& out, std::ostream& err);
int cmd_check(const Problem& problem, const CliOptions& options,
              std::ostream& out, std::ostream& err);

/// Full command-line entry point: args are argv[1..]. Reads the problem
/// file, dispatches, renders errors (as JSON under --json), and returns
/// the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tyneq
