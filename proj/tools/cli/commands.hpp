// Copyright 2026 The lopc Authors
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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lopc/simulate.hpp"

namespace lopc::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kInputError = 2,
  kCapExceeded = 3,
  kToleranceFailed = 4,
};

struct CliConfig {
  double tolerance = 1e-9;
  std::uint64_t dim_cap = 20000;
  int photon_cap = 12;
  // Empty means the output stream passed to the command.
  std::string output;
};

// Each command writes its data (JSON) to `out` or config.output and its
// diagnostics to `err`, and returns the exit status. Nothing is written to
// the data sink unless the command succeeds.
int cmd_compile(const CliConfig& config, const std::string& circuit_path,
                std::ostream& out, std::ostream& err);
int cmd_simulate(const CliConfig& config, const std::string& netlist_path,
                 const std::string& input, Direction direction,
                 std::ostream& out, std::ostream& err);
int cmd_lift(const CliConfig& config, const std::string& matrix_path,
             int photons, std::ostream& out, std::ostream& err);
int cmd_verify(const CliConfig& config, const std::string& netlist_path,
               const std::string& matrix_path, std::ostream& out,
               std::ostream& err);
int cmd_basis(const CliConfig& config, int modes, int photons,
              std::ostream& out, std::ostream& err);

// Argument parsing and dispatch; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lopc::cli
