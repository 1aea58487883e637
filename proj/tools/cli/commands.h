// Copyright 2026 The mzi-qfi Authors
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

#ifndef MZI_CLI_COMMANDS_H_
#define MZI_CLI_COMMANDS_H_

#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cli/serialize.h"
#include "mzi/qfi.h"
#include "mzi/states.h"

namespace mzi::cli {

enum class OutputFormat { kJson, kCsv, kTable };

std::optional<OutputFormat> parse_format(std::string_view name);

struct RunConfig {
  std::string command;  // analyze | table1 | sweep | state

  std::optional<std::string> family;
  std::optional<int> n;
  std::optional<double> xi;
  std::optional<double> chi;
  std::optional<double> alpha;
  std::optional<double> alpha_im;
  std::optional<double> nbar;
  std::vector<double> nbar_grid;  // sweep
  std::vector<int> n_grid;        // sweep
  std::optional<int> cutoff;
  std::optional<std::string> state_file;

  std::optional<OutputFormat> format;  // command default when unset
  std::optional<std::string> output;   // standard output when unset

  double symmetry_tolerance = kDefaultSymmetryTolerance;
  double separability_tolerance = 1e-9;
  RouteTolerances routes;
  FidelityOptions fidelity;
  double atol = 1e-8;  // table1 cells
  double rtol = 1e-6;
};

struct CommandResult {
  int exit_code = 0;
  std::string output;
  std::vector<std::string> warnings;
};

// Each command returns its document instead of printing it; errors surface as
// mzi::Error.
CommandResult cmd_analyze(const RunConfig& config);
CommandResult cmd_table1(const RunConfig& config);
CommandResult cmd_sweep(const RunConfig& config);
CommandResult cmd_state(const RunConfig& config);

// Dispatches on config.command, writes the document to config.output (via a
// temporary file and rename) or to `out`, warnings to `err`. Errors print
// "error[<code>]: <message>" and yield exit code 1.
int run(const RunConfig& config, std::FILE* out, std::FILE* err);

inline constexpr std::string_view kSweepCsvColumns =
    "family,target_nbar,n,params,nbar,qfi,g2,g2_ab,entropy,cov_sigma_z,note";
inline constexpr std::string_view kAnalyzeCsvColumns =
    "family,params,cutoff,nbar,g2_a,g2_b,g2_ab,f_variance,f_mode,f_path_symmetric,f_fidelity,"
    "f_particle,crb,entropy,routes_agree";

}  // namespace mzi::cli

#endif  // MZI_CLI_COMMANDS_H_
