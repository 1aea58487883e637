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

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "cli/commands.h"
#include "cli/table1.h"

namespace {

using mzi::cli::RunConfig;

void add_probe_flags(CLI::App* app, RunConfig& c) {
  app->add_option("--family", c.family,
                  "Probe family: twin-squeezed-vacuum, twin-fock, entangled-coherent, noon, "
                  "amplified-bell, fraternal-twin-fock, coherent, two-mode-squeezed-vacuum (tmsv), "
                  "separable-coherent-probe, fock-pair");
  app->add_option("--n", c.n, "Photon-number parameter of fixed-number families")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--xi", c.xi, "Single-mode squeezing (real)");
  app->add_option("--chi", c.chi, "Two-mode squeezing (real)");
  app->add_option("--alpha", c.alpha, "Coherent amplitude, real part");
  app->add_option("--alpha-im", c.alpha_im, "Coherent amplitude, imaginary part");
  app->add_option("--nbar", c.nbar, "Target mean photon number; solves for the family parameter")
      ->check(CLI::NonNegativeNumber);
}

void add_common_flags(CLI::App* app, RunConfig& c, bool probe) {
  if (probe) add_probe_flags(app, c);
  app->add_option("--cutoff", c.cutoff, "Per-mode Fock cutoff (default: automatic)")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--output", c.output, "Write to this file instead of standard output");
}

void add_analysis_flags(CLI::App* app, RunConfig& c) {
  app->add_option("--sym-tol", c.symmetry_tolerance, "Path-symmetry tolerance")
      ->check(CLI::PositiveNumber);
  app->add_option("--sep-tol", c.separability_tolerance, "Separability tolerance")
      ->check(CLI::PositiveNumber);
  app->add_option_function<double>(
         "--route-tol",
         [&c](double t) {
           c.routes.absolute = t;
           c.routes.relative = t;
         },
         "Agreement tolerance between algebraic QFI routes (absolute and relative)")
      ->check(CLI::PositiveNumber);
  app->add_option("--fidelity-tol", c.routes.fidelity_relative,
                  "Relative tolerance for the finite-difference QFI route")
      ->check(CLI::PositiveNumber);
  app->add_option("--step", c.fidelity.step, "Finite-difference phase step, in [1e-5, 1e-2]");
  app->add_flag_function(
      "--raw-difference", [&c](std::int64_t) { c.fidelity.richardson = false; },
      "Plain central difference, no Richardson extrapolation");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mzi-qfi: quantum Fisher information, coherence and entanglement of "
               "two-mode interferometer probes"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format;

  auto* analyze = app.add_subcommand(
      "analyze",
      "Coherence, QFI, entanglement and sector report for one probe.\n"
      "CSV columns: " + std::string(mzi::cli::kAnalyzeCsvColumns));
  add_common_flags(analyze, config, true);
  add_analysis_flags(analyze, config);
  analyze->add_option("--state-file", config.state_file, "Read amplitudes from a JSON state file");
  analyze->add_option("--format", format, "json (default) or csv");

  auto* table1 = app.add_subcommand(
      "table1",
      "Compare every probe family against its reference closed forms.\n"
      "Exit 2 on QFI route disagreement, 3 on any MISMATCH cell.\n"
      "CSV columns: " + std::string(mzi::cli::kTable1CsvColumns));
  add_common_flags(table1, config, false);
  add_analysis_flags(table1, config);
  table1->add_option("--nbar", config.nbar, "Mean photon number for every row (default 4)")
      ->check(CLI::PositiveNumber);
  table1->add_option("--atol", config.atol, "Absolute cell tolerance")->check(CLI::PositiveNumber);
  table1->add_option("--rtol", config.rtol, "Relative cell tolerance")->check(CLI::PositiveNumber);
  table1->add_option("--format", format, "table (default), json or csv");

  auto* sweep = app.add_subcommand(
      "sweep",
      "One row per grid point. Undefined values are empty cells.\n"
      "CSV columns: " + std::string(mzi::cli::kSweepCsvColumns));
  add_common_flags(sweep, config, false);
  add_analysis_flags(sweep, config);
  sweep->add_option("--family", config.family, "Probe family")->required();
  sweep->add_option("--nbar-grid", config.nbar_grid, "Comma-separated mean photon numbers")
      ->delimiter(',');
  sweep->add_option("--n-grid", config.n_grid, "Comma-separated photon numbers")->delimiter(',');
  sweep->add_option("--format", format, "csv (default) or json");

  auto* state = app.add_subcommand("state", "Write a probe state in the JSON state-file format");
  add_common_flags(state, config, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help exits 0; every other parse failure is a usage error.
    return app.exit(e) == 0 ? 0 : 1;
  }

  config.command = app.get_subcommands().front()->get_name();
  if (!format.empty()) {
    config.format = mzi::cli::parse_format(format);
    if (!config.format) {
      std::fprintf(stderr, "error[invalid_argument]: unknown format '%s'\n", format.c_str());
      return 1;
    }
  }
  return mzi::cli::run(config, stdout, stderr);
}
