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

#ifndef MZI_CLI_TABLE1_H_
#define MZI_CLI_TABLE1_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cli/serialize.h"
#include "mzi/maybe_real.h"
#include "mzi/qfi.h"
#include "mzi/states.h"

namespace mzi::cli {

enum class CellStatus { kMatch, kMismatch, kNotApplicable };

std::string_view cell_status_name(CellStatus status);

struct Table1Cell {
  MaybeReal numeric;
  std::string formula;
  double predicted = 0.0;
  MaybeReal delta;  // |numeric - predicted|
  CellStatus status = CellStatus::kNotApplicable;
  // Filled for MISMATCH cells: the same formula evaluated at the per-mode
  // mean photon number nbar/2.
  std::optional<double> alt_predicted;
  std::optional<double> alt_delta;
  std::optional<CellStatus> alt_status;
};

struct Table1Row {
  Family family = Family::kCoherent;
  ProbeParams params;
  double target_nbar = 0.0;
  double nbar = 0.0;
  bool adjusted = false;
  std::string note;
  int cutoff = 0;
  Table1Cell g2;
  Table1Cell g2_ab;
  Table1Cell qfi;
  double route_agreement = 0.0;
  bool routes_agree = true;
};

struct Table1Options {
  double nbar = 4.0;
  // MATCH iff |delta| <= atol + rtol * |predicted|.
  double atol = 1e-8;
  double rtol = 1e-6;
  CutoffPolicy cutoff;
  double symmetry_tolerance = kDefaultSymmetryTolerance;
  RouteTolerances routes;
  FidelityOptions fidelity;
};

CellStatus classify_cell(const MaybeReal& numeric, double predicted, double atol, double rtol);

Table1Row compute_table1_row(Family family, const Table1Options& options);
std::vector<Table1Row> compute_table1(const Table1Options& options);

// 2 when any row's QFI routes disagree, otherwise 3 when any cell is a
// MISMATCH, otherwise 0.
int table1_exit_code(const std::vector<Table1Row>& rows);

Json table1_json(const std::vector<Table1Row>& rows, const Table1Options& options);
std::string table1_csv(const std::vector<Table1Row>& rows);
std::string table1_text(const std::vector<Table1Row>& rows);

// Column list shared by table1_csv and the --help text.
inline constexpr std::string_view kTable1CsvColumns =
    "family,target_nbar,nbar,params,g2,g2_pred,g2_delta,g2_status,g2_alt_pred,g2_alt_status,"
    "g2_ab,g2_ab_pred,g2_ab_delta,g2_ab_status,g2_ab_alt_pred,g2_ab_alt_status,"
    "qfi,qfi_pred,qfi_delta,qfi_status,qfi_alt_pred,qfi_alt_status,routes_agree,note";

std::string csv_escape(std::string_view field);

}  // namespace mzi::cli

#endif  // MZI_CLI_TABLE1_H_
