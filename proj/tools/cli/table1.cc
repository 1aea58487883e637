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

#include "cli/table1.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cli/catalog.h"
#include "mzi/coherence.h"
#include "mzi/error.h"
#include "mzi/particle.h"

namespace mzi::cli {

namespace {

Table1Cell make_cell(const MaybeReal& numeric, std::string_view formula, double (*closed)(double),
                     double nbar, const Table1Options& opt) {
  Table1Cell cell;
  cell.numeric = numeric;
  cell.formula = std::string(formula);
  cell.predicted = closed(nbar);
  cell.status = classify_cell(numeric, cell.predicted, opt.atol, opt.rtol);
  if (cell.status == CellStatus::kNotApplicable) {
    cell.delta = MaybeReal::undefined(numeric.defined() ? "prediction undefined" : numeric.reason());
    return cell;
  }
  cell.delta = std::abs(*numeric - cell.predicted);
  if (cell.status == CellStatus::kMismatch) {
    const double alt = closed(nbar / 2.0);
    cell.alt_predicted = alt;
    cell.alt_status = classify_cell(numeric, alt, opt.atol, opt.rtol);
    if (std::isfinite(alt)) cell.alt_delta = std::abs(*numeric - alt);
  }
  return cell;
}

Table1Cell unavailable_cell(std::string_view formula, const std::string& reason) {
  Table1Cell cell;
  cell.numeric = MaybeReal::undefined(reason);
  cell.formula = std::string(formula);
  cell.predicted = std::nan("");
  cell.delta = MaybeReal::undefined(reason);
  return cell;
}

Json cell_json(const Table1Cell& c) {
  Json j = Json::object();
  put(j, "numeric", c.numeric);
  j["formula"] = c.formula;
  j["predicted"] = c.predicted;
  put(j, "delta", c.delta);
  j["status"] = cell_status_name(c.status);
  if (c.alt_predicted) {
    Json alt = Json::object();
    alt["convention"] = "per-mode nbar (nbar/2)";
    alt["predicted"] = *c.alt_predicted;
    if (c.alt_delta) {
      alt["delta"] = *c.alt_delta;
    } else {
      alt["delta"] = nullptr;
    }
    alt["status"] = cell_status_name(*c.alt_status);
    j["alternative"] = std::move(alt);
  }
  return j;
}

std::string optional_cell(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

}  // namespace

std::string_view cell_status_name(CellStatus status) {
  switch (status) {
    case CellStatus::kMatch:
      return "MATCH";
    case CellStatus::kMismatch:
      return "MISMATCH";
    case CellStatus::kNotApplicable:
      return "NOT-APPLICABLE";
  }
  return "NOT-APPLICABLE";
}

CellStatus classify_cell(const MaybeReal& numeric, double predicted, double atol, double rtol) {
  if (!numeric.defined() || !std::isfinite(predicted)) return CellStatus::kNotApplicable;
  const double delta = std::abs(*numeric - predicted);
  return delta <= atol + rtol * std::abs(predicted) ? CellStatus::kMatch : CellStatus::kMismatch;
}

Table1Row compute_table1_row(Family family, const Table1Options& opt) {
  const ClosedForm& form = closed_form(family);
  Table1Row row;
  row.family = family;
  row.target_nbar = opt.nbar;
  try {
    const NbarSolution sol = solve_param_for_nbar(family, opt.nbar, opt.cutoff);
    row.params = sol.params;
    row.adjusted = sol.adjusted;
    row.note = sol.note;

    const FockState state = build(ProbeSpec{family, sol.params, opt.cutoff});
    const CoherenceReport coherence = analyze(state, opt.symmetry_tolerance);
    const SectorDecomposition sectors = decompose_sectors(state);
    const QfiReport qfi = evaluate_qfi(state, coherence, qfi_particle(sectors), opt.fidelity);

    row.cutoff = state.cutoff();
    row.nbar = coherence.nbar;
    row.g2 = make_cell(coherence.g2_a, form.g2_text, form.g2, row.nbar, opt);
    row.g2_ab = make_cell(coherence.g2_ab, form.g2_ab_text, form.g2_ab, row.nbar, opt);
    row.qfi = make_cell(qfi.f_variance, form.qfi_text, form.qfi, row.nbar, opt);
    row.route_agreement = qfi.route_agreement;
    row.routes_agree = routes_agree(qfi, opt.routes);
  } catch (const Error& e) {
    const std::string reason = std::string(error_code_name(e.code())) + ": " + e.what();
    row.note = row.note.empty() ? reason : row.note + "; " + reason;
    row.nbar = std::nan("");
    row.g2 = unavailable_cell(form.g2_text, reason);
    row.g2_ab = unavailable_cell(form.g2_ab_text, reason);
    row.qfi = unavailable_cell(form.qfi_text, reason);
  }
  return row;
}

std::vector<Table1Row> compute_table1(const Table1Options& options) {
  std::vector<Table1Row> rows;
  for (Family f : kAllFamilies) rows.push_back(compute_table1_row(f, options));
  return rows;
}

int table1_exit_code(const std::vector<Table1Row>& rows) {
  bool mismatch = false;
  for (const Table1Row& r : rows) {
    if (!r.routes_agree) return 2;
    for (const Table1Cell* c : {&r.g2, &r.g2_ab, &r.qfi}) {
      mismatch |= c->status == CellStatus::kMismatch;
    }
  }
  return mismatch ? 3 : 0;
}

Json table1_json(const std::vector<Table1Row>& rows, const Table1Options& opt) {
  Json out = Json::object();
  out["schema"] = kReportSchema;
  out["command"] = "table1";
  out["target_nbar"] = opt.nbar;
  out["tolerance"] = Json{{"atol", opt.atol}, {"rtol", opt.rtol}};
  Json list = Json::array();
  for (const Table1Row& r : rows) {
    Json j = Json::object();
    j["family"] = family_name(r.family);
    j["probe"] = closed_form(r.family).probe;
    j["params"] = to_json(r.params, r.family);
    j["target_nbar"] = r.target_nbar;
    j["nbar"] = r.nbar;
    j["adjusted"] = r.adjusted;
    j["note"] = r.note;
    j["cutoff"] = r.cutoff;
    j["g2"] = cell_json(r.g2);
    j["g2_ab"] = cell_json(r.g2_ab);
    j["qfi"] = cell_json(r.qfi);
    j["route_agreement"] = r.route_agreement;
    j["routes_agree"] = r.routes_agree;
    list.push_back(std::move(j));
  }
  out["rows"] = std::move(list);
  out["exit_code"] = table1_exit_code(rows);
  return out;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  out << kTable1CsvColumns << '\n';
  for (const Table1Row& r : rows) {
    out << family_name(r.family) << ',' << format_number(r.target_nbar) << ','
        << (std::isfinite(r.nbar) ? format_number(r.nbar) : std::string()) << ',' << csv_escape(params_text(r.params, r.family));
    for (const Table1Cell* c : {&r.g2, &r.g2_ab, &r.qfi}) {
      out << ',' << format_cell(c->numeric) << ','
          << (std::isfinite(c->predicted) ? format_number(c->predicted) : std::string()) << ','
          << format_cell(c->delta) << ',' << cell_status_name(c->status) << ','
          << optional_cell(c->alt_predicted) << ','
          << (c->alt_status ? cell_status_name(*c->alt_status) : std::string_view());
    }
    out << ',' << (r.routes_agree ? "true" : "false") << ',' << csv_escape(r.note) << '\n';
  }
  return out.str();
}

std::string table1_text(const std::vector<Table1Row>& rows) {
  std::vector<std::vector<std::string>> grid;
  grid.push_back({"family", "nbar", "g2", "g2 pred", "", "g2_ab", "g2_ab pred", "", "F", "F pred",
                  "", "routes"});
  auto short_num = [](const MaybeReal& v) {
    if (!v.defined()) return std::string("-");
    std::ostringstream s;
    s.precision(8);
    s << *v;
    return s.str();
  };
  for (const Table1Row& r : rows) {
    std::vector<std::string> line{std::string(family_name(r.family)), short_num(r.nbar)};
    for (const Table1Cell* c : {&r.g2, &r.g2_ab, &r.qfi}) {
      line.push_back(short_num(c->numeric));
      line.push_back(c->formula);
      std::string status(cell_status_name(c->status));
      if (c->alt_status) status += " (per-mode: " + std::string(cell_status_name(*c->alt_status)) + ")";
      line.push_back(status);
    }
    line.push_back(r.routes_agree ? "agree" : "DISAGREE");
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width(grid.front().size(), 0);
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  std::ostringstream out;
  for (const auto& line : grid) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      text += line[i];
      if (i + 1 < line.size()) text.append(width[i] - line[i].size() + 2, ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  }
  for (const Table1Row& r : rows) {
    if (!r.note.empty()) out << family_name(r.family) << ": " << r.note << '\n';
  }
  return out.str();
}

}  // namespace mzi::cli
