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

#include "cli/commands.h"

#include <cmath>
#include <sstream>
#include <utility>

#include "cli/state_file.h"
#include "cli/table1.h"
#include "mzi/coherence.h"
#include "mzi/entanglement.h"
#include "mzi/error.h"
#include "mzi/particle.h"

namespace mzi::cli {

namespace {

Error usage(std::string message) { return Error(ErrorCode::kInvalidArgument, std::move(message)); }

CutoffPolicy cutoff_policy(const RunConfig& c) {
  CutoffPolicy policy;
  policy.ceiling = cutoff_ceiling_from_env();
  if (c.cutoff) {
    if (*c.cutoff < 0) throw usage("--cutoff must be non-negative");
    policy.explicit_cutoff = *c.cutoff;
  }
  return policy;
}

Family require_family(const RunConfig& c) {
  if (!c.family) throw usage("--family is required");
  const auto family = parse_family(*c.family);
  if (!family) throw usage("unknown family '" + *c.family + "'");
  return *family;
}

enum class Native { kXi, kChi, kAlpha, kN };

Native native_parameter(Family f) {
  switch (f) {
    case Family::kTwinSqueezedVacuum:
    case Family::kAmplifiedBell:
      return Native::kXi;
    case Family::kTwoModeSqueezedVacuum:
      return Native::kChi;
    case Family::kEntangledCoherent:
    case Family::kCoherent:
      return Native::kAlpha;
    default:
      return Native::kN;
  }
}

bool any_native(const RunConfig& c) { return c.xi || c.chi || c.alpha || c.alpha_im || c.n; }

// Rejects parameters that the family does not use, and fills those it does.
ProbeParams native_params(Family family, const RunConfig& c) {
  const std::string name(family_name(family));
  const Native want = native_parameter(family);
  if (c.xi && want != Native::kXi) throw usage("--xi does not apply to family " + name);
  if (c.chi && want != Native::kChi) throw usage("--chi does not apply to family " + name);
  if ((c.alpha || c.alpha_im) && want != Native::kAlpha) {
    throw usage("--alpha does not apply to family " + name);
  }
  if (c.n && want != Native::kN) throw usage("--n does not apply to family " + name);

  ProbeParams p;
  switch (want) {
    case Native::kXi:
      if (!c.xi) throw usage("family " + name + " needs --xi or --nbar");
      p.xi = *c.xi;
      break;
    case Native::kChi:
      if (!c.chi) throw usage("family " + name + " needs --chi or --nbar");
      p.chi = *c.chi;
      break;
    case Native::kAlpha:
      if (!c.alpha && !c.alpha_im) throw usage("family " + name + " needs --alpha or --nbar");
      p.alpha = Complex{c.alpha.value_or(0.0), c.alpha_im.value_or(0.0)};
      break;
    case Native::kN:
      if (!c.n) throw usage("family " + name + " needs --n or --nbar");
      p.n = *c.n;
      break;
  }
  return p;
}

struct Resolved {
  std::optional<Family> family;
  ProbeParams params;
  std::optional<NbarSolution> solution;
  std::optional<FockState> state;
  std::vector<std::string> warnings;
};

Resolved resolve_probe(const RunConfig& c) {
  Resolved r;
  if (c.state_file) {
    if (c.family || any_native(c) || c.nbar) {
      throw usage("--state-file cannot be combined with family parameters");
    }
    FockState s = read_state_file(*c.state_file, &r.warnings);
    if (c.cutoff) s = s.with_cutoff(*c.cutoff);
    r.state = std::move(s);
    return r;
  }
  const Family family = require_family(c);
  const CutoffPolicy policy = cutoff_policy(c);
  r.family = family;
  if (c.nbar) {
    if (any_native(c)) throw usage("--nbar cannot be combined with native parameters");
    r.solution = solve_param_for_nbar(family, *c.nbar, policy);
    r.params = r.solution->params;
    if (r.solution->adjusted) r.warnings.push_back(r.solution->note);
  } else {
    r.params = native_params(family, c);
  }
  r.state = build(ProbeSpec{family, r.params, policy});
  return r;
}

struct Analysis {
  CoherenceReport coherence;
  SectorDecomposition sectors;
  QfiReport qfi;
  bool routes_agree = true;
  ModeEntanglementReport entanglement;
  std::optional<ParticleReport> particle;
  std::string particle_reason;
};

Analysis run_analysis(const FockState& state, const RunConfig& c) {
  Analysis a;
  a.coherence = analyze(state, c.symmetry_tolerance);
  a.sectors = decompose_sectors(state);
  a.qfi = evaluate_qfi(state, a.coherence, qfi_particle(a.sectors), c.fidelity);
  a.routes_agree = routes_agree(a.qfi, c.routes);
  a.entanglement = schmidt(state, c.separability_tolerance);
  if (a.sectors.sectors.size() == 1 && a.sectors.sectors.front().n >= 1) {
    a.particle = particle_moments(state, a.sectors.sectors.front().n);
  } else {
    a.particle_reason =
        a.sectors.sectors.size() > 1 ? "particle fluctuations present" : "no photons";
  }
  return a;
}

Json probe_json(const RunConfig& c, const Resolved& r) {
  Json j = Json::object();
  if (r.family) {
    j["source"] = "family";
    j["family"] = family_name(*r.family);
    j["params"] = to_json(r.params, *r.family);
  } else {
    j["source"] = "state-file";
    j["path"] = *c.state_file;
  }
  if (r.solution) {
    j["target_nbar"] = r.solution->target_nbar;
    j["adjusted"] = r.solution->adjusted;
    j["note"] = r.solution->note;
  }
  j["cutoff"] = r.state->cutoff();
  j["truncation_loss"] = r.state->truncation_loss();
  return j;
}

std::string analyze_csv(const Resolved& r, const Analysis& a) {
  std::ostringstream out;
  out << kAnalyzeCsvColumns << '\n';
  out << (r.family ? family_name(*r.family) : std::string_view("state-file")) << ','
      << (r.family ? csv_escape(params_text(r.params, *r.family)) : std::string()) << ','
      << r.state->cutoff() << ',' << format_number(a.coherence.nbar) << ','
      << format_cell(a.coherence.g2_a) << ',' << format_cell(a.coherence.g2_b) << ','
      << format_cell(a.coherence.g2_ab) << ',' << format_number(a.qfi.f_variance) << ','
      << format_cell(a.qfi.f_mode) << ',' << format_cell(a.qfi.f_path_symmetric) << ','
      << format_number(a.qfi.f_fidelity) << ',' << format_cell(a.qfi.f_particle) << ','
      << format_cell(a.qfi.crb) << ',' << format_number(a.entanglement.entropy) << ','
      << (a.routes_agree ? "true" : "false") << '\n';
  return out.str();
}

void validate(const RunConfig& c) {
  for (double t : {c.symmetry_tolerance, c.separability_tolerance, c.routes.absolute,
                   c.routes.relative, c.routes.fidelity_relative, c.routes.fidelity_floor, c.atol,
                   c.rtol}) {
    if (!(t > 0.0)) throw usage("tolerances must be positive");
  }
}

OutputFormat format_or(const RunConfig& c, OutputFormat fallback,
                       std::initializer_list<OutputFormat> allowed) {
  const OutputFormat f = c.format.value_or(fallback);
  for (OutputFormat a : allowed) {
    if (a == f) return f;
  }
  throw usage("output format not supported by command " + c.command);
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "table") return OutputFormat::kTable;
  return std::nullopt;
}

CommandResult cmd_analyze(const RunConfig& c) {
  validate(c);
  const OutputFormat format =
      format_or(c, OutputFormat::kJson, {OutputFormat::kJson, OutputFormat::kCsv});
  Resolved r = resolve_probe(c);
  const Analysis a = run_analysis(*r.state, c);

  CommandResult result;
  result.warnings = std::move(r.warnings);
  result.exit_code = a.routes_agree ? 0 : 2;
  if (format == OutputFormat::kCsv) {
    result.output = analyze_csv(r, a);
    return result;
  }
  Json doc = Json::object();
  doc["schema"] = kReportSchema;
  doc["command"] = "analyze";
  doc["probe"] = probe_json(c, r);
  doc["coherence"] = to_json(a.coherence);
  doc["qfi"] = to_json(a.qfi, c.routes);
  doc["entanglement"] = to_json(a.entanglement);
  doc["sectors"] = to_json(a.sectors);
  if (a.particle) {
    doc["particle"] = to_json(*a.particle);
  } else {
    doc["particle"] = nullptr;
    doc["particle_reason"] = a.particle_reason;
  }
  doc["exit_code"] = result.exit_code;
  result.output = dump(doc);
  return result;
}

CommandResult cmd_table1(const RunConfig& c) {
  validate(c);
  const OutputFormat format = format_or(c, OutputFormat::kTable,
                                        {OutputFormat::kJson, OutputFormat::kCsv, OutputFormat::kTable});
  if (c.family || any_native(c) || c.state_file) {
    throw usage("table1 takes no probe parameters");
  }
  Table1Options opt;
  opt.nbar = c.nbar.value_or(4.0);
  opt.atol = c.atol;
  opt.rtol = c.rtol;
  opt.cutoff = cutoff_policy(c);
  opt.symmetry_tolerance = c.symmetry_tolerance;
  opt.routes = c.routes;
  opt.fidelity = c.fidelity;
  const std::vector<Table1Row> rows = compute_table1(opt);

  CommandResult result;
  result.exit_code = table1_exit_code(rows);
  for (const Table1Row& r : rows) {
    if (!r.note.empty()) result.warnings.push_back(std::string(family_name(r.family)) + ": " + r.note);
  }
  switch (format) {
    case OutputFormat::kJson:
      result.output = dump(table1_json(rows, opt));
      break;
    case OutputFormat::kCsv:
      result.output = table1_csv(rows);
      break;
    case OutputFormat::kTable:
      result.output = table1_text(rows);
      break;
  }
  return result;
}

CommandResult cmd_sweep(const RunConfig& c) {
  validate(c);
  const OutputFormat format =
      format_or(c, OutputFormat::kCsv, {OutputFormat::kCsv, OutputFormat::kJson});
  const Family family = require_family(c);
  if (any_native(c) || c.nbar || c.state_file) {
    throw usage("sweep takes a grid (--nbar-grid or --n-grid), not single parameters");
  }
  if (c.nbar_grid.empty() == c.n_grid.empty()) {
    throw usage("sweep needs exactly one of --nbar-grid and --n-grid");
  }
  if (!c.n_grid.empty() && !is_integer_family(family)) {
    throw usage("--n-grid applies only to fixed-photon-number families");
  }
  const CutoffPolicy policy = cutoff_policy(c);

  struct Row {
    std::optional<double> target;
    ProbeParams params;
    bool ok = false;
    double nbar = 0.0;
    double qfi = 0.0;
    MaybeReal g2, g2_ab;
    double entropy = 0.0;
    MaybeReal cov;
    bool routes_agree = true;
    std::string note;
  };
  std::vector<Row> rows;
  const std::size_t count = c.n_grid.empty() ? c.nbar_grid.size() : c.n_grid.size();
  for (std::size_t i = 0; i < count; ++i) {
    Row row;
    try {
      if (c.n_grid.empty()) {
        row.target = c.nbar_grid[i];
        const NbarSolution sol = solve_param_for_nbar(family, *row.target, policy);
        row.params = sol.params;
        row.note = sol.note;
      } else {
        row.params.n = c.n_grid[i];
      }
      const FockState state = build(ProbeSpec{family, row.params, policy});
      const Analysis a = run_analysis(state, c);
      row.ok = true;
      row.nbar = a.coherence.nbar;
      row.qfi = a.qfi.f_variance;
      row.g2 = a.coherence.g2_a;
      row.g2_ab = a.coherence.g2_ab;
      row.entropy = a.entanglement.entropy;
      row.cov = a.particle ? MaybeReal(a.particle->cov_sigma_z)
                           : MaybeReal::undefined(a.particle_reason);
      row.routes_agree = a.routes_agree;
    } catch (const Error& e) {
      const std::string reason = std::string(error_code_name(e.code())) + ": " + e.what();
      row.note = row.note.empty() ? reason : row.note + "; " + reason;
    }
    rows.push_back(std::move(row));
  }

  CommandResult result;
  for (const Row& r : rows) {
    if (!r.routes_agree) result.exit_code = 2;
  }
  if (format == OutputFormat::kCsv) {
    std::ostringstream out;
    out << kSweepCsvColumns << '\n';
    for (const Row& r : rows) {
      out << family_name(family) << ',' << (r.target ? format_number(*r.target) : std::string())
          << ',' << (is_integer_family(family) && (r.ok || !c.n_grid.empty()) ? std::to_string(r.params.n) : std::string())
          << ',' << (r.ok ? csv_escape(params_text(r.params, family)) : std::string()) << ',';
      if (r.ok) {
        out << format_number(r.nbar) << ',' << format_number(r.qfi) << ',' << format_cell(r.g2)
            << ',' << format_cell(r.g2_ab) << ',' << format_number(r.entropy) << ','
            << format_cell(r.cov);
      } else {
        out << ",,,,,";
      }
      out << ',' << csv_escape(r.note) << '\n';
    }
    result.output = out.str();
    return result;
  }
  Json list = Json::array();
  for (const Row& r : rows) {
    Json j = Json::object();
    if (r.target) {
      j["target_nbar"] = *r.target;
    } else {
      j["target_nbar"] = nullptr;
    }
    j["params"] = to_json(r.params, family);
    j["ok"] = r.ok;
    if (r.ok) {
      j["nbar"] = r.nbar;
      j["qfi"] = r.qfi;
      put(j, "g2", r.g2);
      put(j, "g2_ab", r.g2_ab);
      j["entropy"] = r.entropy;
      put(j, "cov_sigma_z", r.cov);
      j["routes_agree"] = r.routes_agree;
    }
    j["note"] = r.note;
    list.push_back(std::move(j));
  }
  Json doc = Json::object();
  doc["schema"] = kReportSchema;
  doc["command"] = "sweep";
  doc["family"] = family_name(family);
  doc["rows"] = std::move(list);
  doc["exit_code"] = result.exit_code;
  result.output = dump(doc);
  return result;
}

CommandResult cmd_state(const RunConfig& c) {
  format_or(c, OutputFormat::kJson, {OutputFormat::kJson});
  Resolved r = resolve_probe(c);
  CommandResult result;
  result.warnings = std::move(r.warnings);
  result.output = format_state(*r.state);
  return result;
}

int run(const RunConfig& config, std::FILE* out, std::FILE* err) {
  try {
    CommandResult result;
    if (config.command == "analyze") {
      result = cmd_analyze(config);
    } else if (config.command == "table1") {
      result = cmd_table1(config);
    } else if (config.command == "sweep") {
      result = cmd_sweep(config);
    } else if (config.command == "state") {
      result = cmd_state(config);
    } else {
      throw usage("unknown command '" + config.command + "'");
    }
    for (const std::string& w : result.warnings) std::fprintf(err, "warning: %s\n", w.c_str());
    if (config.output) {
      write_file_atomically(*config.output, result.output);
    } else {
      std::fwrite(result.output.data(), 1, result.output.size(), out);
      std::fflush(out);
    }
    return result.exit_code;
  } catch (const Error& e) {
    std::fprintf(err, "error[%s]: %s\n", std::string(error_code_name(e.code())).c_str(), e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(err, "error[internal]: %s\n", e.what());
    return 1;
  }
}

}  // namespace mzi::cli
