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

#include "cli/serialize.h"

#include <cmath>
#include <cstdio>

namespace mzi::cli {

void put(Json& object, const std::string& key, const MaybeReal& value) {
  if (value.defined()) {
    object[key] = value.value();
  } else {
    object[key] = nullptr;
    object[key + "_reason"] = value.reason();
  }
}

Json to_json(const ProbeParams& p, Family family) {
  Json j = Json::object();
  switch (family) {
    case Family::kTwinSqueezedVacuum:
    case Family::kAmplifiedBell:
      j["xi"] = p.xi;
      break;
    case Family::kTwoModeSqueezedVacuum:
      j["chi"] = p.chi;
      break;
    case Family::kEntangledCoherent:
    case Family::kCoherent:
      j["alpha"] = Json{{"re", p.alpha.real()}, {"im", p.alpha.imag()}};
      break;
    default:
      j["n"] = p.n;
      break;
  }
  return j;
}

Json to_json(const CoherenceReport& r) {
  Json j = Json::object();
  j["nbar_a"] = r.nbar_a;
  j["nbar_b"] = r.nbar_b;
  j["nbar"] = r.nbar;
  put(j, "g2_a", r.g2_a);
  put(j, "g2_b", r.g2_b);
  put(j, "g2_ab", r.g2_ab);
  j["var_na"] = r.var_na;
  j["var_nb"] = r.var_nb;
  j["cov_nab"] = r.cov_nab;
  j["path_symmetric"] = r.path_symmetric;
  j["symmetry_tolerance"] = r.symmetry_tolerance;
  return j;
}

Json to_json(const QfiReport& r, const RouteTolerances& tol) {
  Json j = Json::object();
  j["f_variance"] = r.f_variance;
  put(j, "f_mode", r.f_mode);
  put(j, "f_path_symmetric", r.f_path_symmetric);
  j["f_fidelity"] = r.f_fidelity;
  put(j, "f_particle", r.f_particle);
  put(j, "crb", r.crb);
  if (r.scaling) {
    j["scaling_class"] = Json{{"sub_shot_noise", r.scaling->sub_shot_noise},
                              {"f_over_nbar", r.scaling->f_over_nbar},
                              {"f_over_nbar_sq", r.scaling->f_over_nbar_sq}};
  } else {
    j["scaling_class"] = nullptr;
    j["scaling_class_reason"] = "zero mean photon number";
  }
  j["route_agreement"] = r.route_agreement;
  j["routes_agree"] = routes_agree(r, tol);
  return j;
}

Json to_json(const ModeEntanglementReport& r) {
  Json j = Json::object();
  j["schmidt_values"] = r.schmidt_values;
  j["entropy"] = r.entropy;
  j["entropy_bits"] = r.entropy_bits;
  j["separable"] = r.separable;
  j["separability_tolerance"] = r.separability_tolerance;
  return j;
}

Json to_json(const ParticleReport& r) {
  Json j = Json::object();
  j["n"] = r.n;
  j["mean_sigma_z"] = r.mean_sigma_z;
  j["var_sigma_z"] = r.var_sigma_z;
  j["cov_sigma_z"] = r.cov_sigma_z;
  j["f_particle"] = r.f_particle;
  j["witness_entangled"] = r.witness_entangled;
  return j;
}

Json to_json(const SectorDecomposition& d) {
  Json sectors = Json::array();
  for (const Sector& s : d.sectors) {
    Json entry = Json::object();
    entry["n"] = s.n;
    entry["weight"] = s.weight;
    if (s.n >= 1) {
      entry["particle"] = to_json(particle_moments(s.state, s.n));
    } else {
      entry["particle"] = nullptr;
    }
    sectors.push_back(std::move(entry));
  }
  Json j = Json::object();
  j["weights_sum"] = d.weights_sum;
  j["sectors"] = std::move(sectors);
  return j;
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string format_cell(const MaybeReal& value) {
  return value.defined() ? format_number(value.value()) : std::string();
}

std::string params_text(const ProbeParams& p, Family family) {
  switch (family) {
    case Family::kTwinSqueezedVacuum:
    case Family::kAmplifiedBell:
      return "xi=" + format_number(p.xi);
    case Family::kTwoModeSqueezedVacuum:
      return "chi=" + format_number(p.chi);
    case Family::kEntangledCoherent:
    case Family::kCoherent:
      if (p.alpha.imag() == 0.0) return "alpha=" + format_number(p.alpha.real());
      return "alpha=" + format_number(p.alpha.real()) + (p.alpha.imag() < 0 ? "" : "+") +
             format_number(p.alpha.imag()) + "i";
    default:
      return "n=" + std::to_string(p.n);
  }
}

namespace {

void indent(std::string& out, int depth) { out.append(static_cast<std::size_t>(depth) * 2, ' '); }

void write(const Json& j, std::string& out, int depth) {
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        indent(out, depth + 1);
        out += Json(it.key()).dump();
        out += ": ";
        write(it.value(), out, depth + 1);
      }
      out += "\n";
      indent(out, depth);
      out += "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        indent(out, depth + 1);
        write(j[i], out, depth + 1);
      }
      out += "\n";
      indent(out, depth);
      out += "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_number(v) : "null";
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump(const Json& document) {
  std::string out;
  write(document, out, 0);
  out += "\n";
  return out;
}

}  // namespace mzi::cli
