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

#include "mzi/qfi.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "mzi/error.h"
#include "mzi/schwinger.h"

namespace mzi {

double qfi_variance(const FockState& state) {
  const double mean = j_moment(state, Generator::kJz, 1);
  const double second = j_moment(state, Generator::kJz, 2);
  return 4.0 * (second - mean * mean);
}

MaybeReal qfi_mode(const CoherenceReport& r) {
  for (const MaybeReal* g : {&r.g2_a, &r.g2_b, &r.g2_ab}) {
    if (!g->defined()) return MaybeReal::undefined("g2 undefined: " + g->reason());
  }
  return r.nbar + r.nbar_a * r.nbar_a * (*r.g2_a - 1.0) +
         r.nbar_b * r.nbar_b * (*r.g2_b - 1.0) -
         2.0 * r.nbar_a * r.nbar_b * (*r.g2_ab - 1.0);
}

MaybeReal qfi_path_symmetric(const CoherenceReport& r) {
  if (!r.path_symmetric) return MaybeReal::undefined("state is not path-symmetric");
  if (!r.g2_a.defined() || !r.g2_ab.defined()) {
    return MaybeReal::undefined("g2 undefined: " +
                                (r.g2_a.defined() ? r.g2_ab.reason() : r.g2_a.reason()));
  }
  return r.nbar + 0.5 * r.nbar * r.nbar * (*r.g2_a - *r.g2_ab);
}

namespace {

FockVector central_difference(const FockState& state, double origin, double h) {
  FockVector d = phase_shift(state, origin + h).vector();
  d -= phase_shift(state, origin - h).vector();
  d *= 1.0 / (2.0 * h);
  return d;
}

}  // namespace

double qfi_fidelity(const FockState& state, const FidelityOptions& options) {
  const double h = options.step;
  if (!(h >= 1e-5 && h <= 1e-2)) {
    throw Error(ErrorCode::kInvalidArgument,
                "fidelity step must lie in [1e-5, 1e-2], got " + std::to_string(h));
  }
  FockVector d = central_difference(state, options.origin, h);
  if (options.richardson) {
    // (4 D(h/2) - D(h)) / 3 cancels the h^2 error term.
    FockVector fine = central_difference(state, options.origin, 0.5 * h);
    fine *= 4.0;
    fine -= d;
    fine *= 1.0 / 3.0;
    d = std::move(fine);
  }
  const FockVector psi = phase_shift(state, options.origin).vector();
  const double dd = inner(d, d).real();
  const double overlap = std::norm(inner(d, psi));
  return 4.0 * (dd - overlap);
}

ScalingClass classify_scaling(double f, double nbar) {
  if (!(nbar > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "scaling needs a positive mean photon number");
  }
  ScalingClass c;
  c.sub_shot_noise = f > nbar + 1e-9;
  c.f_over_nbar = f / nbar;
  c.f_over_nbar_sq = f / (nbar * nbar);
  return c;
}

QfiReport evaluate_qfi(const FockState& state, const CoherenceReport& coherence,
                       const MaybeReal& f_particle, const FidelityOptions& fidelity) {
  QfiReport r;
  r.f_variance = qfi_variance(state);
  r.f_mode = qfi_mode(coherence);
  r.f_path_symmetric = qfi_path_symmetric(coherence);
  r.f_fidelity = qfi_fidelity(state, fidelity);
  r.f_particle = f_particle;
  r.crb = r.f_variance > 1e-12 ? MaybeReal(1.0 / std::sqrt(r.f_variance))
                               : MaybeReal::undefined("zero quantum Fisher information");
  if (coherence.nbar > 0.0) r.scaling = classify_scaling(r.f_variance, coherence.nbar);

  std::vector<double> values{r.f_variance, r.f_fidelity};
  for (const MaybeReal* m : {&r.f_mode, &r.f_path_symmetric, &r.f_particle}) {
    if (m->defined()) values.push_back(m->value());
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  r.route_agreement = *hi - *lo;
  return r;
}

bool routes_agree(const QfiReport& r, const RouteTolerances& tol) {
  const double f = r.f_variance;
  const double algebraic = tol.absolute + tol.relative * std::abs(f);
  for (const MaybeReal* m : {&r.f_mode, &r.f_path_symmetric, &r.f_particle}) {
    if (m->defined() && std::abs(m->value() - f) > algebraic) return false;
  }
  return std::abs(r.f_fidelity - f) <= tol.fidelity_relative * std::abs(f) + tol.fidelity_floor;
}

}  // namespace mzi
