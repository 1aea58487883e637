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

#ifndef MZI_QFI_H_
#define MZI_QFI_H_

#include <optional>

#include "mzi/coherence.h"
#include "mzi/fock.h"
#include "mzi/maybe_real.h"

namespace mzi {

// The QFI of the phase shift exp(-i phi Jz), computed by independent routes.
// The variance route is normative; the others validate it.

// 4 Var[Jz].
double qfi_variance(const FockState& state);

// nbar + nbar_a^2 (g2_a - 1) + nbar_b^2 (g2_b - 1) - 2 nbar_a nbar_b (g2_ab - 1).
// UNDEFINED whenever any g2 is.
MaybeReal qfi_mode(const CoherenceReport& report);

// nbar + (nbar^2 / 2)(g2 - g2_ab), for path-symmetric reports only.
MaybeReal qfi_path_symmetric(const CoherenceReport& report);

struct FidelityOptions {
  double step = 1e-3;        // must lie in [1e-5, 1e-2]
  bool richardson = true;    // combine steps h and h/2
  double origin = 0.0;       // phase about which to differentiate
};

// 4(<d|d> - |<d|psi>|^2) with |d> the central-difference derivative of
// exp(-i phi Jz)|psi> at phi = origin. Throws kInvalidArgument on a step
// outside range.
double qfi_fidelity(const FockState& state, const FidelityOptions& options = {});

struct ScalingClass {
  bool sub_shot_noise = false;  // f > nbar + 1e-9
  double f_over_nbar = 0.0;
  double f_over_nbar_sq = 0.0;
};

// Throws kInvalidArgument when nbar <= 0.
ScalingClass classify_scaling(double f, double nbar);

struct QfiReport {
  double f_variance = 0.0;
  MaybeReal f_mode;
  MaybeReal f_path_symmetric;
  double f_fidelity = 0.0;
  MaybeReal f_particle;
  MaybeReal crb;                       // 1/sqrt(f_variance)
  std::optional<ScalingClass> scaling; // absent for the vacuum
  double route_agreement = 0.0;        // max pairwise |difference|
};

struct RouteTolerances {
  // Algebraic routes: |diff| <= absolute + relative * |f_variance|.
  double absolute = 1e-9;
  double relative = 1e-9;
  // Finite-difference route: |diff| <= fidelity_relative * |f_variance| + fidelity_floor.
  double fidelity_relative = 1e-6;
  double fidelity_floor = 1e-8;
};

// Runs every route. `f_particle` comes from the particle-picture module.
QfiReport evaluate_qfi(const FockState& state, const CoherenceReport& coherence,
                       const MaybeReal& f_particle, const FidelityOptions& fidelity = {});

// True when every defined route agrees with f_variance.
bool routes_agree(const QfiReport& report, const RouteTolerances& tol = {});

}  // namespace mzi

#endif  // MZI_QFI_H_
