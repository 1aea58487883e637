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

#ifndef MZI_COHERENCE_H_
#define MZI_COHERENCE_H_

#include "mzi/fock.h"
#include "mzi/maybe_real.h"

namespace mzi {

inline constexpr double kDefaultSymmetryTolerance = 1e-8;

// Intensities below this make the matching g2 denominators degenerate.
inline constexpr double kDarkModeThreshold = 1e-9;

struct CoherenceReport {
  double nbar_a = 0.0;
  double nbar_b = 0.0;
  double nbar = 0.0;  // nbar_a + nbar_b

  // Equal-time second-order coherences:
  //   g2_a  = <a^dag^2 a^2> / nbar_a^2
  //   g2_b  = <b^dag^2 b^2> / nbar_b^2
  //   g2_ab = <a^dag b^dag a b> / (nbar_a nbar_b)
  MaybeReal g2_a;
  MaybeReal g2_b;
  MaybeReal g2_ab;

  double var_na = 0.0;
  double var_nb = 0.0;
  double cov_nab = 0.0;

  bool path_symmetric = false;
  double symmetry_tolerance = kDefaultSymmetryTolerance;
};

// Fills every field from normal-ordered moments. The state is treated as the
// probe inside the interferometer.
CoherenceReport analyze(const FockState& state, double symmetry_tolerance = kDefaultSymmetryTolerance);

}  // namespace mzi

#endif  // MZI_COHERENCE_H_
