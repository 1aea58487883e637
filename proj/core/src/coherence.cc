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

#include "mzi/coherence.h"

#include <cmath>

#include "mzi/error.h"

namespace mzi {

CoherenceReport analyze(const FockState& state, double symmetry_tolerance) {
  if (!(symmetry_tolerance > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "symmetry tolerance must be positive");
  }
  CoherenceReport r;
  r.symmetry_tolerance = symmetry_tolerance;

  r.nbar_a = moment(state, {1, 1, 0, 0}).real();
  r.nbar_b = moment(state, {0, 0, 1, 1}).real();
  r.nbar = r.nbar_a + r.nbar_b;

  const double aa = moment(state, {2, 2, 0, 0}).real();
  const double bb = moment(state, {0, 0, 2, 2}).real();
  const double ab = moment(state, {1, 1, 1, 1}).real();

  // Variances and covariance come straight from the photon-number
  // distribution, independently of the factorial moments used for g2.
  double sa = 0.0, sb = 0.0, saa = 0.0, sbb = 0.0, sab = 0.0;
  const int n = state.cutoff();
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; k <= n; ++k) {
      const double p = std::norm(state.vector()(j, k));
      sa += j * p;
      sb += k * p;
      saa += double(j) * j * p;
      sbb += double(k) * k * p;
      sab += double(j) * k * p;
    }
  }
  r.var_na = saa - sa * sa;
  r.var_nb = sbb - sb * sb;
  r.cov_nab = sab - sa * sb;

  const bool dark_a = r.nbar_a < kDarkModeThreshold;
  const bool dark_b = r.nbar_b < kDarkModeThreshold;
  r.g2_a = dark_a ? MaybeReal::undefined("mode a is dark")
                  : MaybeReal(aa / (r.nbar_a * r.nbar_a));
  r.g2_b = dark_b ? MaybeReal::undefined("mode b is dark")
                  : MaybeReal(bb / (r.nbar_b * r.nbar_b));
  if (dark_a || dark_b) {
    r.g2_ab = MaybeReal::undefined(dark_a ? "mode a is dark" : "mode b is dark");
  } else {
    r.g2_ab = ab / (r.nbar_a * r.nbar_b);
  }

  bool g2_match = false;
  if (r.g2_a.defined() && r.g2_b.defined()) {
    g2_match = std::abs(*r.g2_a - *r.g2_b) < symmetry_tolerance;
  } else {
    g2_match = !r.g2_a.defined() && !r.g2_b.defined();
  }
  r.path_symmetric = std::abs(r.nbar_a - r.nbar_b) < symmetry_tolerance && g2_match;
  return r;
}

}  // namespace mzi
