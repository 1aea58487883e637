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

#include "mzi/entanglement.h"

#include <cmath>
#include <numbers>

#include <Eigen/SVD>

#include "mzi/error.h"

namespace mzi {

ModeEntanglementReport schmidt(const FockState& state, double separability_tolerance) {
  if (!(separability_tolerance > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "separability tolerance must be positive");
  }
  const int d = state.dim();
  Eigen::MatrixXcd grid(d, d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) grid(j, k) = state.vector()(j, k);
  }
  const Eigen::BDCSVD<Eigen::MatrixXcd> svd(grid);
  const Eigen::VectorXd& sv = svd.singularValues();

  ModeEntanglementReport r;
  r.separability_tolerance = separability_tolerance;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    const double lambda = sv(i);
    if (lambda <= 0.0) continue;
    r.schmidt_values.push_back(lambda);
    const double p = lambda * lambda;
    r.entropy -= p * std::log(p);
  }
  // Rounding can leave a -0 or a few ulps below zero for product states.
  if (r.entropy < 0.0) r.entropy = 0.0;
  r.entropy_bits = r.entropy / std::numbers::ln2;
  r.separable = !r.schmidt_values.empty() &&
                r.schmidt_values.front() > 1.0 - separability_tolerance;
  return r;
}

}  // namespace mzi
