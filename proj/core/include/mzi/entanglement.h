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

#ifndef MZI_ENTANGLEMENT_H_
#define MZI_ENTANGLEMENT_H_

#include <vector>

#include "mzi/fock.h"

namespace mzi {

inline constexpr double kDefaultSeparabilityTolerance = 1e-9;

struct ModeEntanglementReport {
  // Descending, exact zeros dropped; squares sum to 1.
  std::vector<double> schmidt_values;
  double entropy = 0.0;       // nats
  double entropy_bits = 0.0;
  bool separable = false;     // largest Schmidt value > 1 - tolerance
  double separability_tolerance = kDefaultSeparabilityTolerance;
};

// Schmidt decomposition across the arm-a | arm-b split: singular values of the
// amplitude grid read as a matrix (row j = mode a, column k = mode b).
ModeEntanglementReport schmidt(const FockState& state,
                               double separability_tolerance = kDefaultSeparabilityTolerance);

}  // namespace mzi

#endif  // MZI_ENTANGLEMENT_H_
