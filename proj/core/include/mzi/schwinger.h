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

#ifndef MZI_SCHWINGER_H_
#define MZI_SCHWINGER_H_

#include <array>

#include <Eigen/Dense>

#include "mzi/fock.h"

namespace mzi {

// Schwinger generators built from the two arm modes:
//   Jx = (a^dag b + b^dag a)/2,  Jy = -i(a^dag b - b^dag a)/2,
//   Jz = (n_a - n_b)/2,          J0 = (n_a + n_b)/2.
enum class Generator { kJx, kJy, kJz, kJ0 };

// Unit vector selecting J_v = v . (Jx, Jy, Jz).
class SpinDirection {
 public:
  // Throws kInvalidArgument unless |v| = 1 within 1e-12.
  SpinDirection(double x, double y, double z);

  // Rescales any nonzero vector to unit length.
  static SpinDirection normalize(double x, double y, double z);

  static SpinDirection x() { return {1.0, 0.0, 0.0}; }
  static SpinDirection y() { return {0.0, 1.0, 0.0}; }
  static SpinDirection z() { return {0.0, 0.0, 1.0}; }

  const std::array<double, 3>& components() const { return v_; }
  double operator[](int i) const { return v_[i]; }

 private:
  std::array<double, 3> v_;
};

enum class BeamSplitterKind { kFirst, kSecond };

// <J> (order 1) or <J^2> (order 2), assembled from normal-ordered moments.
// Throws if the imaginary part exceeds 1e-10.
double j_moment(const FockState& state, Generator tag, int order);

// J|psi> via ladder operators. Jx and Jy conserve total photon number, so this
// never overflows on states supported within the total-number cutoff.
FockVector apply_generator(const FockVector& state, Generator tag);

// Matrix of v.J on the (n+1)-dimensional total-number-n sector, in the basis
// |j, n-j>, j = 0..n.
Eigen::MatrixXcd generator_block(int n, const SpinDirection& v);

// exp(-i angle v.J) on the same sector, via the eigendecomposition of the
// Hermitian generator block.
Eigen::MatrixXcd rotation_block(int n, const SpinDirection& v, double angle);

// exp(-i angle v.J)|psi>, applied sector by sector. Requires the weight in
// sectors with total n > cutoff (which the square grid holds only partially)
// to be below 1e-12; that weight is dropped.
FockState apply_rotation(const FockState& state, const SpinDirection& v, double angle);

// First: exp(-i pi/2 Jx). Second: exp(+i pi/2 Jx).
FockState beam_splitter(const FockState& state, BeamSplitterKind kind);

// exp(-i phi Jz). Diagonal, exact at any cutoff.
FockState phase_shift(const FockState& state, double phi);

// exp(-i phi Jy) = second BS . phase shift . first BS.
FockState mzi_unitary(const FockState& state, double phi);

}  // namespace mzi

#endif  // MZI_SCHWINGER_H_
