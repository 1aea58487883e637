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

#ifndef MZI_PARTICLE_H_
#define MZI_PARTICLE_H_

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "mzi/fock.h"
#include "mzi/maybe_real.h"
#include "mzi/schwinger.h"

namespace mzi {

// Photon i sits in |mu> when it is in arm a and in |nu> when in arm b, so
// that (1/2) sum_i sigma_z^(i) coincides with the mode-picture Jz.

struct Sector {
  int n = 0;          // total photon number
  double weight = 0;  // squared norm of the projection
  FockState state;    // normalized projection, same cutoff as the input
};

struct SectorDecomposition {
  std::vector<Sector> sectors;  // ascending n
  double weights_sum = 0.0;
};

// Sectors lighter than this are left out of a decomposition.
inline constexpr double kSectorWeightFloor = 1e-14;

// A state counts as having a definite photon number when one sector holds
// more than 1 - kFixedNumberTolerance of the weight.
inline constexpr double kFixedNumberTolerance = 1e-9;

inline constexpr double kDefaultWitnessTolerance = 1e-9;

// Largest photon number the explicit multi-qubit construction accepts.
inline constexpr int kOracleMaxPhotons = 10;

struct ParticleReport {
  int n = 0;
  double mean_sigma_z = 0.0;
  double var_sigma_z = 0.0;
  double cov_sigma_z = 0.0;  // between two distinct photons; 0 for n = 1
  double f_particle = 0.0;   // n var + n(n-1) cov
  bool witness_entangled = false;
};

SectorDecomposition decompose_sectors(const FockState& state);

// Pauli statistics of a fixed-n state through the Jordan-Schwinger map:
//   <sigma_z> = 2<Jz>/n,  <sigma_z x sigma_z> = (4<Jz^2> - n)/(n(n-1)).
// Throws kNotSingleSector when more than 1e-12 of the weight lies outside
// total photon number n.
ParticleReport particle_moments(const FockState& sector_state, int n,
                                double witness_tolerance = kDefaultWitnessTolerance);

// Particle-picture QFI of a state with a definite photon number; UNDEFINED
// with reason "particle fluctuations present" otherwise.
MaybeReal qfi_particle(const SectorDecomposition& decomposition);

// Symmetric n-qubit vector of a fixed-n state: the amplitude c_k of |k, n-k>
// is spread as c_k / sqrt(C(n,k)) over every qubit string with k photons in
// |mu>. Qubit i is bit (n-1-i) of the index; bit value 0 is |mu>.
Eigen::VectorXcd symmetric_qubit_vector(const FockState& sector_state, int n);

// Same statistics as particle_moments, but evaluated directly on the 2^n
// qubit vector (photons 1 and 2 for the pair terms). n <= kOracleMaxPhotons.
ParticleReport multiqubit_oracle(const FockState& sector_state, int n,
                                 double witness_tolerance = kDefaultWitnessTolerance);

// One-photon reduced density matrix from the qubit vector (partial trace
// over photons 2..n).
Eigen::Matrix2cd single_particle_state(const FockState& sector_state, int n);

// Eigenvalues (ascending) of the one-photon reduced state, from the
// collective spin: (1 -+ |<sigma>|)/2 with <sigma_k> = 2<J_k>/n.
std::array<double, 2> single_particle_spectrum(const FockState& sector_state, int n);

// exp(-i gamma v.sigma / 2) acting on one photon.
Eigen::Matrix2cd single_qubit_rotation(const SpinDirection& v, double gamma);

// Largest deviation, over the symmetric basis |k, n-k>, between the
// mode-picture rotation exp(-i gamma v.J) mapped into qubit space and the
// n-fold product of single_qubit_rotation. 1 <= n <= kOracleMaxPhotons.
double locality_distance(int n, const SpinDirection& v, double gamma);

// locality_distance(n, v, gamma) < tolerance.
bool locality_check(int n, const SpinDirection& v, double gamma, double tolerance = 1e-10);

}  // namespace mzi

#endif  // MZI_PARTICLE_H_
