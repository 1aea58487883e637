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

#ifndef MZI_STATES_H_
#define MZI_STATES_H_

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "mzi/fock.h"

namespace mzi {

// Probe families, all evaluated inside the interferometer (after the first
// beam splitter). B below is the first beam splitter exp(-i pi/2 Jx) and
// S(xi) = exp(i xi (c^dag^2 + c^2) / 2) the single-mode squeezer.
enum class Family {
  kTwinSqueezedVacuum,    // S_a(xi) S_b(xi) |0,0>
  kTwinFock,              // B |n,n>
  kEntangledCoherent,     // (|alpha,0> + |0,alpha>) / norm
  kNoon,                  // (|n,0> + |0,n>) / sqrt(2)
  kAmplifiedBell,         // S_a(xi) S_b(xi) B |1,0>
  kFraternalTwinFock,     // B |n+1,n>
  kCoherent,              // |alpha/sqrt(2), i alpha/sqrt(2)>
  kTwoModeSqueezedVacuum, // exp(chi (a^dag b^dag - a b)) |0,0>
  kSeparableCoherentProbe,// B |n,0>
  kFockPair,              // |n,n>
};

inline constexpr Family kAllFamilies[] = {
    Family::kTwinSqueezedVacuum, Family::kTwinFock,
    Family::kEntangledCoherent,  Family::kNoon,
    Family::kAmplifiedBell,      Family::kFraternalTwinFock,
    Family::kCoherent,           Family::kTwoModeSqueezedVacuum,
    Family::kSeparableCoherentProbe, Family::kFockPair,
};

std::string_view family_name(Family family);
// Accepts the canonical names plus the short aliases "tmsv", "twin-squeezed",
// "ecs", "bell", "fraternal", "bs-fock", "fock".
std::optional<Family> parse_family(std::string_view name);

// True for families with a definite total photon number.
bool is_fixed_number(Family family);
// True for families parameterized by an integer photon count n.
bool is_integer_family(Family family);

struct ProbeParams {
  double xi = 0.0;
  double chi = 0.0;
  Complex alpha{0.0, 0.0};
  int n = 0;
};

struct CutoffPolicy {
  // Unset selects the smallest adequate cutoff automatically.
  std::optional<int> explicit_cutoff;
  // Upper bound for automatic selection; see cutoff_ceiling_from_env().
  int ceiling = 256;
  double loss_ceiling = kDefaultLossCeiling;
};

struct ProbeSpec {
  Family family = Family::kCoherent;
  ProbeParams params;
  CutoffPolicy cutoff;
};

// 256, or MZI_QFI_CUTOFF_CEILING when set to a positive integer.
int cutoff_ceiling_from_env();

// Builds the normalized probe. Automatic cutoffs are the smallest N for which
// both the discarded norm-squared and the discarded (1 + j + k)^2-weighted
// norm-squared fall below loss_ceiling; fixed-number families use N = total
// photon number. Throws kInvalidArgument for out-of-range parameters and
// kTruncationLoss when no cutoff up to the ceiling suffices.
FockState build(const ProbeSpec& spec);

struct NbarSolution {
  ProbeParams params;
  double target_nbar = 0.0;
  double realized_nbar = 0.0;
  // Set when an integer family could not hit the target exactly.
  bool adjusted = false;
  std::string note;
};

// Finds parameters whose built state has the requested mean photon number.
// Continuous families are root-found on the numerically computed n-bar
// (tolerance 1e-8); integer families round to the nearest attainable value.
// Throws kUnattainable for targets outside the family's range.
NbarSolution solve_param_for_nbar(Family family, double nbar,
                                  const CutoffPolicy& cutoff = {});

// Mean photon number of the built state, computed from its amplitudes.
double mean_photon_number(const FockState& state);

// Closed-form single-mode amplitudes for k = 0..max_n, normalized in the
// untruncated space.
std::vector<Complex> squeezed_vacuum_amplitudes(double xi, int max_n);
std::vector<Complex> squeezed_one_photon_amplitudes(double xi, int max_n);
std::vector<Complex> coherent_amplitudes(Complex alpha, int max_n);

// S(xi) restricted to |0..keep-1>, obtained by exponentiating the squeezing
// generator on a truncated space of dimension work_dim > keep. Used to
// cross-check the closed forms above.
Eigen::MatrixXcd squeezer_by_exponentiation(double xi, int keep, int work_dim);

}  // namespace mzi

#endif  // MZI_STATES_H_
