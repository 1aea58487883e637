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

#ifndef MZI_FOCK_H_
#define MZI_FOCK_H_

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace mzi {

using Complex = std::complex<double>;

enum class Mode { kA, kB };
enum class Ladder { kLower, kRaise };

// Default ceiling on the norm-squared a state may lose when its exact
// amplitudes are cut at the per-mode photon cutoff.
inline constexpr double kDefaultLossCeiling = 1e-10;

// Raising is refused when the population pushed past the cutoff would exceed
// this fraction of the input norm-squared.
inline constexpr double kOverflowTolerance = 1e-12;

// Dense amplitude grid over |j,k>, 0 <= j,k <= cutoff, with no normalization
// guarantee. Ladder operators produce these.
class FockVector {
 public:
  explicit FockVector(int cutoff);

  int cutoff() const { return cutoff_; }
  int dim() const { return cutoff_ + 1; }

  // Unchecked access; callers stay inside the grid.
  Complex& operator()(int j, int k) {
    return amps_[static_cast<std::size_t>(j) * dim() + k];
  }
  Complex operator()(int j, int k) const {
    return amps_[static_cast<std::size_t>(j) * dim() + k];
  }

  // Zero outside the grid.
  Complex at(int j, int k) const;

  std::span<Complex> data() { return amps_; }
  std::span<const Complex> data() const { return amps_; }

  double norm_squared() const;

  // Zero-pads into a larger grid, or crops into a smaller one. Cropping drops
  // whatever lies outside; FockState::with_cutoff is the checked version.
  FockVector resized(int new_cutoff) const;

  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector& operator*=(Complex factor);

 private:
  int cutoff_;
  std::vector<Complex> amps_;
};

// A normalized two-mode pure state on a square per-mode truncation. Immutable
// once built.
class FockState {
 public:
  // Takes amplitudes of a state that is normalized in the untruncated space
  // and already cut at `raw.cutoff()`. The missing norm-squared is recorded as
  // the truncation loss before renormalizing; throws kTruncationLoss when it
  // exceeds `loss_ceiling`.
  static FockState from_truncated(FockVector raw,
                                  double loss_ceiling = kDefaultLossCeiling);

  // Renormalizes an arbitrary nonzero vector. `inherited_loss` lets unitary
  // images keep the truncation loss of their preimage.
  static FockState normalized(FockVector raw, double inherited_loss = 0.0);

  // Stores `raw` unchanged provided |norm - 1| <= tolerance; throws
  // kInvalidArgument otherwise.
  static FockState adopt(FockVector raw, double tolerance);

  int cutoff() const { return vec_.cutoff(); }
  int dim() const { return vec_.dim(); }
  Complex amplitude(int j, int k) const { return vec_.at(j, k); }
  const FockVector& vector() const { return vec_; }
  double truncation_loss() const { return truncation_loss_; }

  // Embeds into a larger cutoff, or crops into a smaller one provided the
  // discarded weight is below kOverflowTolerance.
  FockState with_cutoff(int new_cutoff) const;

 private:
  FockState(FockVector vec, double loss) : vec_(std::move(vec)), truncation_loss_(loss) {}

  FockVector vec_;
  double truncation_loss_ = 0.0;
};

// Normal-ordered monomial a^dag^p a^q b^dag^r b^s.
struct MomentSpec {
  int p = 0;
  int q = 0;
  int r = 0;
  int s = 0;
};

inline constexpr int kMaxMomentOrder = 4;

// |j,k> at the given cutoff. Throws kCutoffExceeded when j or k > cutoff.
FockState make_fock(int j, int k, int cutoff);

// Standard ladder action on one mode. Lowering is exact. Raising throws
// kTruncationOverflow if the weight landing at cutoff + 1 is not negligible,
// and otherwise drops it.
FockVector apply_ladder(const FockVector& state, Mode mode, Ladder kind);
FockVector apply_ladder(const FockState& state, Mode mode, Ladder kind);

// <x|y>, conjugating x. Mismatched cutoffs are zero-padded to the larger.
Complex inner(const FockVector& x, const FockVector& y);
Complex inner(const FockState& x, const FockState& y);

// <psi| a^dag^p a^q b^dag^r b^s |psi>. Evaluated as <a^p b^r psi|a^q b^s psi>
// since the two modes commute, so only lowering operators are applied.
Complex moment(const FockState& state, const MomentSpec& spec);

// min over theta of ||x - e^{i theta} y||, evaluated on the amplitude
// difference so it stays accurate down to rounding level. Zero iff the states
// agree up to a global phase.
double phase_insensitive_distance(const FockState& x, const FockState& y);

}  // namespace mzi

#endif  // MZI_FOCK_H_
