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

#include "mzi/fock.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "mzi/error.h"

namespace mzi {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCutoffExceeded:
      return "cutoff_exceeded";
    case ErrorCode::kTruncationOverflow:
      return "truncation_overflow";
    case ErrorCode::kTruncationLoss:
      return "truncation_loss";
    case ErrorCode::kInvalidArgument:
      return "invalid_argument";
    case ErrorCode::kUnattainable:
      return "unattainable";
    case ErrorCode::kNotSingleSector:
      return "not_single_sector";
    case ErrorCode::kMalformedInput:
      return "malformed_input";
    case ErrorCode::kIo:
      return "io";
  }
  return "unknown";
}

FockVector::FockVector(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 0) {
    throw Error(ErrorCode::kInvalidArgument, "cutoff must be non-negative");
  }
  amps_.assign(static_cast<std::size_t>(cutoff + 1) * (cutoff + 1), Complex{});
}

Complex FockVector::at(int j, int k) const {
  if (j < 0 || k < 0 || j > cutoff_ || k > cutoff_) return {};
  return (*this)(j, k);
}

double FockVector::norm_squared() const {
  double sum = 0.0;
  for (const Complex& c : amps_) sum += std::norm(c);
  return sum;
}

FockVector FockVector::resized(int new_cutoff) const {
  FockVector out(new_cutoff);
  const int m = std::min(cutoff_, new_cutoff);
  for (int j = 0; j <= m; ++j) {
    for (int k = 0; k <= m; ++k) out(j, k) = (*this)(j, k);
  }
  return out;
}

FockVector& FockVector::operator+=(const FockVector& other) {
  if (other.cutoff_ > cutoff_) *this = resized(other.cutoff_);
  for (int j = 0; j <= other.cutoff_; ++j) {
    for (int k = 0; k <= other.cutoff_; ++k) (*this)(j, k) += other(j, k);
  }
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  if (other.cutoff_ > cutoff_) *this = resized(other.cutoff_);
  for (int j = 0; j <= other.cutoff_; ++j) {
    for (int k = 0; k <= other.cutoff_; ++k) (*this)(j, k) -= other(j, k);
  }
  return *this;
}

FockVector& FockVector::operator*=(Complex factor) {
  for (Complex& c : amps_) c *= factor;
  return *this;
}

FockState FockState::from_truncated(FockVector raw, double loss_ceiling) {
  const double kept = raw.norm_squared();
  if (!(kept > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "state has zero norm");
  }
  const double loss = std::max(0.0, 1.0 - kept);
  if (loss > loss_ceiling) {
    throw Error(ErrorCode::kTruncationLoss,
                "truncation loss " + std::to_string(loss) + " at cutoff " +
                    std::to_string(raw.cutoff()) + " exceeds ceiling " +
                    std::to_string(loss_ceiling));
  }
  raw *= 1.0 / std::sqrt(kept);
  return FockState(std::move(raw), loss);
}

FockState FockState::normalized(FockVector raw, double inherited_loss) {
  const double n2 = raw.norm_squared();
  if (!(n2 > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "state has zero norm");
  }
  raw *= 1.0 / std::sqrt(n2);
  return FockState(std::move(raw), inherited_loss);
}

FockState FockState::adopt(FockVector raw, double tolerance) {
  const double norm = std::sqrt(raw.norm_squared());
  if (!(std::abs(norm - 1.0) <= tolerance)) {
    throw Error(ErrorCode::kInvalidArgument,
                "state norm " + std::to_string(norm) + " is not 1 within tolerance");
  }
  return FockState(std::move(raw), 0.0);
}

FockState FockState::with_cutoff(int new_cutoff) const {
  if (new_cutoff < cutoff()) {
    double dropped = 0.0;
    for (int j = 0; j <= cutoff(); ++j) {
      for (int k = 0; k <= cutoff(); ++k) {
        if (j > new_cutoff || k > new_cutoff) dropped += std::norm(vec_(j, k));
      }
    }
    if (dropped > kOverflowTolerance) {
      throw Error(ErrorCode::kCutoffExceeded,
                  "cropping to cutoff " + std::to_string(new_cutoff) +
                      " would discard weight " + std::to_string(dropped));
    }
  }
  return FockState(vec_.resized(new_cutoff), truncation_loss_);
}

FockState make_fock(int j, int k, int cutoff) {
  if (j < 0 || k < 0) {
    throw Error(ErrorCode::kInvalidArgument, "photon numbers must be non-negative");
  }
  if (j > cutoff || k > cutoff) {
    throw Error(ErrorCode::kCutoffExceeded,
                "|" + std::to_string(j) + "," + std::to_string(k) +
                    "> exceeds cutoff " + std::to_string(cutoff));
  }
  FockVector v(cutoff);
  v(j, k) = 1.0;
  return FockState::normalized(std::move(v));
}

FockVector apply_ladder(const FockVector& state, Mode mode, Ladder kind) {
  const int n = state.cutoff();
  FockVector out(n);
  if (kind == Ladder::kLower) {
    for (int j = 0; j <= n; ++j) {
      for (int k = 0; k <= n; ++k) {
        if (mode == Mode::kA && j > 0) {
          out(j - 1, k) = std::sqrt(static_cast<double>(j)) * state(j, k);
        } else if (mode == Mode::kB && k > 0) {
          out(j, k - 1) = std::sqrt(static_cast<double>(k)) * state(j, k);
        }
      }
    }
    return out;
  }

  // Raising: the edge row/column would land outside the grid.
  double overflow = 0.0;
  for (int i = 0; i <= n; ++i) {
    const Complex edge = mode == Mode::kA ? state(n, i) : state(i, n);
    overflow += (n + 1) * std::norm(edge);
  }
  const double total = state.norm_squared();
  if (overflow > kOverflowTolerance * total) {
    throw Error(ErrorCode::kTruncationOverflow,
                "raising operator would push weight " + std::to_string(overflow) +
                    " past cutoff " + std::to_string(n));
  }
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; k <= n; ++k) {
      if (mode == Mode::kA && j < n) {
        out(j + 1, k) = std::sqrt(static_cast<double>(j + 1)) * state(j, k);
      } else if (mode == Mode::kB && k < n) {
        out(j, k + 1) = std::sqrt(static_cast<double>(k + 1)) * state(j, k);
      }
    }
  }
  return out;
}

FockVector apply_ladder(const FockState& state, Mode mode, Ladder kind) {
  return apply_ladder(state.vector(), mode, kind);
}

Complex inner(const FockVector& x, const FockVector& y) {
  const int m = std::min(x.cutoff(), y.cutoff());
  // Entries beyond the smaller grid meet zeros after padding.
  Complex sum{};
  for (int j = 0; j <= m; ++j) {
    for (int k = 0; k <= m; ++k) sum += std::conj(x(j, k)) * y(j, k);
  }
  return sum;
}

Complex inner(const FockState& x, const FockState& y) {
  return inner(x.vector(), y.vector());
}

namespace {

FockVector lower_power(FockVector v, Mode mode, int power) {
  for (int i = 0; i < power; ++i) v = apply_ladder(v, mode, Ladder::kLower);
  return v;
}

void check_order(int e) {
  if (e < 0 || e > kMaxMomentOrder) {
    throw Error(ErrorCode::kInvalidArgument,
                "moment exponents must lie in [0, " +
                    std::to_string(kMaxMomentOrder) + "]");
  }
}

}  // namespace

Complex moment(const FockState& state, const MomentSpec& spec) {
  check_order(spec.p);
  check_order(spec.q);
  check_order(spec.r);
  check_order(spec.s);
  const FockVector bra = lower_power(lower_power(state.vector(), Mode::kA, spec.p),
                                     Mode::kB, spec.r);
  const FockVector ket = lower_power(lower_power(state.vector(), Mode::kA, spec.q),
                                     Mode::kB, spec.s);
  return inner(bra, ket);
}

double phase_insensitive_distance(const FockState& x, const FockState& y) {
  const Complex overlap = inner(y, x);
  const Complex phase =
      std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
  const int n = std::max(x.cutoff(), y.cutoff());
  double sum = 0.0;
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; k <= n; ++k) sum += std::norm(x.amplitude(j, k) - phase * y.amplitude(j, k));
  }
  return std::sqrt(sum);
}

}  // namespace mzi
