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

#include "mzi/schwinger.h"

#include <cmath>
#include <numbers>
#include <string>

#include "mzi/error.h"

namespace mzi {

namespace {

constexpr double kImagTolerance = 1e-10;
constexpr double kSectorLeakTolerance = 1e-12;

double checked_real(Complex value, const char* what) {
  if (std::abs(value.imag()) > kImagTolerance) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " has imaginary part " +
                    std::to_string(value.imag()) + "; state is not normalized?");
  }
  return value.real();
}

Complex m(const FockState& s, int p, int q, int r, int t) {
  return moment(s, MomentSpec{p, q, r, t});
}

}  // namespace

SpinDirection::SpinDirection(double x, double y, double z) : v_{x, y, z} {
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidArgument,
                "spin direction must be a unit vector, |v| = " + std::to_string(norm));
  }
}

SpinDirection SpinDirection::normalize(double x, double y, double z) {
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (!(norm > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "spin direction must be nonzero");
  }
  return {x / norm, y / norm, z / norm};
}

double j_moment(const FockState& state, Generator tag, int order) {
  if (order != 1 && order != 2) {
    throw Error(ErrorCode::kInvalidArgument, "j_moment order must be 1 or 2");
  }
  const Complex na = m(state, 1, 1, 0, 0);
  const Complex nb = m(state, 0, 0, 1, 1);
  if (order == 1) {
    switch (tag) {
      case Generator::kJz:
        return checked_real(0.5 * (na - nb), "<Jz>");
      case Generator::kJ0:
        return checked_real(0.5 * (na + nb), "<J0>");
      case Generator::kJx: {
        const Complex ab = m(state, 1, 0, 0, 1);  // <a^dag b>
        const Complex ba = m(state, 0, 1, 1, 0);  // <b^dag a>
        return checked_real(0.5 * (ab + ba), "<Jx>");
      }
      case Generator::kJy: {
        const Complex ab = m(state, 1, 0, 0, 1);
        const Complex ba = m(state, 0, 1, 1, 0);
        return checked_real(Complex{0.0, -0.5} * (ab - ba), "<Jy>");
      }
    }
  }

  // n_a^2 = a^dag^2 a^2 + n_a, and likewise for b.
  const Complex na2 = m(state, 2, 2, 0, 0) + na;
  const Complex nb2 = m(state, 0, 0, 2, 2) + nb;
  const Complex nanb = m(state, 1, 1, 1, 1);
  switch (tag) {
    case Generator::kJz:
      return checked_real(0.25 * (na2 - 2.0 * nanb + nb2), "<Jz^2>");
    case Generator::kJ0:
      return checked_real(0.25 * (na2 + 2.0 * nanb + nb2), "<J0^2>");
    case Generator::kJx:
    case Generator::kJy: {
      // (a^dag b +- b^dag a)^2 = a^dag^2 b^2 + b^dag^2 a^2 +- (n_a(n_b+1) + n_b(n_a+1))
      const Complex pair = m(state, 2, 0, 0, 2) + m(state, 0, 2, 2, 0);
      const Complex cross = 2.0 * nanb + na + nb;
      if (tag == Generator::kJx) return checked_real(0.25 * (pair + cross), "<Jx^2>");
      return checked_real(0.25 * (cross - pair), "<Jy^2>");
    }
  }
  return 0.0;
}

FockVector apply_generator(const FockVector& state, Generator tag) {
  const int n = state.cutoff();
  FockVector out(n);
  switch (tag) {
    case Generator::kJz:
    case Generator::kJ0: {
      const double sign = tag == Generator::kJz ? -1.0 : 1.0;
      for (int j = 0; j <= n; ++j) {
        for (int k = 0; k <= n; ++k) out(j, k) = 0.5 * (j + sign * k) * state(j, k);
      }
      return out;
    }
    case Generator::kJx:
    case Generator::kJy: {
      // Lower first so the raise only refills what was emptied.
      FockVector ab = apply_ladder(apply_ladder(state, Mode::kB, Ladder::kLower),
                                   Mode::kA, Ladder::kRaise);
      FockVector ba = apply_ladder(apply_ladder(state, Mode::kA, Ladder::kLower),
                                   Mode::kB, Ladder::kRaise);
      if (tag == Generator::kJx) {
        ab += ba;
        ab *= 0.5;
      } else {
        ab -= ba;
        ab *= Complex{0.0, -0.5};
      }
      return ab;
    }
  }
  return out;
}

Eigen::MatrixXcd generator_block(int n, const SpinDirection& v) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "sector index must be >= 0");
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) h(j, j) = v[2] * (j - 0.5 * n);
  for (int j = 0; j < n; ++j) {
    // <j+1, n-j-1| a^dag b |j, n-j>
    const double raise = std::sqrt(static_cast<double>((j + 1) * (n - j)));
    const Complex up = 0.5 * raise * Complex{v[0], -v[1]};
    h(j + 1, j) = up;
    h(j, j + 1) = std::conj(up);
  }
  return h;
}

Eigen::MatrixXcd rotation_block(int n, const SpinDirection& v, double angle) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(generator_block(n, v));
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  Eigen::VectorXcd phases(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    phases(i) = std::exp(Complex{0.0, -angle * lambda(i)});
  }
  const Eigen::MatrixXcd& vecs = eig.eigenvectors();
  return vecs * phases.asDiagonal() * vecs.adjoint();
}

FockState apply_rotation(const FockState& state, const SpinDirection& v, double angle) {
  const int cutoff = state.cutoff();
  const FockVector& in = state.vector();

  double leak = 0.0;
  for (int j = 0; j <= cutoff; ++j) {
    for (int k = cutoff - j + 1; k <= cutoff; ++k) leak += std::norm(in(j, k));
  }
  if (leak > kSectorLeakTolerance) {
    throw Error(ErrorCode::kTruncationOverflow,
                "rotation needs complete photon-number sectors; weight " +
                    std::to_string(leak) + " lies above total n = cutoff " +
                    std::to_string(cutoff));
  }

  FockVector out(cutoff);
  for (int n = 0; n <= cutoff; ++n) {
    Eigen::VectorXcd sector(n + 1);
    bool occupied = false;
    for (int j = 0; j <= n; ++j) {
      sector(j) = in(j, n - j);
      occupied = occupied || sector(j) != Complex{};
    }
    if (!occupied) continue;
    const Eigen::VectorXcd rotated = rotation_block(n, v, angle) * sector;
    for (int j = 0; j <= n; ++j) out(j, n - j) = rotated(j);
  }
  return FockState::normalized(std::move(out), state.truncation_loss());
}

FockState beam_splitter(const FockState& state, BeamSplitterKind kind) {
  const double angle = kind == BeamSplitterKind::kFirst ? std::numbers::pi / 2
                                                        : -std::numbers::pi / 2;
  return apply_rotation(state, SpinDirection::x(), angle);
}

FockState phase_shift(const FockState& state, double phi) {
  const int n = state.cutoff();
  FockVector out = state.vector();
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; k <= n; ++k) {
      out(j, k) *= std::exp(Complex{0.0, -0.5 * phi * (j - k)});
    }
  }
  return FockState::normalized(std::move(out), state.truncation_loss());
}

FockState mzi_unitary(const FockState& state, double phi) {
  return apply_rotation(state, SpinDirection::y(), phi);
}

}  // namespace mzi
