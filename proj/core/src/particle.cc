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

#include "mzi/particle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "mzi/error.h"

namespace mzi {

namespace {

constexpr double kSectorLeakTolerance = 1e-12;

void check_single_sector(const FockState& state, int n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "particle analysis needs n >= 1");
  }
  if (n > 2 * state.cutoff()) {
    throw Error(ErrorCode::kNotSingleSector,
                "sector n = " + std::to_string(n) + " does not fit the cutoff");
  }
  double inside = 0.0;
  for (int j = std::max(0, n - state.cutoff()); j <= std::min(n, state.cutoff()); ++j) {
    inside += std::norm(state.amplitude(j, n - j));
  }
  const double leak = state.vector().norm_squared() - inside;
  if (leak > kSectorLeakTolerance) {
    throw Error(ErrorCode::kNotSingleSector,
                "state has weight " + std::to_string(leak) + " outside photon number " +
                    std::to_string(n) + "; decompose into sectors first");
  }
}

ParticleReport finish(int n, double mean, double var, double cov, double witness_tolerance) {
  ParticleReport r;
  r.n = n;
  r.mean_sigma_z = mean;
  r.var_sigma_z = var;
  r.cov_sigma_z = cov;
  r.f_particle = n * var + double(n) * (n - 1) * cov;
  r.witness_entangled = cov > witness_tolerance;
  return r;
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Applies a 2x2 operator to qubit `qubit` (1-based, qubit 1 is the top bit).
void apply_to_qubit(Eigen::VectorXcd& psi, int n, int qubit, const Eigen::Matrix2cd& u) {
  const Eigen::Index bit = Eigen::Index{1} << (n - qubit);
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    if (i & bit) continue;
    const Complex mu = psi(i);
    const Complex nu = psi(i | bit);
    psi(i) = u(0, 0) * mu + u(0, 1) * nu;
    psi(i | bit) = u(1, 0) * mu + u(1, 1) * nu;
  }
}

}  // namespace

SectorDecomposition decompose_sectors(const FockState& state) {
  SectorDecomposition out;
  const int cutoff = state.cutoff();
  for (int n = 0; n <= 2 * cutoff; ++n) {
    const int lo = std::max(0, n - cutoff);
    const int hi = std::min(n, cutoff);
    double weight = 0.0;
    for (int j = lo; j <= hi; ++j) weight += std::norm(state.amplitude(j, n - j));
    if (weight < kSectorWeightFloor) continue;
    FockVector v(cutoff);
    for (int j = lo; j <= hi; ++j) v(j, n - j) = state.amplitude(j, n - j);
    out.sectors.push_back({n, weight, FockState::normalized(std::move(v))});
    out.weights_sum += weight;
  }
  return out;
}

ParticleReport particle_moments(const FockState& sector_state, int n, double witness_tolerance) {
  check_single_sector(sector_state, n);
  const double jz = j_moment(sector_state, Generator::kJz, 1);
  const double jz2 = j_moment(sector_state, Generator::kJz, 2);
  const double mean = 2.0 * jz / n;
  const double var = std::max(0.0, 1.0 - mean * mean);
  // The pair term is absent for a single photon.
  const double cov = n >= 2 ? (4.0 * jz2 - n) / (double(n) * (n - 1)) - mean * mean : 0.0;
  return finish(n, mean, var, cov, witness_tolerance);
}

MaybeReal qfi_particle(const SectorDecomposition& decomposition) {
  for (const Sector& s : decomposition.sectors) {
    if (s.weight > 1.0 - kFixedNumberTolerance) {
      if (s.n == 0) return MaybeReal::undefined("no photons");
      return particle_moments(s.state, s.n).f_particle;
    }
  }
  return MaybeReal::undefined("particle fluctuations present");
}

Eigen::VectorXcd symmetric_qubit_vector(const FockState& sector_state, int n) {
  if (n > kOracleMaxPhotons) {
    throw Error(ErrorCode::kInvalidArgument,
                "multi-qubit construction is capped at n = " + std::to_string(kOracleMaxPhotons));
  }
  check_single_sector(sector_state, n);
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXcd psi(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const int k = n - std::popcount(static_cast<unsigned long long>(i));  // photons in |mu>
    psi(i) = sector_state.amplitude(k, n - k) / std::sqrt(binomial(n, k));
  }
  return psi;
}

ParticleReport multiqubit_oracle(const FockState& sector_state, int n, double witness_tolerance) {
  const Eigen::VectorXcd psi = symmetric_qubit_vector(sector_state, n);
  const auto z = [n](Eigen::Index index, int qubit) {
    return (index >> (n - qubit)) & 1 ? -1.0 : 1.0;
  };
  double z1 = 0.0, z1sq = 0.0, z2 = 0.0, z12 = 0.0;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    const double p = std::norm(psi(i));
    z1 += z(i, 1) * p;
    z1sq += z(i, 1) * z(i, 1) * p;
    if (n >= 2) {
      z2 += z(i, 2) * p;
      z12 += z(i, 1) * z(i, 2) * p;
    }
  }
  const double cov = n >= 2 ? z12 - z1 * z2 : 0.0;
  return finish(n, z1, z1sq - z1 * z1, cov, witness_tolerance);
}

Eigen::Matrix2cd single_particle_state(const FockState& sector_state, int n) {
  const Eigen::VectorXcd psi = symmetric_qubit_vector(sector_state, n);
  const Eigen::Index half = psi.size() / 2;
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      Complex sum{};
      for (Eigen::Index rest = 0; rest < half; ++rest) {
        sum += psi(a * half + rest) * std::conj(psi(b * half + rest));
      }
      rho(a, b) = sum;
    }
  }
  return rho;
}

std::array<double, 2> single_particle_spectrum(const FockState& sector_state, int n) {
  check_single_sector(sector_state, n);
  const double sx = 2.0 * j_moment(sector_state, Generator::kJx, 1) / n;
  const double sy = 2.0 * j_moment(sector_state, Generator::kJy, 1) / n;
  const double sz = 2.0 * j_moment(sector_state, Generator::kJz, 1) / n;
  const double r = std::min(1.0, std::sqrt(sx * sx + sy * sy + sz * sz));
  return {0.5 * (1.0 - r), 0.5 * (1.0 + r)};
}

Eigen::Matrix2cd single_qubit_rotation(const SpinDirection& v, double gamma) {
  const Complex i{0.0, 1.0};
  Eigen::Matrix2cd v_sigma;
  v_sigma << v[2], v[0] - i * v[1],
             v[0] + i * v[1], -v[2];
  return std::cos(0.5 * gamma) * Eigen::Matrix2cd::Identity() -
         i * std::sin(0.5 * gamma) * v_sigma;
}

double locality_distance(int n, const SpinDirection& v, double gamma) {
  if (n < 1 || n > kOracleMaxPhotons) {
    throw Error(ErrorCode::kInvalidArgument,
                "locality check needs 1 <= n <= " + std::to_string(kOracleMaxPhotons));
  }
  const Eigen::Matrix2cd u = single_qubit_rotation(v, gamma);
  double worst = 0.0;
  for (int k = 0; k <= n; ++k) {
    const FockState basis = make_fock(k, n - k, n);
    const Eigen::VectorXcd collective =
        symmetric_qubit_vector(apply_rotation(basis, v, gamma), n);
    Eigen::VectorXcd product = symmetric_qubit_vector(basis, n);
    for (int q = 1; q <= n; ++q) apply_to_qubit(product, n, q, u);
    worst = std::max(worst, (collective - product).norm());
  }
  return worst;
}

bool locality_check(int n, const SpinDirection& v, double gamma, double tolerance) {
  return locality_distance(n, v, gamma) < tolerance;
}

}  // namespace mzi
