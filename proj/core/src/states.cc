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

#include "mzi/states.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <string>
#include <utility>

#include <boost/math/tools/toms748_solve.hpp>

#include "mzi/error.h"
#include "mzi/schwinger.h"

namespace mzi {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::string_view alias;
};

constexpr FamilyInfo kFamilyInfo[] = {
    {Family::kTwinSqueezedVacuum, "twin-squeezed-vacuum", "twin-squeezed"},
    {Family::kTwinFock, "twin-fock", "twin-fock"},
    {Family::kEntangledCoherent, "entangled-coherent", "ecs"},
    {Family::kNoon, "noon", "noon"},
    {Family::kAmplifiedBell, "amplified-bell", "bell"},
    {Family::kFraternalTwinFock, "fraternal-twin-fock", "fraternal"},
    {Family::kCoherent, "coherent", "coherent"},
    {Family::kTwoModeSqueezedVacuum, "two-mode-squeezed-vacuum", "tmsv"},
    {Family::kSeparableCoherentProbe, "separable-coherent-probe", "bs-fock"},
    {Family::kFockPair, "fock-pair", "fock"},
};

using AmplitudeFn = std::function<Complex(int, int)>;

// Fills the grid for an explicit cutoff, or searches the smallest cutoff whose
// plain and (1+j+k)^2-weighted tails both fall below the loss ceiling.
FockState truncate(const AmplitudeFn& amp, const CutoffPolicy& policy) {
  if (policy.explicit_cutoff) {
    const int n = *policy.explicit_cutoff;
    if (n < 0 || n > policy.ceiling) {
      throw Error(ErrorCode::kCutoffExceeded,
                  "explicit cutoff " + std::to_string(n) + " outside [0, " +
                      std::to_string(policy.ceiling) + "]");
    }
    FockVector raw(n);
    for (int j = 0; j <= n; ++j) {
      for (int k = 0; k <= n; ++k) raw(j, k) = amp(j, k);
    }
    return FockState::from_truncated(std::move(raw), policy.loss_ceiling);
  }

  const int top = policy.ceiling;
  FockVector grid(top);
  std::vector<double> shell(top + 1, 0.0);
  std::vector<double> weighted_shell(top + 1, 0.0);
  for (int j = 0; j <= top; ++j) {
    for (int k = 0; k <= top; ++k) {
      const Complex c = amp(j, k);
      grid(j, k) = c;
      const double p = std::norm(c);
      const double w = (1.0 + j + k) * (1.0 + j + k) * p;
      const int s = std::max(j, k);
      shell[s] += p;
      weighted_shell[s] += w;
    }
  }
  double kept = 0.0;
  double weighted_tail = 0.0;
  for (double w : weighted_shell) weighted_tail += w;
  for (int n = 0; n <= top; ++n) {
    kept += shell[n];
    weighted_tail -= weighted_shell[n];
    const double loss = std::max(0.0, 1.0 - kept);
    if (loss < policy.loss_ceiling && std::max(0.0, weighted_tail) < policy.loss_ceiling) {
      return FockState::from_truncated(grid.resized(n), policy.loss_ceiling);
    }
  }
  throw Error(ErrorCode::kTruncationLoss,
              "cutoff ceiling " + std::to_string(top) +
                  " is insufficient for the requested parameters");
}

FockState fixed_number(FockState state, const CutoffPolicy& policy) {
  if (!policy.explicit_cutoff) return state;
  const int n = *policy.explicit_cutoff;
  if (n < state.cutoff()) {
    throw Error(ErrorCode::kCutoffExceeded,
                "explicit cutoff " + std::to_string(n) + " below the photon count " +
                    std::to_string(state.cutoff()));
  }
  if (n > policy.ceiling) {
    throw Error(ErrorCode::kCutoffExceeded,
                "explicit cutoff " + std::to_string(n) + " above ceiling " +
                    std::to_string(policy.ceiling));
  }
  return state.with_cutoff(n);
}

void require_nonnegative(double value, const char* what) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("negative or non-finite ") + what + ": " + std::to_string(value));
  }
}

void require_count(int n, int min, const char* family) {
  if (n < min) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(family) + " needs n >= " + std::to_string(min));
  }
}

FockState split_fock(int j, int k) {
  return beam_splitter(make_fock(j, k, j + k), BeamSplitterKind::kFirst);
}

// Grid length used for single-mode amplitude tables.
int table_length(const CutoffPolicy& policy) {
  return policy.explicit_cutoff ? *policy.explicit_cutoff : policy.ceiling;
}

}  // namespace

std::string_view family_name(Family family) {
  for (const FamilyInfo& info : kFamilyInfo) {
    if (info.family == family) return info.name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const FamilyInfo& info : kFamilyInfo) {
    if (info.name == name || info.alias == name) return info.family;
  }
  return std::nullopt;
}

bool is_fixed_number(Family family) {
  switch (family) {
    case Family::kTwinFock:
    case Family::kNoon:
    case Family::kFraternalTwinFock:
    case Family::kSeparableCoherentProbe:
    case Family::kFockPair:
      return true;
    default:
      return false;
  }
}

bool is_integer_family(Family family) { return is_fixed_number(family); }

int cutoff_ceiling_from_env() {
  const char* raw = std::getenv("MZI_QFI_CUTOFF_CEILING");
  if (raw == nullptr || *raw == '\0') return 256;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value <= 0 || value > 4096) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("MZI_QFI_CUTOFF_CEILING must be an integer in [1, 4096], got '") +
                    raw + "'");
  }
  return static_cast<int>(value);
}

std::vector<Complex> squeezed_vacuum_amplitudes(double xi, int max_n) {
  require_nonnegative(xi, "squeezing");
  std::vector<Complex> out(static_cast<std::size_t>(max_n) + 1, Complex{});
  const Complex step{0.0, std::tanh(xi)};
  Complex c = 1.0 / std::sqrt(std::cosh(xi));
  for (int m = 0; 2 * m <= max_n; ++m) {
    out[2 * m] = c;
    c *= step * std::sqrt((2.0 * m + 1.0) / (2.0 * m + 2.0));
  }
  return out;
}

std::vector<Complex> squeezed_one_photon_amplitudes(double xi, int max_n) {
  require_nonnegative(xi, "squeezing");
  std::vector<Complex> out(static_cast<std::size_t>(max_n) + 1, Complex{});
  const Complex step{0.0, std::tanh(xi)};
  Complex c = std::pow(std::cosh(xi), -1.5);
  for (int m = 0; 2 * m + 1 <= max_n; ++m) {
    out[2 * m + 1] = c;
    c *= step * std::sqrt((2.0 * m + 3.0) / (2.0 * m + 2.0));
  }
  return out;
}

std::vector<Complex> coherent_amplitudes(Complex alpha, int max_n) {
  std::vector<Complex> out(static_cast<std::size_t>(max_n) + 1, Complex{});
  Complex c = std::exp(-0.5 * std::norm(alpha));
  for (int n = 0; n <= max_n; ++n) {
    out[n] = c;
    c *= alpha / std::sqrt(n + 1.0);
  }
  return out;
}

Eigen::MatrixXcd squeezer_by_exponentiation(double xi, int keep, int work_dim) {
  if (keep <= 0 || work_dim < keep) {
    throw Error(ErrorCode::kInvalidArgument, "need 0 < keep <= work_dim");
  }
  // (c^dag^2 + c^2) / 2 in the number basis.
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(work_dim, work_dim);
  for (int m = 0; m + 2 < work_dim; ++m) {
    const double e = 0.5 * std::sqrt((m + 1.0) * (m + 2.0));
    g(m + 2, m) = e;
    g(m, m + 2) = e;
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g);
  Eigen::VectorXcd phases(work_dim);
  for (int i = 0; i < work_dim; ++i) {
    phases(i) = std::exp(Complex{0.0, xi * eig.eigenvalues()(i)});
  }
  const Eigen::MatrixXcd vecs = eig.eigenvectors().cast<Complex>();
  const Eigen::MatrixXcd s = vecs * phases.asDiagonal() * vecs.transpose();
  return s.topLeftCorner(keep, keep);
}

FockState build(const ProbeSpec& spec) {
  const ProbeParams& p = spec.params;
  const CutoffPolicy& policy = spec.cutoff;
  const int len = table_length(policy);

  switch (spec.family) {
    case Family::kTwinSqueezedVacuum: {
      const auto sv = squeezed_vacuum_amplitudes(p.xi, len);
      return truncate([&](int j, int k) { return sv[j] * sv[k]; }, policy);
    }
    case Family::kAmplifiedBell: {
      const auto s0 = squeezed_vacuum_amplitudes(p.xi, len);
      const auto s1 = squeezed_one_photon_amplitudes(p.xi, len);
      const FockState bell = split_fock(1, 0);
      const Complex c10 = bell.amplitude(1, 0);
      const Complex c01 = bell.amplitude(0, 1);
      return truncate(
          [&](int j, int k) { return c10 * s1[j] * s0[k] + c01 * s0[j] * s1[k]; }, policy);
    }
    case Family::kEntangledCoherent: {
      if (!std::isfinite(std::abs(p.alpha))) {
        throw Error(ErrorCode::kInvalidArgument, "alpha must be finite");
      }
      const auto coh = coherent_amplitudes(p.alpha, len);
      // <alpha,0|0,alpha> = exp(-|alpha|^2)
      const double norm = std::sqrt(2.0 * (1.0 + std::exp(-std::norm(p.alpha))));
      return truncate(
          [&](int j, int k) {
            Complex c{};
            if (k == 0) c += coh[j];
            if (j == 0) c += coh[k];
            return c / norm;
          },
          policy);
    }
    case Family::kCoherent: {
      if (!std::isfinite(std::abs(p.alpha))) {
        throw Error(ErrorCode::kInvalidArgument, "alpha must be finite");
      }
      const Complex beta = p.alpha / std::sqrt(2.0);
      const auto ca = coherent_amplitudes(beta, len);
      const auto cb = coherent_amplitudes(Complex{0.0, 1.0} * beta, len);
      return truncate([&](int j, int k) { return ca[j] * cb[k]; }, policy);
    }
    case Family::kTwoModeSqueezedVacuum: {
      require_nonnegative(p.chi, "squeezing");
      const double t = std::tanh(p.chi);
      const double c0 = 1.0 / std::cosh(p.chi);
      std::vector<double> diag(static_cast<std::size_t>(len) + 1);
      double c = c0;
      for (int n = 0; n <= len; ++n, c *= t) diag[n] = c;
      return truncate([&](int j, int k) { return j == k ? Complex{diag[j]} : Complex{}; },
                      policy);
    }
    case Family::kNoon: {
      require_count(p.n, 1, "noon");
      FockVector v(p.n);
      v(p.n, 0) = 1.0;
      v(0, p.n) = 1.0;
      return fixed_number(FockState::normalized(std::move(v)), policy);
    }
    case Family::kTwinFock:
      require_count(p.n, 0, "twin-fock");
      return fixed_number(split_fock(p.n, p.n), policy);
    case Family::kFraternalTwinFock:
      require_count(p.n, 0, "fraternal-twin-fock");
      return fixed_number(split_fock(p.n + 1, p.n), policy);
    case Family::kSeparableCoherentProbe:
      require_count(p.n, 0, "separable-coherent-probe");
      return fixed_number(split_fock(p.n, 0), policy);
    case Family::kFockPair:
      require_count(p.n, 0, "fock-pair");
      return fixed_number(make_fock(p.n, p.n, p.n), policy);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown family");
}

double mean_photon_number(const FockState& state) {
  return moment(state, {1, 1, 0, 0}).real() + moment(state, {0, 0, 1, 1}).real();
}

namespace {

struct IntegerLadder {
  int min_n;
  double offset;  // nbar = offset + slope * n
  double slope;
};

IntegerLadder integer_ladder(Family family) {
  switch (family) {
    case Family::kNoon:
    case Family::kSeparableCoherentProbe:
      return {1, 0.0, 1.0};
    case Family::kTwinFock:
    case Family::kFockPair:
      return {1, 0.0, 2.0};
    case Family::kFraternalTwinFock:
      return {0, 1.0, 2.0};
    default:
      return {0, 0.0, 1.0};
  }
}

void set_continuous(Family family, double x, ProbeParams& params) {
  switch (family) {
    case Family::kTwinSqueezedVacuum:
    case Family::kAmplifiedBell:
      params.xi = x;
      break;
    case Family::kTwoModeSqueezedVacuum:
      params.chi = x;
      break;
    default:
      params.alpha = Complex{x, 0.0};
      break;
  }
}

}  // namespace

NbarSolution solve_param_for_nbar(Family family, double nbar, const CutoffPolicy& cutoff) {
  if (!(nbar > 0.0) || !std::isfinite(nbar)) {
    throw Error(ErrorCode::kUnattainable, "target n-bar must be positive and finite");
  }
  NbarSolution out;
  out.target_nbar = nbar;

  if (is_integer_family(family)) {
    const IntegerLadder ladder = integer_ladder(family);
    const double lowest = ladder.offset + ladder.slope * ladder.min_n;
    if (nbar < lowest) {
      throw Error(ErrorCode::kUnattainable,
                  std::string(family_name(family)) + " cannot reach n-bar " +
                      std::to_string(nbar) + " (minimum " + std::to_string(lowest) + ")");
    }
    const int n = std::max(
        ladder.min_n,
        static_cast<int>(std::floor((nbar - ladder.offset) / ladder.slope + 0.5)));
    out.params.n = n;
    out.realized_nbar = ladder.offset + ladder.slope * n;
    out.adjusted = out.realized_nbar != nbar;
    if (out.adjusted) {
      out.note = "nearest attainable n-bar " + std::to_string(out.realized_nbar) +
                 " (n = " + std::to_string(n) + ")";
    }
    return out;
  }

  const auto nbar_at = [&](double x) {
    ProbeSpec spec{family, {}, cutoff};
    set_continuous(family, x, spec.params);
    return mean_photon_number(build(spec));
  };

  double lo = 0.0;
  const double floor_nbar = nbar_at(lo);
  if (nbar < floor_nbar) {
    throw Error(ErrorCode::kUnattainable,
                std::string(family_name(family)) + " cannot reach n-bar " +
                    std::to_string(nbar) + " (minimum " + std::to_string(floor_nbar) + ")");
  }
  if (nbar == floor_nbar) {
    set_continuous(family, 0.0, out.params);
    out.realized_nbar = floor_nbar;
    return out;
  }

  // Grow gently: squeezing parameters overshoot the cutoff ceiling quickly.
  double hi = 0.25;
  try {
    while (nbar_at(hi) < nbar) {
      lo = hi;
      hi *= 1.25;
    }
  } catch (const Error& e) {
    throw Error(ErrorCode::kUnattainable,
                std::string("n-bar ") + std::to_string(nbar) +
                    " is out of reach under the cutoff ceiling: " + e.what());
  }

  std::uintmax_t iterations = 200;
  const auto residual = [&](double x) { return nbar_at(x) - nbar; };
  const auto bracket = boost::math::tools::toms748_solve(
      residual, lo, hi, boost::math::tools::eps_tolerance<double>(50), iterations);
  // Either end of the final bracket is within rounding; keep the closer one.
  const double r_lo = std::abs(residual(bracket.first));
  const double r_hi = std::abs(residual(bracket.second));
  const double x = r_lo <= r_hi ? bracket.first : bracket.second;
  set_continuous(family, x, out.params);
  out.realized_nbar = nbar_at(x);
  if (std::abs(out.realized_nbar - nbar) > 1e-8) {
    throw Error(ErrorCode::kUnattainable,
                "root finding reached n-bar " + std::to_string(out.realized_nbar) +
                    " for target " + std::to_string(nbar));
  }
  return out;
}

}  // namespace mzi
