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

#include <cmath>
#include <cstdlib>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "gtest/gtest.h"

#include "mzi/coherence.h"
#include "mzi/error.h"
#include "mzi/particle.h"
#include "mzi/schwinger.h"

using namespace mzi;

namespace {

FockState build_with(Family f, ProbeParams p, CutoffPolicy c = {}) {
  return build(ProbeSpec{f, p, c});
}

ProbeParams with_n(int n) {
  ProbeParams p;
  p.n = n;
  return p;
}

// exp(i xi (c^dag^2 + c^2)/2) on a truncated number basis, via Pade.
Eigen::MatrixXcd squeezer_oracle(double xi, int dim) {
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(dim, dim);
  for (int m = 0; m + 2 < dim; ++m) {
    const double e = 0.5 * std::sqrt((m + 1.0) * (m + 2.0));
    g(m + 2, m) = e;
    g(m, m + 2) = e;
  }
  return (Complex(0.0, xi) * g).exp();
}

}  // namespace

TEST(family, names_and_aliases) {
  for (Family f : kAllFamilies) {
    EXPECT_EQ(parse_family(family_name(f)), f);
  }
  EXPECT_EQ(parse_family("tmsv"), Family::kTwoModeSqueezedVacuum);
  EXPECT_EQ(parse_family("ecs"), Family::kEntangledCoherent);
  EXPECT_EQ(parse_family("fock"), Family::kFockPair);
  EXPECT_FALSE(parse_family("thermal").has_value());
}

TEST(build, noon) {
  FockState s = build_with(Family::kNoon, with_n(2));
  EXPECT_NEAR(s.amplitude(2, 0).real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s.amplitude(0, 2).real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::norm(s.amplitude(1, 1)), 0.0, 1e-30);
  EXPECT_THROW(build_with(Family::kNoon, with_n(0)), Error);
}

TEST(build, fock_pair_and_split_fock) {
  FockState pair = build_with(Family::kFockPair, with_n(3));
  EXPECT_EQ(pair.amplitude(3, 3), Complex(1.0));
  FockState split = build_with(Family::kSeparableCoherentProbe, with_n(3));
  FockState direct = beam_splitter(make_fock(3, 0, 3), BeamSplitterKind::kFirst);
  EXPECT_LT(phase_insensitive_distance(split, direct), 1e-14);
}

TEST(build, two_mode_squeezed_vacuum_amplitudes) {
  for (double chi : {0.3, 0.88, 1.2}) {
    ProbeParams p;
    p.chi = chi;
    FockState s = build_with(Family::kTwoModeSqueezedVacuum, p);
    EXPECT_LT(s.truncation_loss(), 1e-10);
    for (int j = 0; j <= s.cutoff(); ++j) {
      for (int k = 0; k <= s.cutoff(); ++k) {
        const double want = j == k ? std::pow(std::tanh(chi), j) / std::cosh(chi) : 0.0;
        EXPECT_NEAR(std::abs(s.amplitude(j, k) - want), 0.0, 1e-10);
      }
    }
  }
}

TEST(build, coherent_probe) {
  ProbeParams p;
  p.alpha = 2.0;
  FockState s = build_with(Family::kCoherent, p);
  const double beta = 2.0 / std::sqrt(2.0);
  double nbar = 0.0;
  double lgfact_j = 0.0;
  for (int j = 0; j <= s.cutoff(); ++j) {
    if (j > 0) lgfact_j += std::log(static_cast<double>(j));
    double lgfact_k = 0.0;
    for (int k = 0; k <= s.cutoff(); ++k) {
      if (k > 0) lgfact_k += std::log(static_cast<double>(k));
      // |beta, i beta>: Poisson magnitudes and a factor i^k.
      const double mag = std::exp(-beta * beta + (j + k) * std::log(beta) - 0.5 * (lgfact_j + lgfact_k));
      const Complex want = mag * std::pow(Complex(0.0, 1.0), k);
      EXPECT_LT(std::abs(s.amplitude(j, k) - want), 1e-10);
      nbar += (j + k) * std::norm(s.amplitude(j, k));
    }
  }
  EXPECT_NEAR(nbar, 4.0, 1e-8);
  EXPECT_NEAR(mean_photon_number(s), 4.0, 1e-8);
}

TEST(build, entangled_coherent_exact_normalization) {
  ProbeParams p;
  p.alpha = 0.5;
  FockState s = build_with(Family::kEntangledCoherent, p);
  const double norm = std::sqrt(2.0 * (1.0 + std::exp(-0.25)));
  EXPECT_NEAR(s.amplitude(0, 0).real(), 2.0 * std::exp(-0.125) / norm, 1e-12);
  EXPECT_NEAR(s.vector().norm_squared(), 1.0, 1e-14);
}

TEST(build, squeezed_vacuum_matches_matrix_exponential) {
  const int dim = 400;
  const int compare = 120;
  for (double xi : {0.4, 1.0, 1.5}) {
    Eigen::MatrixXcd u = squeezer_oracle(xi, dim);
    const auto sv = squeezed_vacuum_amplitudes(xi, compare - 1);
    const auto s1 = squeezed_one_photon_amplitudes(xi, compare - 1);
    double d0 = 0.0, d1 = 0.0;
    for (int m = 0; m < compare; ++m) {
      d0 += std::norm(u(m, 0) - sv[m]);
      d1 += std::norm(u(m, 1) - s1[m]);
    }
    EXPECT_LT(std::sqrt(d0), 1e-8) << xi;
    EXPECT_LT(std::sqrt(d1), 1e-8) << xi;
  }
}

TEST(build, squeezer_eigen_route_matches_closed_form) {
  for (double xi : {0.5, 1.2, 1.5}) {
    Eigen::MatrixXcd s = squeezer_by_exponentiation(xi, 300, 900);
    const auto sv = squeezed_vacuum_amplitudes(xi, 299);
    double d = 0.0;
    for (int m = 0; m < 300; ++m) d += std::norm(s(m, 0) - sv[m]);
    EXPECT_LT(std::sqrt(d), 1e-8) << xi;
  }
}

TEST(build, twin_squeezed_is_a_product) {
  ProbeParams p;
  p.xi = 0.7;
  FockState s = build_with(Family::kTwinSqueezedVacuum, p);
  const auto sv = squeezed_vacuum_amplitudes(0.7, s.cutoff());
  double kept = 0.0;
  for (int m = 0; m <= s.cutoff(); ++m) kept += std::norm(sv[m]);
  for (int j = 0; j <= 6; ++j) {
    for (int k = 0; k <= 6; ++k) {
      EXPECT_LT(std::abs(s.amplitude(j, k) - sv[j] * sv[k] / kept), 1e-10);
    }
  }
}

TEST(build, rejects_negative_squeezing) {
  ProbeParams p;
  p.xi = -0.1;
  EXPECT_THROW(build_with(Family::kTwinSqueezedVacuum, p), Error);
  p.xi = 0.0;
  p.chi = -0.3;
  EXPECT_THROW(build_with(Family::kTwoModeSqueezedVacuum, p), Error);
}

TEST(build, explicit_cutoff_policy) {
  ProbeParams p;
  p.xi = 1.0;
  CutoffPolicy small;
  small.explicit_cutoff = 6;
  try {
    build_with(Family::kTwinSqueezedVacuum, p, small);
    FAIL() << "expected a truncation-loss error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTruncationLoss);
  }
  CutoffPolicy above;
  above.explicit_cutoff = 300;
  EXPECT_THROW(build_with(Family::kTwinSqueezedVacuum, p, above), Error);

  CutoffPolicy wide;
  wide.explicit_cutoff = 9;
  FockState noon = build_with(Family::kNoon, with_n(3), wide);
  EXPECT_EQ(noon.cutoff(), 9);
  CutoffPolicy narrow;
  narrow.explicit_cutoff = 2;
  EXPECT_THROW(build_with(Family::kNoon, with_n(3), narrow), Error);
}

TEST(build, ceiling_from_environment) {
  ::unsetenv("MZI_QFI_CUTOFF_CEILING");
  EXPECT_EQ(cutoff_ceiling_from_env(), 256);
  ::setenv("MZI_QFI_CUTOFF_CEILING", "64", 1);
  EXPECT_EQ(cutoff_ceiling_from_env(), 64);
  ::setenv("MZI_QFI_CUTOFF_CEILING", "lots", 1);
  EXPECT_THROW(cutoff_ceiling_from_env(), Error);
  ::unsetenv("MZI_QFI_CUTOFF_CEILING");
}

TEST(build, ceiling_limits_automatic_cutoff) {
  ProbeParams p;
  p.xi = 2.0;
  CutoffPolicy tight;
  tight.ceiling = 20;
  EXPECT_THROW(build_with(Family::kTwinSqueezedVacuum, p, tight), Error);
}

TEST(solve_param_for_nbar, examples) {
  NbarSolution tmsv = solve_param_for_nbar(Family::kTwoModeSqueezedVacuum, 2.0);
  EXPECT_NEAR(tmsv.params.chi, std::asinh(1.0), 1e-8);
  EXPECT_NEAR(tmsv.realized_nbar, 2.0, 1e-8);

  EXPECT_EQ(solve_param_for_nbar(Family::kNoon, 3.0).params.n, 3);
  NbarSolution twin = solve_param_for_nbar(Family::kTwinFock, 4.0);
  EXPECT_EQ(twin.params.n, 2);
  EXPECT_FALSE(twin.adjusted);

  NbarSolution fraternal = solve_param_for_nbar(Family::kFraternalTwinFock, 4.0);
  EXPECT_TRUE(fraternal.adjusted);
  EXPECT_EQ(fraternal.realized_nbar, 5.0);
  EXPECT_FALSE(fraternal.note.empty());
}

TEST(solve_param_for_nbar, unattainable_targets) {
  try {
    solve_param_for_nbar(Family::kNoon, 0.5);
    FAIL() << "expected unattainable";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnattainable);
  }
  EXPECT_THROW(solve_param_for_nbar(Family::kAmplifiedBell, 0.5), Error);
  EXPECT_THROW(solve_param_for_nbar(Family::kCoherent, -1.0), Error);
}

TEST(solve_param_for_nbar, continuous_families_hit_target) {
  const Family families[] = {Family::kTwinSqueezedVacuum, Family::kEntangledCoherent,
                             Family::kAmplifiedBell, Family::kCoherent,
                             Family::kTwoModeSqueezedVacuum};
  for (Family f : families) {
    for (double nbar : {1.5, 4.0, 8.0}) {
      NbarSolution sol = solve_param_for_nbar(f, nbar);
      FockState s = build_with(f, sol.params);
      EXPECT_NEAR(mean_photon_number(s), nbar, 1e-8) << family_name(f) << " " << nbar;
    }
  }
}

TEST(build_property, families_are_path_symmetric) {
  for (Family f : kAllFamilies) {
    FockState s = build_with(f, solve_param_for_nbar(f, 4.0).params);
    EXPECT_LT(s.truncation_loss(), 1e-10) << family_name(f);
    CoherenceReport r = analyze(s);
    EXPECT_NEAR(r.nbar_a, r.nbar_b, 1e-8) << family_name(f);
    ASSERT_EQ(r.g2_a.defined(), r.g2_b.defined());
    if (r.g2_a.defined()) EXPECT_NEAR(*r.g2_a, *r.g2_b, 1e-8) << family_name(f);
    EXPECT_TRUE(r.path_symmetric) << family_name(f);
  }
}

TEST(build_property, coherent_sectors_are_split_fock_states) {
  // Under the first beam splitter exp(-i pi/2 Jx) the sectors of
  // |beta, i beta> are B|0,n>; B|n,0> carries the conjugate relative phase.
  ProbeParams p;
  p.alpha = 3.0;
  FockState s = build_with(Family::kCoherent, p);
  SectorDecomposition d = decompose_sectors(s);
  int checked = 0;
  for (const Sector& sec : d.sectors) {
    if (sec.n == 0 || sec.n > 20) continue;
    FockState ref = beam_splitter(make_fock(0, sec.n, s.cutoff()), BeamSplitterKind::kFirst);
    EXPECT_LT(phase_insensitive_distance(sec.state, ref), 1e-8) << sec.n;
    ++checked;
  }
  EXPECT_EQ(checked, 20);
}

TEST(build_property, amplified_bell_sectors) {
  const double xi = 0.6;
  ProbeParams p;
  p.xi = xi;
  FockState s = build_with(Family::kAmplifiedBell, p);
  SectorDecomposition d = decompose_sectors(s);
  const double t = std::tanh(xi), c = std::cosh(xi);
  for (const Sector& sec : d.sectors) {
    ASSERT_EQ(sec.n % 2, 1);
    const int m = sec.n / 2;
    if (m > 15) break;
    FockState ref = beam_splitter(make_fock(m + 1, m, s.cutoff()), BeamSplitterKind::kFirst);
    EXPECT_LT(phase_insensitive_distance(sec.state, ref), 1e-8) << sec.n;
    EXPECT_NEAR(sec.weight, (m + 1) * std::pow(t, 2 * m) / std::pow(c, 4), 1e-10) << sec.n;
  }
}

TEST(build_property, twin_squeezed_sectors) {
  const double xi = 0.8;
  ProbeParams p;
  p.xi = xi;
  FockState s = build_with(Family::kTwinSqueezedVacuum, p);
  SectorDecomposition d = decompose_sectors(s);
  const double t = std::tanh(xi), c = std::cosh(xi);
  for (const Sector& sec : d.sectors) {
    ASSERT_EQ(sec.n % 2, 0);
    const int m = sec.n / 2;
    if (m > 15) break;
    FockState ref = beam_splitter(make_fock(m, m, s.cutoff()), BeamSplitterKind::kFirst);
    EXPECT_LT(phase_insensitive_distance(sec.state, ref), 1e-8) << sec.n;
    EXPECT_NEAR(sec.weight, std::pow(t, 2 * m) / (c * c), 1e-10) << sec.n;
  }
}
