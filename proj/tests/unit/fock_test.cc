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

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "mzi/error.h"
#include "mzi/states.h"
#include "test_support.h"

using namespace mzi;

namespace {

MomentSpec number_a() { return {1, 1, 0, 0}; }

}  // namespace

TEST(fock, make_fock_basis) {
  FockState vac = make_fock(0, 0, 8);
  EXPECT_EQ(vac.amplitude(0, 0), Complex(1.0));
  EXPECT_NEAR(vac.vector().norm_squared(), 1.0, 1e-15);
  EXPECT_EQ(vac.truncation_loss(), 0.0);

  FockState two = make_fock(2, 0, 8);
  for (int j = 0; j <= 8; ++j) {
    for (int k = 0; k <= 8; ++k) {
      EXPECT_EQ(two.amplitude(j, k), Complex(j == 2 && k == 0 ? 1.0 : 0.0));
    }
  }
}

TEST(fock, make_fock_rejects_index_beyond_cutoff) {
  try {
    make_fock(9, 0, 8);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCutoffExceeded);
    EXPECT_NE(std::string(e.what()).find("exceeds cutoff"), std::string::npos);
  }
  EXPECT_THROW(make_fock(0, 9, 8), Error);
  EXPECT_THROW(make_fock(-1, 0, 8), Error);
}

TEST(fock, ladder_actions) {
  FockVector down = apply_ladder(make_fock(1, 0, 4), Mode::kA, Ladder::kLower);
  EXPECT_NEAR(std::abs(down(0, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(down.norm_squared(), 1.0, 1e-15);

  FockVector zero = apply_ladder(make_fock(0, 5, 8), Mode::kA, Ladder::kLower);
  EXPECT_EQ(zero.norm_squared(), 0.0);

  FockVector up = apply_ladder(make_fock(2, 0, 8), Mode::kA, Ladder::kRaise);
  EXPECT_NEAR(std::abs(up(3, 0) - std::sqrt(3.0)), 0.0, 1e-15);
  EXPECT_NEAR(up.norm_squared(), 3.0, 1e-14);

  FockVector up_b = apply_ladder(make_fock(0, 1, 4), Mode::kB, Ladder::kRaise);
  EXPECT_NEAR(std::abs(up_b(0, 2) - std::sqrt(2.0)), 0.0, 1e-15);
}

TEST(fock, raise_at_cutoff_overflows) {
  try {
    apply_ladder(make_fock(4, 0, 4), Mode::kA, Ladder::kRaise);
    FAIL() << "expected an overflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTruncationOverflow);
  }
  // Negligible edge weight is allowed through.
  FockVector v(4);
  v(0, 0) = 1.0;
  v(4, 0) = 1e-8;
  EXPECT_NO_THROW(apply_ladder(FockState::normalized(v), Mode::kA, Ladder::kRaise));
}

TEST(fock, inner_products) {
  EXPECT_NEAR(std::abs(inner(make_fock(1, 0, 3), make_fock(1, 0, 3)) - 1.0), 0.0, 1e-15);
  EXPECT_EQ(inner(make_fock(1, 0, 3), make_fock(0, 1, 3)), Complex(0.0));
  ProbeSpec noon{Family::kNoon, {}, {}};
  noon.params.n = 2;
  EXPECT_NEAR(std::abs(inner(build(noon), make_fock(2, 0, 2)) - 1.0 / std::sqrt(2.0)), 0.0,
              1e-15);
  // Mismatched cutoffs pad the smaller grid.
  EXPECT_NEAR(std::abs(inner(make_fock(2, 0, 2), make_fock(2, 0, 7)) - 1.0), 0.0, 1e-15);
}

TEST(fock, inner_is_conjugate_linear_in_first_argument) {
  FockVector x(1);
  x(1, 0) = Complex{0.0, 1.0};
  FockVector y(1);
  y(1, 0) = 1.0;
  EXPECT_NEAR(std::abs(inner(x, y) - Complex(0.0, -1.0)), 0.0, 1e-15);
}

TEST(fock, number_state_moments) {
  EXPECT_NEAR(std::abs(moment(make_fock(2, 0, 4), {2, 2, 0, 0}) - 2.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(moment(make_fock(1, 1, 4), {1, 1, 1, 1}) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(moment(make_fock(3, 2, 5), number_a()) - 3.0), 0.0, 1e-14);
  EXPECT_THROW(moment(make_fock(1, 1, 4), {5, 0, 0, 0}), Error);
}

TEST(fock, tmsv_photon_number_moment) {
  for (double chi : {0.2, 0.6, 1.1}) {
    ProbeSpec spec{Family::kTwoModeSqueezedVacuum, {}, {}};
    spec.params.chi = chi;
    const double want = std::sinh(chi) * std::sinh(chi);
    EXPECT_NEAR(moment(build(spec), number_a()).real(), want, 1e-9) << chi;
  }
}

TEST(fock, from_truncated_records_loss) {
  FockVector v(2);
  v(0, 0) = std::sqrt(0.5);
  v(1, 0) = std::sqrt(0.5 - 1e-12);
  FockState s = FockState::from_truncated(v);
  EXPECT_NEAR(s.truncation_loss(), 1e-12, 1e-15);
  EXPECT_NEAR(s.vector().norm_squared(), 1.0, 1e-15);

  v(1, 0) = std::sqrt(0.4);
  try {
    FockState::from_truncated(v);
    FAIL() << "expected a truncation-loss error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTruncationLoss);
  }
}

TEST(fock, with_cutoff_refuses_lossy_crop) {
  FockState s = make_fock(3, 0, 5);
  EXPECT_EQ(s.with_cutoff(8).cutoff(), 8);
  EXPECT_EQ(s.with_cutoff(3).amplitude(3, 0), Complex(1.0));
  EXPECT_THROW(s.with_cutoff(2), Error);
}

TEST(fock, phase_insensitive_distance_ignores_global_phase) {
  std::mt19937_64 rng(7);
  FockState s = gen::random_state(rng, 6, 6);
  FockVector rotated = s.vector();
  rotated *= std::polar(1.0, 1.234);
  EXPECT_LT(phase_insensitive_distance(s, FockState::normalized(rotated)), 1e-14);
  EXPECT_GT(phase_insensitive_distance(make_fock(1, 0, 1), make_fock(0, 1, 1)), 1.4);
}

TEST(fock_property, commutator_is_identity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    FockState s = gen::random_state(rng, 12, 10);
    for (Mode m : {Mode::kA, Mode::kB}) {
      const double raised = apply_ladder(s, m, Ladder::kRaise).norm_squared();
      const double lowered = apply_ladder(s, m, Ladder::kLower).norm_squared();
      EXPECT_NEAR(raised - lowered, 1.0, 1e-10);
    }
  }
}

TEST(fock_property, normal_ordered_moment_symmetry) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    FockState s = gen::random_state(rng, 10, 8);
    for (int p = 0; p <= 2; ++p) {
      for (int q = 0; q <= 2; ++q) {
        for (int r = 0; r <= 2; ++r) {
          for (int t = 0; t <= 2; ++t) {
            const Complex m = moment(s, {p, q, r, t});
            const Complex swapped = moment(s, {q, p, t, r});
            EXPECT_LT(std::abs(m - std::conj(swapped)), 1e-12);
          }
        }
      }
    }
    EXPECT_LT(std::abs(moment(s, {2, 2, 1, 1}).imag()), 1e-12);
  }
}

TEST(fock_property, padding_invariance) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    FockState s = gen::random_state(rng, 6, 6);
    FockState padded = s.with_cutoff(6 + 1 + trial % 5);
    for (int p = 0; p <= 2; ++p) {
      for (int q = 0; q <= 2; ++q) {
        for (int r = 0; r <= 2; ++r) {
          const MomentSpec spec{p, q, r, 2 - r};
          EXPECT_LT(std::abs(moment(s, spec) - moment(padded, spec)), 1e-12);
        }
      }
    }
  }
}
