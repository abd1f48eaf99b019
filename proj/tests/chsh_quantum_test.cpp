// Copyright 2026 The BellLab Authors
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

#include "belllab/chsh_quantum.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"

namespace belllab {
namespace {

using testing::kPi;
const double kH = 1.0 / std::sqrt(2.0);

TEST(Projector, AxisCases) {
  const Matrix2 up = projector(UnitVector3::z_axis()).matrix();
  EXPECT_EQ(up(0, 0), Complex(1.0));
  EXPECT_EQ(up(1, 1), Complex(0.0));
  const Matrix2 down = projector(-UnitVector3::z_axis()).matrix();
  EXPECT_EQ(down(0, 0), Complex(0.0));
  EXPECT_EQ(down(1, 1), Complex(1.0));
  const Matrix2 px = projector(UnitVector3::x_axis()).matrix();
  for (const auto& v : px.data) EXPECT_EQ(v, Complex(0.5));
}

TEST(Projector, RankOneIdempotent) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const Matrix2 p = projector(testing::random_unit(rng)).matrix();
    EXPECT_LT(max_abs_diff(p * p, p), 1e-12);
    EXPECT_NEAR(trace(p).real(), 1.0, 1e-12);
  }
  EXPECT_THROW(Projector2(Matrix2::identity() * 2.0), InvalidArgument);
}

TEST(ProjectorProduct, Cases) {
  const auto z = UnitVector3::z_axis();
  EXPECT_LT(max_abs_diff(projector_product(z, -z), Matrix2{}), 1e-15);
  EXPECT_LT(max_abs_diff(projector_product(z, z), projector(z).matrix()), 1e-15);
  const Matrix2 zx = projector_product(z, UnitVector3::x_axis());
  EXPECT_NEAR(trace(zx).real(), 0.5, 1e-15);
  EXPECT_NEAR(trace(zx).imag(), 0.0, 1e-15);
  // Explicit product: diag(1,0) * [[1/2,1/2],[1/2,1/2]].
  EXPECT_NEAR(std::abs(zx(0, 0) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(zx(0, 1) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(zx(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(zx(1, 1)), 0.0, 1e-15);
}

TEST(ProjectorProduct, MatchesMatrixProductAndVanishesOnlyForAntipodes) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 1000; ++i) {
    const auto a = testing::random_unit(rng);
    const auto b = testing::random_unit(rng);
    const Matrix2 direct = projector(a).matrix() * projector(b).matrix();
    EXPECT_LT(max_abs_diff(projector_product(a, b), direct), 1e-12);
    EXPECT_GT(max_abs_diff(projector_product(a, b), Matrix2{}), 1e-6);
    EXPECT_LT(max_abs_diff(projector_product(a, -a), Matrix2{}), 1e-12);
  }
}

TEST(Correlation, SingletAntiCorrelates) {
  const auto singlet = canonical_state(kH, -kH);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto a = testing::random_unit(rng);
    EXPECT_NEAR(correlation_matrix(singlet, a, a), -1.0, 1e-12);
  }
}

TEST(Correlation, TripletPlusCases) {
  const auto s = canonical_state(kH, kH);
  EXPECT_NEAR(correlation_matrix(s, UnitVector3::z_axis(), UnitVector3::z_axis()), -1.0, 1e-15);
  EXPECT_NEAR(correlation_matrix(s, UnitVector3::x_axis(), UnitVector3::x_axis()), 1.0, 1e-15);
}

TEST(Correlation, ClosedFormMatchesMatrixAndProjectorRoutes) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 10000; ++i) {
    const auto c = testing::random_coefficients(rng);
    const auto a = testing::random_unit(rng);
    const auto b = testing::random_unit(rng);
    const auto st = canonical_state(c[0], c[1]);
    const double m = correlation_matrix(st, a, b);
    ASSERT_LT(std::abs(correlation_closed(c[0], c[1], a, b) - m), 1e-12);
    ASSERT_LT(std::abs(correlation_from_projectors(st, a, b) - m), 1e-12);
    ASSERT_LT(std::abs(st.expectation(tensor_observable(a, b).matrix()).imag()), 1e-10);
  }
}

TEST(Correlation, ClosedFormSpecialCases) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto c = testing::random_coefficients(rng);
    EXPECT_NEAR(correlation_closed(c[0], c[1], UnitVector3::z_axis(), UnitVector3::z_axis()), -1.0, 1e-15);
    const auto a = testing::random_unit(rng);
    const auto b = testing::random_unit(rng);
    EXPECT_NEAR(correlation_closed(kH, -kH, a, b), -dot(a, b), 1e-15);
  }
  EXPECT_THROW(correlation_closed(0.5, 0.5, UnitVector3::z_axis(), UnitVector3::z_axis()), InvalidArgument);
}

TEST(Correlation, BoundedAndPhaseInvariant) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 10000; ++i) {
    const auto s = testing::random_state(rng);
    const auto a = testing::random_unit(rng);
    const auto b = testing::random_unit(rng);
    const double e = correlation_matrix(s, a, b);
    ASSERT_LE(std::abs(e), 1.0 + 1e-12);
    auto amps = s.amplitudes();
    const Complex phase = std::polar(1.0, 2.0 * kPi * (i % 97) / 97.0);
    for (auto& x : amps) x *= phase;
    ASSERT_LT(std::abs(correlation_matrix(TwoQubitState::normalized(amps), a, b) - e), 1e-12);
  }
}

TEST(JointProbabilities, Cases) {
  const auto z = UnitVector3::z_axis();
  const auto p = joint_probabilities(canonical_state(kH, -kH), z, z);
  EXPECT_NEAR(p.p_pp, 0.0, 1e-15);
  EXPECT_NEAR(p.p_pm, 0.5, 1e-15);
  EXPECT_NEAR(p.p_mp, 0.5, 1e-15);
  EXPECT_NEAR(p.p_mm, 0.0, 1e-15);

  const auto x = UnitVector3::x_axis();
  const auto q = joint_probabilities(canonical_state(kH, kH), x, x);
  EXPECT_NEAR(q.p_pp, 0.5, 1e-15);
  EXPECT_NEAR(q.p_pm, 0.0, 1e-15);
  EXPECT_NEAR(q.p_mp, 0.0, 1e-15);
  EXPECT_NEAR(q.p_mm, 0.5, 1e-15);
}

TEST(JointProbabilities, CompleteAndConsistentWithCorrelation) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 10000; ++i) {
    const auto s = testing::random_state(rng);
    const auto a = testing::random_unit(rng);
    const auto b = testing::random_unit(rng);
    const auto p = joint_probabilities(s, a, b);
    ASSERT_NEAR(p.sum(), 1.0, 1e-12);
    for (double v : {p.p_pp, p.p_pm, p.p_mp, p.p_mm}) {
      ASSERT_GE(v, -1e-12);
      ASSERT_LE(v, 1.0 + 1e-12);
    }
    ASSERT_NEAR(p.correlation(), correlation_matrix(s, a, b), 1e-12);
  }
}

TEST(PauliExpansion, AgreesWithBornRule) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 2000; ++i) {
    const auto s = testing::random_state(rng);
    const PauliExpansion x(s);
    const auto a = testing::random_unit(rng);
    const auto b = testing::random_unit(rng);
    const auto p = joint_probabilities(s, a, b);
    const auto q = x.joint_probabilities(a, b);
    ASSERT_NEAR(p.p_pp, q.p_pp, 1e-12);
    ASSERT_NEAR(p.p_pm, q.p_pm, 1e-12);
    ASSERT_NEAR(p.p_mp, q.p_mp, 1e-12);
    ASSERT_NEAR(p.p_mm, q.p_mm, 1e-12);
    ASSERT_NEAR(x.correlation(a, b), correlation_matrix(s, a, b), 1e-12);
  }
}

TEST(Gisin, MaximallyEntangledAngles) {
  const auto s = gisin_settings(kH, kH);
  // beta = pi/4, beta' = 3 pi/4.
  EXPECT_NEAR(std::acos(s.b.z()), kPi / 4.0, 1e-12);
  EXPECT_NEAR(std::acos(s.b_prime.z()), 3.0 * kPi / 4.0, 1e-12);
  EXPECT_NEAR(s.b.x(), kH, 1e-15);
  EXPECT_NEAR(s.b_prime.x(), kH, 1e-15);
  EXPECT_NEAR(s.b.x() * s.b.x() + s.b.z() * s.b.z(), 1.0, 1e-15);
  EXPECT_EQ(s.a.z(), 1.0);
  EXPECT_EQ(s.a_prime.x(), 1.0);
}

TEST(Gisin, SideFollowsSignOfProduct) {
  EXPECT_EQ(gisin_settings(kH, -kH).a_prime.x(), -1.0);
  EXPECT_EQ(gisin_settings(-0.6, -0.8).a_prime.x(), 1.0);
  EXPECT_EQ(gisin_settings(-0.6, 0.8).a_prime.x(), -1.0);
}

TEST(Gisin, SeparableThrows) {
  EXPECT_THROW(gisin_settings(1.0, 0.0), NoViolationPossible);
  EXPECT_THROW(gisin_settings(0.5, 0.5), InvalidArgument);
}

TEST(Gisin, ReachesMaxViolation) {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 100; ++i) {
    const auto c = testing::random_coefficients(rng);
    const auto st = canonical_state(c[0], c[1]);
    const auto s = gisin_settings(c[0], c[1]);
    const double v = chsh_value(st, s);
    EXPECT_NEAR(v, max_violation(c[0], c[1]), 1e-9);
    EXPECT_GT(v, 2.0);
    // Both a' terms are positive, so the two functional forms agree.
    EXPECT_NEAR(chsh_value_symmetric(st, s), v, 1e-12);
    // |P(a,b) - P(a,b')| = |cos beta - cos beta'| at alpha = 0.
    const auto p = chsh_correlations(st, s);
    EXPECT_NEAR(std::abs(p.ab - p.ab_prime), std::abs(s.b.z() - s.b_prime.z()), 1e-12);
  }
}

TEST(MaxViolation, Values) {
  EXPECT_NEAR(max_violation(kH, kH), 2.0 * std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(max_violation(kH, kH), 2.828427, 1e-6);
  EXPECT_EQ(max_violation(1.0, 0.0), 2.0);
  // |c1 c2| = 0.4: 2 sqrt(1.64).
  EXPECT_NEAR(2.0 * std::sqrt(1.0 + 4.0 * 0.16), 2.561250, 1e-6);
  EXPECT_NEAR(testing::grid_max_bell(0.4, 1000), 2.0 * std::sqrt(1.64), 1e-5);
  const double c1 = std::sqrt(0.5 + std::sqrt(0.25 - 0.16));
  const double c2 = std::sqrt(0.5 - std::sqrt(0.25 - 0.16));
  EXPECT_NEAR(max_violation(c1, c2), testing::grid_max_bell(0.4, 1000), 1e-5);
}

TEST(ChshValue, ProductStatesNeverViolate) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  for (int i = 0; i < 10000; ++i) {
    const Complex u0{g(rng), g(rng)}, u1{g(rng), g(rng)}, v0{g(rng), g(rng)}, v1{g(rng), g(rng)};
    const auto s = TwoQubitState::normalized({u0 * v0, u0 * v1, u1 * v0, u1 * v1});
    const MeasurementSettings m{testing::random_unit(rng), testing::random_unit(rng), testing::random_unit(rng),
                                testing::random_unit(rng)};
    ASSERT_LE(chsh_value(s, m), 2.0 + 1e-9);
    ASSERT_LE(chsh_value_symmetric(s, m), 2.0 + 1e-9);
  }
}

TEST(ChshValue, TsirelsonCeiling) {
  std::mt19937_64 rng(18);
  for (int i = 0; i < 100000; ++i) {
    const auto s = testing::random_state(rng);
    const MeasurementSettings m{testing::random_unit(rng), testing::random_unit(rng), testing::random_unit(rng),
                                testing::random_unit(rng)};
    ASSERT_LE(chsh_value(s, m), kTsirelsonBound + 1e-6);
  }
}

}  // namespace
}  // namespace belllab
