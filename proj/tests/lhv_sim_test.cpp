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

#include "belllab/lhv_sim.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"

namespace belllab {
namespace {

using testing::kPi;

UnitVector3 xz(double theta) { return make_unit_vector(theta, 0.0); }

// A response that reads the far side's setting does not fit the interface.
struct SignalingModel {
  using HiddenVariable = UnitVector3;
  HiddenVariable sample_lambda(Rng& rng) const { return sample_uniform_sphere(rng); }
  double response_a(const UnitVector3& a, const UnitVector3& b, const HiddenVariable& l) const {
    return sign_of(dot(a, l) * dot(b, l));
  }
  double response_b(const UnitVector3& b, const HiddenVariable& l) const { return sign_of(dot(b, l)); }
};

static_assert(!LhvModel<SignalingModel>);
static_assert(LhvModel<BellSignModel>);
static_assert(LhvModel<AveragedLinearModel>);
static_assert(LhvModel<ConstantModel>);

struct OutOfRangeModel {
  struct HiddenVariable {};
  HiddenVariable sample_lambda(Rng&) const { return {}; }
  double response_a(const UnitVector3&, const HiddenVariable&) const { return 1.5; }
  double response_b(const UnitVector3&, const HiddenVariable&) const { return 1.0; }
};

TEST(EstimateCorrelation, EqualSettingsGiveMinusOneExactly) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10; ++i) {
    const auto a = testing::random_unit(rng);
    const auto e = estimate_correlation(BellSignModel{}, a, a, 10000, 42);
    EXPECT_EQ(e.value, -1.0);
    EXPECT_EQ(e.std_error, 0.0);
    EXPECT_EQ(e.n_samples, 10000u);
  }
}

TEST(EstimateCorrelation, OrthogonalSettingsAverageZero) {
  const auto e = estimate_correlation(BellSignModel{}, UnitVector3::z_axis(), UnitVector3::x_axis(), 1'000'000, 7);
  EXPECT_LE(std::abs(e.value), 3.0 * e.std_error);
}

TEST(EstimateCorrelation, SignModelLinearLaw) {
  for (double theta : {kPi / 6.0, kPi / 3.0, 2.0 * kPi / 3.0}) {
    const auto e = estimate_correlation(BellSignModel{}, xz(0.0), xz(theta), 1'000'000, 99);
    EXPECT_LE(std::abs(e.value - testing::sign_model_correlation(theta)), 3.0 * e.std_error) << theta;
  }
}

TEST(EstimateCorrelation, AveragedLinearIsMinusDotOverThree) {
  const auto e = estimate_correlation(AveragedLinearModel{}, xz(0.0), xz(kPi / 3.0), 1'000'000, 5);
  EXPECT_LE(std::abs(e.value + 0.5 / 3.0), 4.0 * e.std_error);
}

TEST(EstimateCorrelation, ZeroSamplesRejected) {
  EXPECT_THROW(estimate_correlation(BellSignModel{}, xz(0.0), xz(1.0), 0, 1), InvalidArgument);
}

TEST(EstimateCorrelation, ResponsesOutsideUnitIntervalRejected) {
  EXPECT_THROW(estimate_correlation(OutOfRangeModel{}, xz(0.0), xz(1.0), 10, 1), PreconditionViolation);
}

TEST(EstimateCorrelation, DeterministicAndThreadCountIndependent) {
  const auto a = xz(0.3), b = xz(1.9);
  const auto e1 = estimate_correlation(BellSignModel{}, a, b, 300'001, 123, 1);
  const auto e2 = estimate_correlation(BellSignModel{}, a, b, 300'001, 123, 1);
  const auto e4 = estimate_correlation(BellSignModel{}, a, b, 300'001, 123, 4);
  EXPECT_EQ(e1.value, e2.value);
  EXPECT_EQ(e1.std_error, e2.std_error);
  EXPECT_EQ(e1.value, e4.value);
  EXPECT_EQ(e1.std_error, e4.std_error);
  const auto other = estimate_correlation(BellSignModel{}, a, b, 300'001, 124, 1);
  EXPECT_NE(e1.value, other.value);
}

TEST(EstimateCorrelation, SharedStreamMatchesSingleEstimates) {
  const std::array<SettingPair, 2> pairs{SettingPair{xz(0.0), xz(1.0)}, SettingPair{xz(2.0), xz(0.5)}};
  const auto both = estimate_correlations(BellSignModel{}, std::span<const SettingPair>(pairs), 50'000, 8);
  EXPECT_EQ(both[0].value, estimate_correlation(BellSignModel{}, xz(0.0), xz(1.0), 50'000, 8).value);
  EXPECT_EQ(both[1].value, estimate_correlation(BellSignModel{}, xz(2.0), xz(0.5), 50'000, 8).value);
}

// Tie a . l = 0 resolves to +1 on side A and -1 on side B.
TEST(BellSignModel, TieResolution) {
  const BellSignModel m;
  const UnitVector3 l = UnitVector3::x_axis();
  EXPECT_EQ(m.response_a(UnitVector3::z_axis(), l), 1.0);
  EXPECT_EQ(m.response_b(UnitVector3::z_axis(), l), -1.0);
}

TEST(SampleSphere, UniformMoments) {
  Rng rng = make_stream({3, 0});
  double sx = 0, sz = 0, szz = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const auto v = sample_uniform_sphere(rng);
    ASSERT_LT(std::abs(v.vec().norm() - 1.0), 1e-12);
    sx += v.x();
    sz += v.z();
    szz += v.z() * v.z();
  }
  EXPECT_NEAR(sx / n, 0.0, 0.01);
  EXPECT_NEAR(sz / n, 0.0, 0.01);
  EXPECT_NEAR(szz / n, 1.0 / 3.0, 0.01);
}

TEST(ChshLhv, ConstantModelIsExactlyTwo) {
  const MeasurementSettings s{xz(0.0), xz(kPi / 4), xz(kPi / 2), xz(3 * kPi / 4)};
  const auto r = chsh_lhv(ConstantModel{}, s, 1000, 1);
  EXPECT_EQ(r.value, 2.0);
  EXPECT_TRUE(r.within_bound(5.0));
}

TEST(ChshLhv, GisinSettingsStayBelowTwo) {
  const double h = 1.0 / std::sqrt(2.0);
  const auto s = gisin_settings(h, h);
  for (const AnyLhvModel& model : {AnyLhvModel{BellSignModel{}}, AnyLhvModel{AveragedLinearModel{}}}) {
    const auto r = std::visit([&](const auto& m) { return chsh_lhv(m, s, 1'000'000, 42); }, model);
    EXPECT_TRUE(r.within_bound(5.0)) << r.value << " +- " << r.std_error;
    EXPECT_GT(r.std_error, 0.0);
  }
}

TEST(ChshLhv, RandomSettingsSweep) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 1000; ++i) {
    const MeasurementSettings s{testing::random_unit(rng), testing::random_unit(rng), testing::random_unit(rng),
                                testing::random_unit(rng)};
    const auto r = chsh_lhv(BellSignModel{}, s, 2000, static_cast<std::uint64_t>(i));
    ASSERT_TRUE(r.within_bound(5.0)) << r.value;
  }
}

TEST(Bell1964, HoldsForCoplanarTriple) {
  const auto r = bell1964_check(BellSignModel{}, xz(0.0), xz(kPi / 3), xz(2 * kPi / 3), 1'000'000, 4);
  EXPECT_TRUE(r.holds(5.0));
  EXPECT_EQ(r.e_b_prime_b_prime, -1.0);
}

TEST(Bell1964, IdenticalSettings) {
  const auto r = bell1964_check(BellSignModel{}, xz(0.4), xz(1.3), xz(1.3), 10000, 4);
  EXPECT_EQ(r.lhs, 0.0);
  EXPECT_TRUE(r.holds(0.0));
}

TEST(Bell1964, OrthogonalAndAntipodalAgainstClosedForm) {
  const auto a = xz(0.0), b = xz(kPi / 2), bp = xz(3 * kPi / 2);
  const auto r = bell1964_check(BellSignModel{}, a, b, bp, 1'000'000, 10);
  // E(a,b) = E(a,b') = 0, E(b',b) = -1 + 2 pi / pi = 1.
  const double lhs = std::abs(testing::sign_model_correlation(kPi / 2) - testing::sign_model_correlation(kPi / 2));
  const double rhs = 1.0 + testing::sign_model_correlation(kPi);
  EXPECT_LE(std::abs(r.lhs - lhs), 5.0 * r.std_error + 1e-12);
  EXPECT_NEAR(r.rhs, rhs, 1e-12);
  EXPECT_TRUE(r.holds(5.0));
}

TEST(Bell1964, RequiresPerfectAnticorrelation) {
  EXPECT_THROW(bell1964_check(AveragedLinearModel{}, xz(0.0), xz(1.0), xz(2.0), 10000, 1), PreconditionViolation);
}

TEST(ModelRegistry, Names) {
  EXPECT_TRUE(std::holds_alternative<BellSignModel>(lhv_model_from_name("bell-sign")));
  EXPECT_TRUE(std::holds_alternative<AveragedLinearModel>(lhv_model_from_name("averaged-linear")));
  EXPECT_THROW(lhv_model_from_name("psi-epistemic"), InvalidArgument);
}

}  // namespace
}  // namespace belllab
