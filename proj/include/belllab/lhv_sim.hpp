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

// Local hidden-variable models and Monte Carlo estimates of their
// correlation functions E(a, b) = integral A(a, l) B(b, l) rho(l) dl.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "belllab/chsh_quantum.hpp"
#include "belllab/core_algebra.hpp"
#include "belllab/errors.hpp"
#include "belllab/random.hpp"

namespace belllab {

// A model draws a hidden variable and answers each side from its own setting
// and that variable only; the signatures leave no path for side A to see b.
template <class M>
concept LhvModel = requires(const M& m, Rng& rng, const UnitVector3& n,
                            const typename M::HiddenVariable& lambda) {
  { m.sample_lambda(rng) } -> std::same_as<typename M::HiddenVariable>;
  { m.response_a(n, lambda) } -> std::convertible_to<double>;
  { m.response_b(n, lambda) } -> std::convertible_to<double>;
};

// Inverse-CDF sampling: z uniform in [-1, 1], azimuth uniform in [0, 2 pi).
inline UnitVector3 sample_uniform_sphere(Rng& rng) {
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  const double z = 2.0 * uniform01(rng) - 1.0;
  const double phi = kTwoPi * uniform01(rng);
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  return UnitVector3::normalized({rho * std::cos(phi), rho * std::sin(phi), z});
}

inline double sign_of(double v) { return v >= 0.0 ? 1.0 : -1.0; }

// Deterministic +-1 outcomes: A = sign(a . l), B = -sign(b . l), l uniform on
// the sphere. E(theta) = -1 + 2 theta / pi.
struct BellSignModel {
  using HiddenVariable = UnitVector3;
  static constexpr std::string_view name = "bell-sign";

  HiddenVariable sample_lambda(Rng& rng) const { return sample_uniform_sphere(rng); }
  double response_a(const UnitVector3& a, const HiddenVariable& l) const { return sign_of(dot(a, l)); }
  double response_b(const UnitVector3& b, const HiddenVariable& l) const { return -sign_of(dot(b, l)); }
};

// Averaged responses A = a . l, B = -b . l with |A|, |B| <= 1. E = -a.b / 3.
struct AveragedLinearModel {
  using HiddenVariable = UnitVector3;
  static constexpr std::string_view name = "averaged-linear";

  HiddenVariable sample_lambda(Rng& rng) const { return sample_uniform_sphere(rng); }
  double response_a(const UnitVector3& a, const HiddenVariable& l) const { return dot(a, l); }
  double response_b(const UnitVector3& b, const HiddenVariable& l) const { return -dot(b, l); }
};

// Both sides always answer +1.
struct ConstantModel {
  struct HiddenVariable {};
  static constexpr std::string_view name = "constant";

  HiddenVariable sample_lambda(Rng&) const { return {}; }
  double response_a(const UnitVector3&, const HiddenVariable&) const { return 1.0; }
  double response_b(const UnitVector3&, const HiddenVariable&) const { return 1.0; }
};

struct CorrelationEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t n_samples = 0;
};

using SettingPair = std::pair<UnitVector3, UnitVector3>;

namespace detail {

struct PairMoments {
  std::vector<double> sum;
  std::vector<double> sum_sq;
  double max_response = 0.0;
};

}  // namespace detail

// Estimates E for every (a, b) pair in `pairs` from one shared stream of n
// hidden variables. Deterministic in (seed, n); independent of `threads`.
template <LhvModel M>
std::vector<CorrelationEstimate> estimate_correlations(const M& model, std::span<const SettingPair> pairs,
                                                       std::uint64_t n, std::uint64_t seed,
                                                       unsigned threads = 1) {
  if (n == 0) throw InvalidArgument("estimate_correlation: sample count must be positive");
  const std::size_t k = pairs.size();
  auto parts = map_partitions<detail::PairMoments>(
      n, threads, [&](std::uint64_t part, std::uint64_t begin, std::uint64_t end) {
        detail::PairMoments m{std::vector<double>(k, 0.0), std::vector<double>(k, 0.0), 0.0};
        Rng rng = make_stream({seed, part});
        for (std::uint64_t i = begin; i < end; ++i) {
          const auto lambda = model.sample_lambda(rng);
          for (std::size_t p = 0; p < k; ++p) {
            const double ra = model.response_a(pairs[p].first, lambda);
            const double rb = model.response_b(pairs[p].second, lambda);
            m.max_response = std::max({m.max_response, std::abs(ra), std::abs(rb)});
            const double prod = ra * rb;
            m.sum[p] += prod;
            m.sum_sq[p] += prod * prod;
          }
        }
        return m;
      });

  std::vector<double> sum(k, 0.0), sum_sq(k, 0.0);
  double max_response = 0.0;
  for (const auto& m : parts) {
    max_response = std::max(max_response, m.max_response);
    for (std::size_t p = 0; p < k; ++p) {
      sum[p] += m.sum[p];
      sum_sq[p] += m.sum_sq[p];
    }
  }
  if (max_response > 1.0 + kUnitTolerance)
    throw PreconditionViolation("LHV model returned a response outside [-1, 1]");

  std::vector<CorrelationEstimate> out(k);
  const double nd = static_cast<double>(n);
  for (std::size_t p = 0; p < k; ++p) {
    const double mean = sum[p] / nd;
    double var = 0.0;
    if (n > 1) var = std::max(0.0, (sum_sq[p] - nd * mean * mean) / (nd - 1.0));
    out[p] = {mean, std::sqrt(var / nd), n};
  }
  return out;
}

template <LhvModel M>
CorrelationEstimate estimate_correlation(const M& model, const UnitVector3& a, const UnitVector3& b,
                                         std::uint64_t n, std::uint64_t seed, unsigned threads = 1) {
  const std::array<SettingPair, 1> pairs{SettingPair{a, b}};
  return estimate_correlations(model, std::span<const SettingPair>(pairs), n, seed, threads).front();
}

struct LhvChshEstimate {
  double value = 0.0;
  // Quadrature sum of the four correlation errors.
  double std_error = 0.0;
  // E(a,b), E(a,b'), E(a',b), E(a',b').
  std::array<CorrelationEstimate, 4> correlations{};

  bool within_bound(double n_sigma) const { return value <= 2.0 + n_sigma * std_error + 1e-12; }
};

// |E(a,b) - E(a,b')| + |E(a',b') + E(a',b)|; all four correlations use the
// same hidden-variable stream.
template <LhvModel M>
LhvChshEstimate chsh_lhv(const M& model, const MeasurementSettings& s, std::uint64_t n,
                         std::uint64_t seed, unsigned threads = 1) {
  const std::array<SettingPair, 4> pairs{SettingPair{s.a, s.b}, SettingPair{s.a, s.b_prime},
                                         SettingPair{s.a_prime, s.b}, SettingPair{s.a_prime, s.b_prime}};
  const auto e = estimate_correlations(model, std::span<const SettingPair>(pairs), n, seed, threads);
  LhvChshEstimate r;
  std::copy(e.begin(), e.end(), r.correlations.begin());
  r.value = std::abs(e[0].value - e[1].value) + std::abs(e[3].value + e[2].value);
  double var = 0.0;
  for (const auto& c : e) var += c.std_error * c.std_error;
  r.std_error = std::sqrt(var);
  return r;
}

struct Bell1964Check {
  double lhs = 0.0;  // |E(a,b) - E(a,b')|
  double rhs = 0.0;  // 1 + E(b',b)
  double std_error = 0.0;
  double e_b_prime_b_prime = 0.0;

  bool holds(double n_sigma) const { return lhs <= rhs + n_sigma * std_error + 1e-12; }
};

// The three-setting inequality |E(a,b) - E(a,b')| <= 1 + E(b',b), valid for
// models with perfect anticorrelation E(b',b') = -1. Throws
// PreconditionViolation when the model does not anticorrelate at b'.
template <LhvModel M>
Bell1964Check bell1964_check(const M& model, const UnitVector3& a, const UnitVector3& b,
                             const UnitVector3& b_prime, std::uint64_t n, std::uint64_t seed,
                             unsigned threads = 1) {
  const std::array<SettingPair, 4> pairs{SettingPair{a, b}, SettingPair{a, b_prime},
                                         SettingPair{b_prime, b_prime}, SettingPair{b_prime, b}};
  const auto e = estimate_correlations(model, std::span<const SettingPair>(pairs), n, seed, threads);
  if (std::abs(e[2].value + 1.0) > 5.0 * e[2].std_error + 1e-12)
    throw PreconditionViolation("bell1964_check: model does not give E(b', b') = -1");
  Bell1964Check r;
  r.lhs = std::abs(e[0].value - e[1].value);
  r.rhs = 1.0 + e[3].value;
  r.std_error = std::sqrt(e[0].std_error * e[0].std_error + e[1].std_error * e[1].std_error +
                          e[3].std_error * e[3].std_error);
  r.e_b_prime_b_prime = e[2].value;
  return r;
}

// Models selectable by name.
using AnyLhvModel = std::variant<BellSignModel, AveragedLinearModel, ConstantModel>;

inline AnyLhvModel lhv_model_from_name(std::string_view name) {
  if (name == BellSignModel::name) return BellSignModel{};
  if (name == AveragedLinearModel::name) return AveragedLinearModel{};
  if (name == ConstantModel::name) return ConstantModel{};
  throw InvalidArgument("unknown LHV model: " + std::string(name));
}

}  // namespace belllab
