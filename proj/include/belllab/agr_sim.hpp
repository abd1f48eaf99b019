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

// Event-by-event simulation of a two-channel-polarizer coincidence
// experiment and the estimators built on its four coincidence counts.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "belllab/chsh_quantum.hpp"
#include "belllab/core_algebra.hpp"
#include "belllab/errors.hpp"
#include "belllab/lhv_sim.hpp"
#include "belllab/random.hpp"

namespace belllab {

struct CoincidenceCounts {
  std::uint64_t r_pp = 0;
  std::uint64_t r_pm = 0;
  std::uint64_t r_mp = 0;
  std::uint64_t r_mm = 0;
  // Pairs emitted, recorded or not.
  std::uint64_t n_pairs = 0;

  std::uint64_t total() const { return r_pp + r_pm + r_mp + r_mm; }

  CoincidenceCounts& operator+=(const CoincidenceCounts& o) {
    r_pp += o.r_pp;
    r_pm += o.r_pm;
    r_mp += o.r_mp;
    r_mm += o.r_mm;
    n_pairs += o.n_pairs;
    return *this;
  }

  friend bool operator==(const CoincidenceCounts&, const CoincidenceCounts&) = default;
};

struct ExperimentConfig {
  TwoQubitState state;
  MeasurementSettings settings;
  std::uint64_t n_pairs = 1'000'000;  // per orientation pair
  // Probability that one side records its photon; coincidences need both.
  double efficiency = 1.0;
  // Width (rad) of the Gaussian angular jitter applied to each analyzer per pair.
  double misalignment_sigma = 0.0;
  // Correlation damping: the pair source emits V |psi><psi| + (1 - V) I/4.
  double visibility = 1.0;
  std::uint64_t seed = 0;
  unsigned threads = 1;

  void validate() const {
    if (n_pairs == 0) throw InvalidArgument("experiment: n_pairs must be positive");
    if (!(efficiency > 0.0 && efficiency <= 1.0)) throw InvalidArgument("experiment: efficiency must lie in (0, 1]");
    if (!(misalignment_sigma >= 0.0) || !std::isfinite(misalignment_sigma))
      throw InvalidArgument("experiment: misalignment_sigma must be finite and >= 0");
    if (!(visibility >= 0.0 && visibility <= 1.0)) throw InvalidArgument("experiment: visibility must lie in [0, 1]");
  }
};

// Rotates v by a random tangent step whose two components are N(0, sigma^2).
inline UnitVector3 jitter(const UnitVector3& v, double sigma, Rng& rng) {
  const double t1 = sigma * standard_normal(rng);
  const double t2 = sigma * standard_normal(rng);
  const double r = std::hypot(t1, t2);
  if (r == 0.0) return v;
  const Vector3 helper = std::abs(v.x()) < 0.9 ? Vector3{1.0, 0.0, 0.0} : Vector3{0.0, 1.0, 0.0};
  const Vector3 e1 = UnitVector3::normalized(cross(v.vec(), helper)).vec();
  const Vector3 e2 = cross(v.vec(), e1);
  const Vector3 dir = (1.0 / r) * (t1 * e1 + t2 * e2);
  return UnitVector3::normalized(std::cos(r) * v.vec() + std::sin(r) * dir);
}

namespace detail {

inline JointProbabilities mixed_probabilities(const PauliExpansion& state, const UnitVector3& a,
                                              const UnitVector3& b, double visibility) {
  const JointProbabilities q = state.joint_probabilities(a, b);
  const double noise = 0.25 * (1.0 - visibility);
  auto mix = [&](double p) { return std::max(0.0, visibility * p + noise); };
  return {mix(q.p_pp), mix(q.p_pm), mix(q.p_mp), mix(q.p_mm)};
}

}  // namespace detail

// Emits cfg.n_pairs pairs measured along (a, b). `run_index` selects an
// independent stream for each orientation pair of one experiment.
inline CoincidenceCounts simulate_run(const ExperimentConfig& cfg, const UnitVector3& a,
                                      const UnitVector3& b, std::uint64_t run_index = 0) {
  cfg.validate();
  const bool jittered = cfg.misalignment_sigma > 0.0;
  const bool lossy = cfg.efficiency < 1.0;
  const PauliExpansion expansion(cfg.state);
  const JointProbabilities nominal = detail::mixed_probabilities(expansion, a, b, cfg.visibility);

  auto parts = map_partitions<CoincidenceCounts>(
      cfg.n_pairs, cfg.threads, [&](std::uint64_t part, std::uint64_t begin, std::uint64_t end) {
        CoincidenceCounts c;
        c.n_pairs = end - begin;
        Rng rng = make_stream({cfg.seed, run_index, part});
        for (std::uint64_t i = begin; i < end; ++i) {
          JointProbabilities p = nominal;
          if (jittered) {
            const UnitVector3 a_eff = jitter(a, cfg.misalignment_sigma, rng);
            const UnitVector3 b_eff = jitter(b, cfg.misalignment_sigma, rng);
            p = detail::mixed_probabilities(expansion, a_eff, b_eff, cfg.visibility);
          }
          const double u = uniform01(rng) * p.sum();
          bool recorded = true;
          if (lossy) {
            const bool side_a = uniform01(rng) < cfg.efficiency;
            const bool side_b = uniform01(rng) < cfg.efficiency;
            recorded = side_a && side_b;
          }
          if (!recorded) continue;
          if (u < p.p_pp)
            ++c.r_pp;
          else if (u < p.p_pp + p.p_pm)
            ++c.r_pm;
          else if (u < p.p_pp + p.p_pm + p.p_mp)
            ++c.r_mp;
          else
            ++c.r_mm;
        }
        return c;
      });

  CoincidenceCounts total;
  for (const auto& c : parts) total += c;
  return total;
}

// P_ij = R_ij / (R++ + R-- + R+- + R-+).
inline JointProbabilities estimate_probabilities(const CoincidenceCounts& c) {
  const std::uint64_t n = c.total();
  if (n == 0) throw InsufficientData("no coincidences recorded");
  const double d = static_cast<double>(n);
  return {static_cast<double>(c.r_pp) / d, static_cast<double>(c.r_pm) / d,
          static_cast<double>(c.r_mp) / d, static_cast<double>(c.r_mm) / d};
}

// (R++ + R-- - R+- - R-+) / (R++ + R-- + R+- + R-+), with the multinomial
// delta-method error sqrt((1 - E^2) / N).
inline CorrelationEstimate estimate_E(const CoincidenceCounts& c) {
  const std::uint64_t n = c.total();
  if (n == 0) throw InsufficientData("no coincidences recorded");
  const double d = static_cast<double>(n);
  const double same = static_cast<double>(c.r_pp) + static_cast<double>(c.r_mm);
  const double diff = static_cast<double>(c.r_pm) + static_cast<double>(c.r_mp);
  const double e = (same - diff) / d;
  return {e, std::sqrt(std::max(0.0, 1.0 - e * e) / d), n};
}

struct SEstimate {
  double s_value = 0.0;
  double std_error = 0.0;
  // Order: (a,b), (a,b'), (a',b), (a',b').
  std::array<CorrelationEstimate, 4> correlations{};
  std::array<CoincidenceCounts, 4> counts{};
};

// S = E(a,b) - E(a,b') + E(a',b) + E(a',b'), errors added in quadrature.
inline SEstimate estimate_S(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto& s = cfg.settings;
  const std::array<SettingPair, 4> pairs{SettingPair{s.a, s.b}, SettingPair{s.a, s.b_prime},
                                         SettingPair{s.a_prime, s.b}, SettingPair{s.a_prime, s.b_prime}};
  SEstimate r;
  double var = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    r.counts[k] = simulate_run(cfg, pairs[k].first, pairs[k].second, k);
    r.correlations[k] = estimate_E(r.counts[k]);
    var += r.correlations[k].std_error * r.correlations[k].std_error;
  }
  const auto& e = r.correlations;
  r.s_value = e[0].value - e[1].value + e[2].value + e[3].value;
  r.std_error = std::sqrt(var);
  return r;
}

// Analyzer quadruple in the xz-plane from polar angles (rad).
inline MeasurementSettings coplanar_settings(double a, double a_prime, double b, double b_prime) {
  return {make_unit_vector(a, 0.0), make_unit_vector(b, 0.0), make_unit_vector(a_prime, 0.0),
          make_unit_vector(b_prime, 0.0)};
}

// a = 0, a' = 90, b = 45, b' = 135 degrees; |S| = 2 sqrt(2) for the singlet.
inline MeasurementSettings optimal_coplanar_settings() {
  constexpr double kPi = 3.14159265358979323846;
  return coplanar_settings(0.0, kPi / 2.0, kPi / 4.0, 3.0 * kPi / 4.0);
}

inline TwoQubitState singlet_state() {
  const double h = 1.0 / std::sqrt(2.0);
  return canonical_state(h, -h);
}

}  // namespace belllab
