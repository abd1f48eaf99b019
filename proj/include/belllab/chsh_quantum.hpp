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

// Quantum spin correlations and the CHSH functional for two-qubit states.

#pragma once

#include <array>
#include <cmath>

#include "belllab/core_algebra.hpp"

namespace belllab {

// Polarizer orientations (a, b, a', b'); a and a' belong to side A.
struct MeasurementSettings {
  UnitVector3 a;
  UnitVector3 b;
  UnitVector3 a_prime;
  UnitVector3 b_prime;
};

// Rank-one projector (I + n . sigma) / 2.
class Projector2 {
 public:
  explicit Projector2(const Matrix2& m) : m_(m) {
    if (!is_hermitian(m_, kUnitTolerance) || max_abs_diff(m_ * m_, m_) > kUnitTolerance)
      throw InvalidArgument("projector: not a Hermitian idempotent");
  }
  const Matrix2& matrix() const { return m_; }

 private:
  Matrix2 m_;
};

// Outcome-pair probabilities for one orientation pair.
struct JointProbabilities {
  double p_pp = 0.0;
  double p_pm = 0.0;
  double p_mp = 0.0;
  double p_mm = 0.0;

  double sum() const { return p_pp + p_pm + p_mp + p_mm; }
  // P++ + P-- - P+- - P-+
  double correlation() const { return p_pp + p_mm - p_pm - p_mp; }
};

inline Projector2 projector(const UnitVector3& n) {
  Matrix2 m = Matrix2::identity() + sigma_dot(n.vec());
  m *= 0.5;
  return Projector2(m);
}

// Product of the projectors along a and b, from the Pauli product identity
// (a.s)(b.s) = (a.b) I + i (a x b).s:
//   ab = [(1 + a.b) I + (a + b).s + i (a x b).s] / 4.
inline Matrix2 projector_product(const UnitVector3& a, const UnitVector3& b) {
  Matrix2 m = Matrix2::identity() * Complex{1.0 + dot(a, b), 0.0};
  m += sigma_dot(a.vec() + b.vec());
  m += sigma_dot(cross(a.vec(), b.vec())) * Complex{0.0, 1.0};
  m *= 0.25;
  return m;
}

// <psi| (a.sigma) (x) (b.sigma) |psi>
inline double correlation_matrix(const TwoQubitState& state, const UnitVector3& a,
                                 const UnitVector3& b) {
  return state.expectation(tensor_observable(a, b).matrix()).real();
}

// Same quantity written as <(2a - 1) (x) (2b - 1)> with the projectors.
inline double correlation_from_projectors(const TwoQubitState& state, const UnitVector3& a,
                                          const UnitVector3& b) {
  const Matrix2 sa = projector(a).matrix() * 2.0 - Matrix2::identity();
  const Matrix2 sb = projector(b).matrix() * 2.0 - Matrix2::identity();
  return state.expectation(kron(sa, sb)).real();
}

// Closed form for c1|01> + c2|10>:  2 c1 c2 (ax bx + ay by) - az bz.
inline double correlation_closed(double c1, double c2, const UnitVector3& a, const UnitVector3& b) {
  if (!std::isfinite(c1) || !std::isfinite(c2) ||
      std::abs(c1 * c1 + c2 * c2 - 1.0) > kCoefficientTolerance)
    throw InvalidArgument("correlation_closed: c1^2 + c2^2 must equal 1");
  return 2.0 * c1 * c2 * (a.x() * b.x() + a.y() * b.y()) - a.z() * b.z();
}

// Born-rule probabilities; "+" along n is the projector on n, "-" the one on -n.
inline JointProbabilities joint_probabilities(const TwoQubitState& state, const UnitVector3& a,
                                              const UnitVector3& b) {
  const Matrix2 ap = projector(a).matrix();
  const Matrix2 am = projector(-a).matrix();
  const Matrix2 bp = projector(b).matrix();
  const Matrix2 bm = projector(-b).matrix();
  JointProbabilities p;
  p.p_pp = state.expectation(kron(ap, bp)).real();
  p.p_pm = state.expectation(kron(ap, bm)).real();
  p.p_mp = state.expectation(kron(am, bp)).real();
  p.p_mm = state.expectation(kron(am, bm)).real();
  return p;
}

// Expansion of |psi><psi| in Pauli products:
//   rho = (I + r_A.s (x) I + I (x) r_B.s + sum_ij T_ij s_i (x) s_j) / 4.
// Lets many orientation pairs be evaluated without 4x4 algebra.
struct PauliExpansion {
  Vector3 bloch_a;
  Vector3 bloch_b;
  std::array<std::array<double, 3>, 3> t{};

  explicit PauliExpansion(const TwoQubitState& state) {
    const std::array<Matrix2, 3> s{pauli_x(), pauli_y(), pauli_z()};
    const Matrix2 id = Matrix2::identity();
    std::array<double, 3> ra{}, rb{};
    for (std::size_t i = 0; i < 3; ++i) {
      ra[i] = state.expectation(kron(s[i], id)).real();
      rb[i] = state.expectation(kron(id, s[i])).real();
      for (std::size_t j = 0; j < 3; ++j) t[i][j] = state.expectation(kron(s[i], s[j])).real();
    }
    bloch_a = {ra[0], ra[1], ra[2]};
    bloch_b = {rb[0], rb[1], rb[2]};
  }

  double correlation(const UnitVector3& a, const UnitVector3& b) const {
    const double av[3] = {a.x(), a.y(), a.z()};
    const double bv[3] = {b.x(), b.y(), b.z()};
    double e = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) e += av[i] * t[i][j] * bv[j];
    return e;
  }

  // p_ij = (1 + i a.r_A + j b.r_B + i j E(a, b)) / 4
  JointProbabilities joint_probabilities(const UnitVector3& a, const UnitVector3& b) const {
    const double ma = dot(a.vec(), bloch_a);
    const double mb = dot(b.vec(), bloch_b);
    const double e = correlation(a, b);
    return {0.25 * (1.0 + ma + mb + e), 0.25 * (1.0 + ma - mb - e), 0.25 * (1.0 - ma + mb - e),
            0.25 * (1.0 - ma - mb + e)};
  }
};

struct ChshCorrelations {
  double ab = 0.0;
  double ab_prime = 0.0;
  double a_prime_b = 0.0;
  double a_prime_b_prime = 0.0;

  // |P(a,b) - P(a,b')| + P(a',b) + P(a',b')
  double bell_form() const { return std::abs(ab - ab_prime) + a_prime_b + a_prime_b_prime; }
  // |P(a,b) - P(a,b')| + |P(a',b') + P(a',b)|
  double symmetric_form() const { return std::abs(ab - ab_prime) + std::abs(a_prime_b_prime + a_prime_b); }
};

inline ChshCorrelations chsh_correlations(const TwoQubitState& state, const MeasurementSettings& s) {
  return {correlation_matrix(state, s.a, s.b), correlation_matrix(state, s.a, s.b_prime),
          correlation_matrix(state, s.a_prime, s.b), correlation_matrix(state, s.a_prime, s.b_prime)};
}

inline double chsh_value(const TwoQubitState& state, const MeasurementSettings& s) {
  return chsh_correlations(state, s).bell_form();
}

inline double chsh_value_symmetric(const TwoQubitState& state, const MeasurementSettings& s) {
  return chsh_correlations(state, s).symmetric_form();
}

// Polarizers in the xz-plane that maximize the Bell form for c1|01> + c2|10>:
// a = z, a' = sign(c1 c2) x, cos(beta) = -cos(beta') = (1 + 4|c1c2|^2)^(-1/2),
// and beta' in (pi/2, pi) so both sines are positive.
inline MeasurementSettings gisin_settings(double c1, double c2) {
  if (!std::isfinite(c1) || !std::isfinite(c2) ||
      std::abs(c1 * c1 + c2 * c2 - 1.0) > kCoefficientTolerance)
    throw InvalidArgument("gisin_settings: c1^2 + c2^2 must equal 1");
  const double k = std::abs(c1 * c2);
  if (k <= kEntanglementThreshold)
    throw NoViolationPossible("gisin_settings: separable state (c1*c2 = 0), no violating settings");
  const double inv = 1.0 / std::sqrt(1.0 + 4.0 * k * k);
  const double cos_beta = inv;
  const double sin_beta = 2.0 * k * inv;
  const double side = c1 * c2 > 0.0 ? 1.0 : -1.0;
  return {UnitVector3::z_axis(), UnitVector3::normalized({sin_beta, 0.0, cos_beta}),
          UnitVector3(side, 0.0, 0.0), UnitVector3::normalized({sin_beta, 0.0, -cos_beta})};
}

// 2 (1 + 4 (c1 c2)^2)^(1/2), between 2 and 2 sqrt(2).
inline double max_violation(double c1, double c2) {
  const double k = c1 * c2;
  return 2.0 * std::sqrt(1.0 + 4.0 * k * k);
}

inline const double kTsirelsonBound = 2.0 * std::sqrt(2.0);

}  // namespace belllab
