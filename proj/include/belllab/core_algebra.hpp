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

// Two-qubit pure states, spin observables and the Schmidt decomposition.
//
// Amplitudes are ordered |00>, |01>, |10>, |11>; the first label is the
// qubit measured by side A.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "belllab/errors.hpp"
#include "belllab/linalg.hpp"

namespace belllab {

inline constexpr double kUnitTolerance = 1e-12;
inline constexpr double kCoefficientTolerance = 1e-9;
// Schmidt coefficients below this count as zero (state is a product state).
inline constexpr double kEntanglementThreshold = 1e-10;

struct Vector3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vector3 operator+(Vector3 a, Vector3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vector3 operator-(Vector3 a, Vector3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vector3 operator*(double s, Vector3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend Vector3 operator-(Vector3 a) { return {-a.x, -a.y, -a.z}; }

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline double dot(Vector3 a, Vector3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vector3 cross(Vector3 a, Vector3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// An analyzer orientation on the unit sphere.
class UnitVector3 {
 public:
  // Throws InvalidArgument unless |(x, y, z)| = 1 within kUnitTolerance.
  UnitVector3(double x, double y, double z) : v_{x, y, z} {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
      throw InvalidArgument("unit vector: non-finite component");
    if (std::abs(v_.norm() - 1.0) > kUnitTolerance)
      throw InvalidArgument("unit vector: norm differs from 1");
  }

  static UnitVector3 x_axis() { return {1.0, 0.0, 0.0}; }
  static UnitVector3 y_axis() { return {0.0, 1.0, 0.0}; }
  static UnitVector3 z_axis() { return {0.0, 0.0, 1.0}; }

  // Rescales a non-zero vector onto the sphere.
  static UnitVector3 normalized(Vector3 v) {
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) throw InvalidArgument("unit vector: cannot normalize");
    return {v.x / n, v.y / n, v.z / n};
  }

  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }
  Vector3 vec() const { return v_; }

  UnitVector3 operator-() const { return {-v_.x, -v_.y, -v_.z}; }

  friend double dot(const UnitVector3& a, const UnitVector3& b) { return dot(a.v_, b.v_); }

 private:
  Vector3 v_;
};

// Spherical angles to a unit vector: (sin t cos p, sin t sin p, cos t).
inline UnitVector3 make_unit_vector(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi))
    throw InvalidArgument("make_unit_vector: non-finite angle");
  const double s = std::sin(theta);
  // normalized() absorbs the last-ulp drift of sin^2 + cos^2.
  return UnitVector3::normalized({s * std::cos(phi), s * std::sin(phi), std::cos(theta)});
}

// Angle between two orientations, in [0, pi].
inline double angle_between(const UnitVector3& a, const UnitVector3& b) {
  return std::atan2(cross(a.vec(), b.vec()).norm(), dot(a, b));
}

class TwoQubitState {
 public:
  using Amplitudes = std::array<Complex, 4>;

  // Throws InvalidArgument unless the squared amplitudes sum to 1 within
  // kUnitTolerance.
  explicit TwoQubitState(const Amplitudes& amplitudes) : amp_(amplitudes) {
    double n2 = 0.0;
    for (const auto& a : amp_) {
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
        throw InvalidArgument("two-qubit state: non-finite amplitude");
      n2 += std::norm(a);
    }
    if (std::abs(n2 - 1.0) > kUnitTolerance)
      throw InvalidArgument("two-qubit state: amplitudes are not normalized");
  }

  // Divides out the norm; throws on the zero vector.
  static TwoQubitState normalized(Amplitudes amplitudes) {
    double n2 = 0.0;
    for (const auto& a : amplitudes) n2 += std::norm(a);
    if (!(n2 > 0.0) || !std::isfinite(n2)) throw InvalidArgument("two-qubit state: cannot normalize");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& a : amplitudes) a *= inv;
    return TwoQubitState(amplitudes);
  }

  static TwoQubitState from_matrix(const Matrix2& m) {
    return normalized({m(0, 0), m(0, 1), m(1, 0), m(1, 1)});
  }

  const Amplitudes& amplitudes() const { return amp_; }
  const Complex& operator[](std::size_t i) const { return amp_[i]; }

  // Row index is the first qubit, column index the second.
  Matrix2 amplitude_matrix() const {
    Matrix2 m;
    m(0, 0) = amp_[0];
    m(0, 1) = amp_[1];
    m(1, 0) = amp_[2];
    m(1, 1) = amp_[3];
    return m;
  }

  // <this|op|this>
  Complex expectation(const Matrix4& op) const {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      Complex row = 0.0;
      for (std::size_t j = 0; j < 4; ++j) row += op(i, j) * amp_[j];
      acc += std::conj(amp_[i]) * row;
    }
    return acc;
  }

  // |<this|other>|, which is 1 iff the states agree up to global phase.
  double overlap(const TwoQubitState& other) const {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < 4; ++i) acc += std::conj(amp_[i]) * other.amp_[i];
    return std::abs(acc);
  }

 private:
  Amplitudes amp_;
};

// Largest amplitude difference after removing the global phase between the
// two states.
inline double distance_up_to_phase(const TwoQubitState& a, const TwoQubitState& b) {
  Complex inner = 0.0;
  for (std::size_t i = 0; i < 4; ++i) inner += std::conj(a[i]) * b[i];
  const Complex phase = std::abs(inner) > 0.0 ? inner / std::abs(inner) : Complex{1.0, 0.0};
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a[i] * phase - b[i]));
  return d;
}

// Hermitian 2x2 operator.
class Observable2 {
 public:
  explicit Observable2(const Matrix2& m) : m_(m) {
    if (!is_hermitian(m_, kUnitTolerance)) throw InvalidArgument("observable: not Hermitian");
  }
  const Matrix2& matrix() const { return m_; }

 private:
  Matrix2 m_;
};

// Hermitian 4x4 operator on the two-qubit space.
class Observable4 {
 public:
  explicit Observable4(const Matrix4& m) : m_(m) {
    if (!is_hermitian(m_, kUnitTolerance)) throw InvalidArgument("observable: not Hermitian");
  }
  const Matrix4& matrix() const { return m_; }

 private:
  Matrix4 m_;
};

inline Matrix2 pauli_x() {
  Matrix2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

inline Matrix2 pauli_y() {
  Matrix2 m;
  m(0, 1) = Complex{0.0, -1.0};
  m(1, 0) = Complex{0.0, 1.0};
  return m;
}

inline Matrix2 pauli_z() {
  Matrix2 m;
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

// n . sigma for a real 3-vector (not necessarily unit).
inline Matrix2 sigma_dot(Vector3 n) {
  Matrix2 m;
  m(0, 0) = n.z;
  m(0, 1) = Complex{n.x, -n.y};
  m(1, 0) = Complex{n.x, n.y};
  m(1, 1) = -n.z;
  return m;
}

inline Observable2 pauli_dot(const UnitVector3& n) { return Observable2(sigma_dot(n.vec())); }

// (a . sigma) (x) (b . sigma)
inline Observable4 tensor_observable(const UnitVector3& a, const UnitVector3& b) {
  return Observable4(kron(sigma_dot(a.vec()), sigma_dot(b.vec())));
}

// |psi> = c1 (a_1 (x) b_1) + c2 (a_2 (x) b_2), where a_k, b_k are the columns
// of basis_a and basis_b. For real states `sign` records the sign of c1*c2 in
// the equivalent canonical form c1|01> + sign*c2|10> (reachable by real local
// rotations); complex phases are absorbed into basis_b and sign is +1.
struct SchmidtForm {
  double c1 = 1.0;
  double c2 = 0.0;
  int sign = 1;
  Matrix2 basis_a = Matrix2::identity();
  Matrix2 basis_b = Matrix2::identity();

  bool entangled() const { return c2 > kEntanglementThreshold; }

  TwoQubitState reconstruct() const {
    Matrix2 m;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        m(i, j) = c1 * basis_a(i, 0) * basis_b(j, 0) + c2 * basis_a(i, 1) * basis_b(j, 1);
    return TwoQubitState::from_matrix(m);
  }
};

namespace detail {

using Column2 = std::array<Complex, 2>;

inline double col_norm(const Column2& v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1])); }

// Scales to unit length and makes the first non-negligible component real
// positive.
inline Column2 canonical_column(Column2 v) {
  const double n = col_norm(v);
  v[0] /= n;
  v[1] /= n;
  const Complex lead = std::abs(v[0]) > 1e-12 ? v[0] : v[1];
  const Complex phase = std::conj(lead) / std::abs(lead);
  v[0] *= phase;
  v[1] *= phase;
  return v;
}

// Unit vector orthogonal to v, phase-canonical.
inline Column2 orthogonal_complement(const Column2& v) {
  return canonical_column({-std::conj(v[1]), std::conj(v[0])});
}

}  // namespace detail

// SVD of the amplitude matrix M = sum_k c_k u_k v_k^dagger, written as
// psi = sum_k c_k u_k (x) conj(v_k).
inline SchmidtForm schmidt_decompose(const TwoQubitState& state) {
  using detail::Column2;
  const Matrix2 m = state.amplitude_matrix();
  const Matrix2 h = m * adjoint(m);

  // Eigenvectors of the Hermitian M M^dagger, largest eigenvalue first.
  const double p = h(0, 0).real();
  const double r = h(1, 1).real();
  const Complex q = h(0, 1);
  const double half_gap = std::sqrt(0.25 * (p - r) * (p - r) + std::norm(q));
  const double lambda1 = 0.5 * (p + r) + half_gap;

  Column2 u1;
  if (half_gap <= 1e-14) {
    u1 = {1.0, 0.0};
  } else {
    const Column2 cand_a{q, lambda1 - p};
    const Column2 cand_b{lambda1 - r, std::conj(q)};
    u1 = detail::canonical_column(detail::col_norm(cand_a) >= detail::col_norm(cand_b) ? cand_a : cand_b);
  }
  const Column2 u2 = detail::orthogonal_complement(u1);

  // M^dagger u1 is parallel to v1 with length c1.
  const Matrix2 md = adjoint(m);
  const Column2 w1{md(0, 0) * u1[0] + md(0, 1) * u1[1], md(1, 0) * u1[0] + md(1, 1) * u1[1]};
  const double c1 = detail::col_norm(w1);
  const Column2 v1{w1[0] / c1, w1[1] / c1};
  Column2 v2 = detail::orthogonal_complement(v1);

  // c2 e^{i phi} = u2^dagger M v2; fold the phase into v2.
  Complex mv2_0 = m(0, 0) * v2[0] + m(0, 1) * v2[1];
  Complex mv2_1 = m(1, 0) * v2[0] + m(1, 1) * v2[1];
  const Complex proj = std::conj(u2[0]) * mv2_0 + std::conj(u2[1]) * mv2_1;
  const double c2_raw = std::abs(proj);
  if (c2_raw > 0.0) {
    // Want u2^dagger M v2' = c2 >= 0 with v2' = v2 * conj(phase).
    const Complex phase = proj / c2_raw;
    v2[0] *= std::conj(phase);
    v2[1] *= std::conj(phase);
  }

  SchmidtForm form;
  const double norm = std::sqrt(c1 * c1 + c2_raw * c2_raw);
  form.c1 = c1 / norm;
  form.c2 = c2_raw / norm;
  form.basis_a(0, 0) = u1[0];
  form.basis_a(1, 0) = u1[1];
  form.basis_a(0, 1) = u2[0];
  form.basis_a(1, 1) = u2[1];
  form.basis_b(0, 0) = std::conj(v1[0]);
  form.basis_b(1, 0) = std::conj(v1[1]);
  form.basis_b(0, 1) = std::conj(v2[0]);
  form.basis_b(1, 1) = std::conj(v2[1]);

  // Sign classification for states that are real up to a global phase.
  form.sign = 1;
  if (form.entangled()) {
    std::size_t lead = 0;
    for (std::size_t i = 1; i < 4; ++i)
      if (std::abs(state[i]) > std::abs(state[lead])) lead = i;
    const Complex unphase = std::conj(state[lead]) / std::abs(state[lead]);
    bool real = true;
    std::array<double, 4> re{};
    for (std::size_t i = 0; i < 4; ++i) {
      const Complex a = state[i] * unphase;
      if (std::abs(a.imag()) > kUnitTolerance) real = false;
      re[i] = a.real();
    }
    if (real) {
      // det M < 0 for c1|01> + c2|10> with c1*c2 > 0.
      const double det = re[0] * re[3] - re[1] * re[2];
      form.sign = det < 0.0 ? 1 : -1;
    }
  }
  return form;
}

enum class SeparablePolicy { kReject, kAllow };

// c1|01> + c2|10>. Signed coefficients are allowed.
inline TwoQubitState canonical_state(double c1, double c2,
                                     SeparablePolicy policy = SeparablePolicy::kReject) {
  if (!std::isfinite(c1) || !std::isfinite(c2))
    throw InvalidArgument("canonical_state: non-finite coefficient");
  if (std::abs(c1 * c1 + c2 * c2 - 1.0) > kCoefficientTolerance)
    throw InvalidArgument("canonical_state: c1^2 + c2^2 must equal 1");
  if (policy == SeparablePolicy::kReject &&
      (std::abs(c1) <= kEntanglementThreshold || std::abs(c2) <= kEntanglementThreshold))
    throw InvalidArgument("canonical_state: c1*c2 = 0 gives a separable state");
  return TwoQubitState::normalized({0.0, c1, c2, 0.0});
}

// Degree of entanglement 2*c1*c2, in [0, 1].
inline double concurrence(const SchmidtForm& form) { return 2.0 * form.c1 * form.c2; }

// Coefficients (c1, c2) with c1 >= c2 >= 0 and 2*c1*c2 = c.
inline std::array<double, 2> coefficients_for_concurrence(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw InvalidArgument("concurrence must lie in [0, 1]");
  const double root = std::sqrt(std::max(0.0, 0.25 - 0.25 * c * c));
  return {std::sqrt(0.5 + root), std::sqrt(0.5 - root)};
}

}  // namespace belllab
