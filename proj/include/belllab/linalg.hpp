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

// Fixed-size dense complex matrices for one- and two-qubit operators.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace belllab {

using Complex = std::complex<double>;

template <std::size_t N>
struct Matrix {
  std::array<Complex, N * N> data{};

  static constexpr std::size_t size() { return N; }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  Complex& operator()(std::size_t row, std::size_t col) { return data[row * N + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return data[row * N + col]; }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data[i] += o.data[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data[i] -= o.data[i];
    return *this;
  }
  Matrix& operator*=(Complex s) {
    for (auto& v : data) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
};

using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;

template <std::size_t N>
Matrix<N> adjoint(const Matrix<N>& m) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

template <std::size_t N>
Complex trace(const Matrix<N>& m) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < N; ++i) t += m(i, i);
  return t;
}

// Largest entrywise modulus of a - b.
template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < N * N; ++i) d = std::max(d, std::abs(a.data[i] - b.data[i]));
  return d;
}

template <std::size_t N>
bool is_hermitian(const Matrix<N>& m, double tol) {
  return max_abs_diff(m, adjoint(m)) <= tol;
}

template <std::size_t N>
bool is_unitary(const Matrix<N>& m, double tol) {
  return max_abs_diff(adjoint(m) * m, Matrix<N>::identity()) <= tol;
}

// Kronecker product; row index of the result is (row_a * 2 + row_b).
inline Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) r(i * 2 + k, j * 2 + l) = a(i, j) * b(k, l);
  return r;
}

}  // namespace belllab
