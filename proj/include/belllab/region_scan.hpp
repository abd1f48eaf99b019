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

// Two-angle families of analyzer settings and grid scans of the region where
// the Bell functional exceeds 2.

#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "belllab/chsh_quantum.hpp"
#include "belllab/core_algebra.hpp"
#include "belllab/errors.hpp"

namespace belllab {

// Plane that holds all four analyzers. In every plane a . a' = 0 = b . b'.
enum class Plane { kXZ, kXY, kYZ };

inline std::string_view plane_name(Plane p) {
  switch (p) {
    case Plane::kXZ: return "xz";
    case Plane::kXY: return "xy";
    case Plane::kYZ: return "yz";
  }
  return "?";
}

inline Plane plane_from_name(std::string_view s) {
  if (s == "xz" || s == "XZ") return Plane::kXZ;
  if (s == "xy" || s == "XY") return Plane::kXY;
  if (s == "yz" || s == "YZ") return Plane::kYZ;
  throw InvalidArgument("unknown plane: " + std::string(s));
}

// xz / yz: angle1, angle2 are polar angles of a and b; a', b' sit 90 degrees
// further along. xy: angle1, angle2 are azimuths.
inline MeasurementSettings scenario_settings(Plane plane, double angle1, double angle2) {
  const double s1 = std::sin(angle1), c1 = std::cos(angle1);
  const double s2 = std::sin(angle2), c2 = std::cos(angle2);
  switch (plane) {
    case Plane::kXZ:
      return {UnitVector3(s1, 0.0, c1), UnitVector3(s2, 0.0, c2), UnitVector3(c1, 0.0, -s1),
              UnitVector3(c2, 0.0, -s2)};
    case Plane::kXY:
      return {UnitVector3(c1, s1, 0.0), UnitVector3(c2, s2, 0.0), UnitVector3(-s1, c1, 0.0),
              UnitVector3(-s2, c2, 0.0)};
    case Plane::kYZ:
      return {UnitVector3(0.0, s1, c1), UnitVector3(0.0, s2, c2), UnitVector3(0.0, c1, -s1),
              UnitVector3(0.0, c2, -s2)};
  }
  throw InvalidArgument("scenario_settings: invalid plane");
}

// Closed-form Bell functional for 2 c1 c2 = sign_case (+1 or -1).
//   xz, yz, +1:  |cos s + sin s| + cos s + sin s,      s = angle1 + angle2
//   xz, yz, -1:  |cos d - sin d| - (cos d - sin d),    d = angle1 - angle2
//   xy, +1:      |cos x - sin x| + cos x - sin x,      x = angle1 - angle2
//   xy, -1:      |cos x - sin x| - (cos x - sin x)
inline double scenario_f(Plane plane, int sign_case, double angle1, double angle2) {
  if (sign_case != 1 && sign_case != -1) throw InvalidArgument("scenario_f: sign_case must be +1 or -1");
  if (plane != Plane::kXY && sign_case == 1) {
    const double t = std::cos(angle1 + angle2) + std::sin(angle1 + angle2);
    return std::abs(t) + t;
  }
  const double x = angle1 - angle2;
  const double t = std::cos(x) - std::sin(x);
  return std::abs(t) + (sign_case == 1 ? t : -t);
}

// |P(a,b) - P(a,b')| + P(a',b) + P(a',b') for c1|01> + c2|10>.
inline double bell_lhs_closed(double c1, double c2, const MeasurementSettings& s) {
  const double ab = correlation_closed(c1, c2, s.a, s.b);
  const double abp = correlation_closed(c1, c2, s.a, s.b_prime);
  const double apb = correlation_closed(c1, c2, s.a_prime, s.b);
  const double apbp = correlation_closed(c1, c2, s.a_prime, s.b_prime);
  return std::abs(ab - abp) + apb + apbp;
}

// Values within this distance of the threshold count as equality, not
// violation.
inline constexpr double kBoundaryTolerance = 1e-12;

struct ViolationGrid {
  Plane plane = Plane::kXY;
  double c1 = 0.0;
  double c2 = 0.0;
  std::vector<double> axis1;
  std::vector<double> axis2;
  // Row-major, row index along axis1.
  std::vector<double> values;
  // C(psi) * scenario_f with the sign case of c1*c2.
  std::vector<double> scaled_f;
  double threshold = 2.0;
  double violating_fraction = 0.0;

  std::size_t rows() const { return axis1.size(); }
  std::size_t cols() const { return axis2.size(); }
  double value(std::size_t i, std::size_t j) const { return values[i * axis2.size() + j]; }
  bool violated(std::size_t i, std::size_t j) const { return value(i, j) > threshold + kBoundaryTolerance; }
};

// Cell-centred angles (k + 1/2) 2 pi / n, k = 0..n-1.
inline std::vector<double> cell_centres(std::size_t n) {
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  std::vector<double> axis(n);
  for (std::size_t k = 0; k < n; ++k) axis[k] = (static_cast<double>(k) + 0.5) * kTwoPi / static_cast<double>(n);
  return axis;
}

// Evaluates the exact Bell functional over a grid_n x grid_n grid of
// scenario angles for c1|01> + c2|10>.
inline ViolationGrid scan_region(Plane plane, double c1, double c2, std::size_t grid_n = 512) {
  if (!std::isfinite(c1) || !std::isfinite(c2) || std::abs(c1 * c1 + c2 * c2 - 1.0) > kCoefficientTolerance)
    throw InvalidArgument("scan_region: c1^2 + c2^2 must equal 1");
  if (grid_n < 2) throw InvalidArgument("scan_region: grid_n must be at least 2");

  ViolationGrid g;
  g.plane = plane;
  g.c1 = c1;
  g.c2 = c2;
  g.axis1 = cell_centres(grid_n);
  g.axis2 = g.axis1;
  g.values.resize(grid_n * grid_n);
  g.scaled_f.resize(grid_n * grid_n);

  const double conc = 2.0 * std::abs(c1 * c2);
  const int sign_case = c1 * c2 < 0.0 ? -1 : 1;
  std::size_t violating = 0;
  for (std::size_t i = 0; i < grid_n; ++i) {
    for (std::size_t j = 0; j < grid_n; ++j) {
      const std::size_t k = i * grid_n + j;
      g.values[k] = bell_lhs_closed(c1, c2, scenario_settings(plane, g.axis1[i], g.axis2[j]));
      g.scaled_f[k] = conc * scenario_f(plane, sign_case, g.axis1[i], g.axis2[j]);
      if (g.values[k] > g.threshold + kBoundaryTolerance) ++violating;
    }
  }
  g.violating_fraction = static_cast<double>(violating) / static_cast<double>(grid_n * grid_n);
  return g;
}

}  // namespace belllab
