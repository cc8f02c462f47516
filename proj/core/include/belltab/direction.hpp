// Copyright 2026 The belltab authors
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

#ifndef BELLTAB_DIRECTION_HPP
#define BELLTAB_DIRECTION_HPP

#include <cmath>
#include <optional>
#include <utility>

#include "belltab/errors.hpp"
#include "belltab/pauli_string.hpp"

namespace belltab {

/// A measurement orientation: a unit 3-vector on the Bloch sphere. The
/// associated observable is sigma . d = x*X + y*Y + z*Z.
struct Direction {
  double x;
  double y;
  double z;

  static constexpr double kUnitTolerance = 1e-9;

  Direction(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
    double norm2 = x * x + y * y + z * z;
    if (std::abs(norm2 - 1.0) > 3 * kUnitTolerance) {
      throw DomainError("direction is not a unit vector (|v|^2 = " +
                        std::to_string(norm2) + ")");
    }
  }

  /// Direction at `theta` radians in the x-z plane, measured from +z:
  /// (sin theta, 0, cos theta). theta = 0 is the Z axis, pi/2 the X axis.
  /// The fixed plane keeps sweep CSVs reproducible.
  static Direction planar(double theta) {
    return Direction(std::sin(theta), 0.0, std::cos(theta));
  }

  double dot(const Direction &other) const {
    return x * other.x + y * other.y + z * other.z;
  }
};

/// The shared hidden value lambda is also a unit 3-vector.
using HiddenVariable = Direction;

/// Positive angle in [0, pi] between two unit vectors; the dot product is
/// clamped to [-1, 1] against rounding before arccos.
inline double angle_between(const Direction &a, const Direction &b) {
  double d = a.dot(b);
  d = std::fmax(-1.0, std::fmin(1.0, d));
  return std::acos(d);
}

/// If `d` coincides with a signed Pauli axis (within tolerance), returns
/// the axis and its sign; otherwise nullopt.
inline std::optional<std::pair<Pauli, int>> as_pauli_axis(
    const Direction &d, double tol = Direction::kUnitTolerance) {
  auto near = [tol](double value, double target) {
    return std::abs(value - target) <= tol;
  };
  for (int sign : {+1, -1}) {
    if (near(d.x, sign) && near(d.y, 0) && near(d.z, 0)) {
      return std::make_pair(Pauli::X, sign);
    }
    if (near(d.y, sign) && near(d.x, 0) && near(d.z, 0)) {
      return std::make_pair(Pauli::Y, sign);
    }
    if (near(d.z, sign) && near(d.x, 0) && near(d.y, 0)) {
      return std::make_pair(Pauli::Z, sign);
    }
  }
  return std::nullopt;
}

}  // namespace belltab

#endif  // BELLTAB_DIRECTION_HPP
