// Copyright 2026 The schottky-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <optional>
#include <variant>

namespace schottky {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Round circle in the plane. Radius is finite and strictly positive; a
/// circle that has shrunk to a point is a DegeneratePoint instead.
struct Circle {
  Complex center;
  double radius = 1.0;

  Circle() = default;
  Circle(Complex c, double r);

  bool contains(Complex z) const { return std::abs(z - center) < radius; }
  Complex point_at(double angle) const { return center + std::polar(radius, angle); }
};

struct DegeneratePoint {
  Complex point;
};

/// Entry of a fundamental-domain configuration that may have degenerated.
using DomainEntry = std::variant<Circle, DegeneratePoint>;

/// Circle through three points, or nullopt when they are (numerically)
/// collinear.
std::optional<Circle> circle_through(Complex p, Complex q, Complex r);

/// Signed gap between two closed disks: distance between centers minus the
/// radii. Negative when the disks overlap.
double disk_gap(const Circle& a, const Circle& b);

/// Distance between two circles viewed as curves. Zero when they cross,
/// otherwise the external or internal separation.
double circle_separation(const Circle& a, const Circle& b);

/// True when `inner` lies inside `outer` with slack `tol`.
bool circle_inside(const Circle& inner, const Circle& outer, double tol = 0.0);

}  // namespace schottky
