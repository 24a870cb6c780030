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

#include "schottky/circle.hpp"

#include <cmath>
#include <stdexcept>

namespace schottky {

Circle::Circle(Complex c, double r) : center(c), radius(r) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::invalid_argument("circle radius must be finite and positive");
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
    throw std::invalid_argument("circle center must be finite");
}

std::optional<Circle> circle_through(Complex p, Complex q, Complex r) {
  // Work relative to p so that tiny circles far from the origin keep their
  // relative precision.
  const Complex b = q - p;
  const Complex c = r - p;
  const double cross = b.real() * c.imag() - b.imag() * c.real();
  const double scale = std::max({std::norm(b), std::norm(c), std::norm(q - r)});
  if (scale == 0.0 || std::abs(cross) <= 1e-14 * scale) return std::nullopt;
  const double bb = std::norm(b);
  const double cc = std::norm(c);
  const double ux = (c.imag() * bb - b.imag() * cc) / (2.0 * cross);
  const double uy = (b.real() * cc - c.real() * bb) / (2.0 * cross);
  const Complex u(ux, uy);
  const double radius = std::abs(u);
  if (!(radius > 0.0) || !std::isfinite(radius)) return std::nullopt;
  return Circle(p + u, radius);
}

double disk_gap(const Circle& a, const Circle& b) {
  return std::abs(a.center - b.center) - a.radius - b.radius;
}

double circle_separation(const Circle& a, const Circle& b) {
  const double d = std::abs(a.center - b.center);
  if (d >= a.radius + b.radius) return d - a.radius - b.radius;
  const double inner = std::abs(a.radius - b.radius);
  if (d <= inner) return inner - d;
  return 0.0;
}

bool circle_inside(const Circle& inner, const Circle& outer, double tol) {
  return std::abs(inner.center - outer.center) + inner.radius <= outer.radius + tol;
}

}  // namespace schottky
