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

#include <array>
#include <complex>
#include <cstddef>
#include <string>

#include "schottky/circle.hpp"

namespace schottky {

/// Point of the Riemann sphere. Infinity is a tagged value; finite points
/// always carry finite coordinates.
class SpherePoint {
 public:
  SpherePoint() = default;
  SpherePoint(Complex z) : z_(z) {}  // NOLINT: implicit from finite points

  static SpherePoint infinity() {
    SpherePoint p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  /// Coordinates of a finite point. Calling this on infinity is a logic error.
  Complex value() const;

  /// Chordal distance on the unit sphere, bounded by 2; infinity included.
  double chordal_distance(const SpherePoint& other) const;

 private:
  Complex z_{};
  bool infinite_ = false;
};

enum class MapClass { Identity, Parabolic, Elliptic, Loxodromic };

std::string to_string(MapClass c);

/// Element of PSL(2,C) acting by z -> (az+b)/(cz+d). Entries are kept at
/// determinant one; a matrix and its negation denote the same map.
class MoebiusMap {
 public:
  /// Identity.
  MoebiusMap() = default;
  /// Normalizes to determinant one. Throws std::invalid_argument when the
  /// matrix is singular.
  MoebiusMap(Complex a, Complex b, Complex c, Complex d);

  static MoebiusMap identity() { return {}; }
  static MoebiusMap diagonal(Complex lambda) { return {lambda, 0.0, 0.0, 1.0 / lambda}; }
  /// Loxodromic map with given attracting and repelling fixed points and
  /// multiplier k (|k| > 1); the derivative at the attracting point is 1/k.
  static MoebiusMap from_fixed_points(Complex attracting, Complex repelling, Complex multiplier);

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }
  std::array<Complex, 4> entries() const { return {a_, b_, c_, d_}; }

  Complex trace() const { return a_ + d_; }
  Complex determinant() const { return a_ * d_ - b_ * c_; }

  MoebiusMap inverse() const;
  MoebiusMap operator*(const MoebiusMap& rhs) const;  // composition this∘rhs

  SpherePoint operator()(const SpherePoint& z) const;
  SpherePoint operator()(Complex z) const { return (*this)(SpherePoint(z)); }

  /// Pole -d/c; infinity when c = 0.
  SpherePoint pole() const;

  /// Representative with a sign fixed by the first significant entry, so
  /// that projectively equal maps have (nearly) equal entries.
  MoebiusMap canonical() const;

  /// Projective equality: entries agree up to a global sign within `tol`.
  bool projectively_equal(const MoebiusMap& other, double tol = 1e-9) const;

 private:
  struct Raw {};
  MoebiusMap(Raw, Complex a, Complex b, Complex c, Complex d)
      : a_(a), b_(b), c_(c), d_(d) {}
  void renormalize();

  Complex a_{1.0}, b_{0.0}, c_{0.0}, d_{1.0};
};

MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g);
MoebiusMap inverse(const MoebiusMap& f);
SpherePoint apply(const MoebiusMap& f, const SpherePoint& z);

/// |f'(z)| = 1/|cz+d|^2. Throws PoleError at the pole.
double derivative_modulus(const MoebiusMap& f, Complex z);

struct FixedPoints {
  SpherePoint attracting;
  SpherePoint repelling;
  /// False for elliptic maps, where no point attracts.
  bool ordered = true;
};

/// Roots of cz^2 + (d-a)z - b = 0, attracting first for loxodromic maps.
/// Parabolic maps report the double point twice. Throws IdentityError.
FixedPoints fixed_points(const MoebiusMap& f);

MapClass classify(const MoebiusMap& f);

/// Complex multiplier k with |k| >= 1: f is conjugate to z -> k z.
Complex multiplier(const MoebiusMap& f);

/// Center -d/c, radius 1/|c|. Throws CIsZeroError when c = 0.
Circle isometric_circle(const MoebiusMap& f);

/// Hyperbolic distance in upper half-space between the base point (0,0,1)
/// and its image.
double base_displacement(const MoebiusMap& f);

/// Image of a circle, computed from three mapped boundary points. Throws
/// DegenerateImage when the circle passes through the pole or the image
/// radius falls below 1e-14.
Circle image_circle(const MoebiusMap& f, const Circle& circle);

/// Row-major (a, b, c, d) hash of the canonical representative rounded to
/// `quantum`; used for transposition tables.
std::size_t projective_hash(const MoebiusMap& f, double quantum = 1e-7);

}  // namespace schottky
