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

#include "schottky/moebius.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "schottky/errors.hpp"

namespace schottky {

Complex SpherePoint::value() const {
  if (infinite_) throw std::logic_error("value() of the point at infinity");
  return z_;
}

double SpherePoint::chordal_distance(const SpherePoint& other) const {
  if (infinite_ && other.infinite_) return 0.0;
  if (infinite_) return 2.0 / std::sqrt(1.0 + std::norm(other.z_));
  if (other.infinite_) return 2.0 / std::sqrt(1.0 + std::norm(z_));
  return 2.0 * std::abs(z_ - other.z_) /
         (std::sqrt(1.0 + std::norm(z_)) * std::sqrt(1.0 + std::norm(other.z_)));
}

std::string to_string(MapClass c) {
  switch (c) {
    case MapClass::Identity: return "identity";
    case MapClass::Parabolic: return "parabolic";
    case MapClass::Elliptic: return "elliptic";
    case MapClass::Loxodromic: return "loxodromic";
  }
  return "unknown";
}

MoebiusMap::MoebiusMap(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {
  renormalize();
}

void MoebiusMap::renormalize() {
  const Complex det = a_ * d_ - b_ * c_;
  const double scale = std::max({std::norm(a_), std::norm(b_), std::norm(c_), std::norm(d_)});
  if (!(std::abs(det) > 1e-300) || std::abs(det) <= 1e-15 * scale || !std::isfinite(scale))
    throw std::invalid_argument("singular or non-finite Moebius matrix");
  const Complex s = std::sqrt(det);
  a_ /= s;
  b_ /= s;
  c_ /= s;
  d_ /= s;
}

MoebiusMap MoebiusMap::from_fixed_points(Complex attracting, Complex repelling, Complex k) {
  if (std::abs(attracting - repelling) == 0.0)
    throw std::invalid_argument("fixed points must be distinct");
  if (!(std::abs(k) > 1.0)) throw std::invalid_argument("multiplier must satisfy |k| > 1");
  // T(z) = (z - attracting)/(z - repelling) sends the fixed points to 0, inf;
  // the map is T^{-1}(T(z)/k).
  const MoebiusMap t(1.0, -attracting, 1.0, -repelling);
  const Complex lambda = std::sqrt(k);
  const MoebiusMap scale(1.0 / lambda, 0.0, 0.0, lambda);
  return t.inverse() * scale * t;
}

MoebiusMap MoebiusMap::inverse() const { return MoebiusMap(Raw{}, d_, -b_, -c_, a_); }

MoebiusMap MoebiusMap::operator*(const MoebiusMap& r) const {
  MoebiusMap m(Raw{}, a_ * r.a_ + b_ * r.c_, a_ * r.b_ + b_ * r.d_, c_ * r.a_ + d_ * r.c_,
               c_ * r.b_ + d_ * r.d_);
  // Both factors have determinant 1; recomputing it from large entries
  // would only add cancellation error.
  if (!std::isfinite(std::abs(m.a_) + std::abs(m.b_) + std::abs(m.c_) + std::abs(m.d_)))
    throw std::invalid_argument("singular or non-finite Moebius matrix");
  return m;
}

SpherePoint MoebiusMap::operator()(const SpherePoint& p) const {
  if (p.is_infinite()) {
    if (c_ == Complex(0.0)) return SpherePoint::infinity();
    return SpherePoint(a_ / c_);
  }
  const Complex z = p.value();
  const Complex den = c_ * z + d_;
  if (den == Complex(0.0)) return SpherePoint::infinity();
  const Complex w = (a_ * z + b_) / den;
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return SpherePoint::infinity();
  return SpherePoint(w);
}

SpherePoint MoebiusMap::pole() const {
  if (c_ == Complex(0.0)) return SpherePoint::infinity();
  return SpherePoint(-d_ / c_);
}

MoebiusMap MoebiusMap::canonical() const {
  for (const Complex& e : {a_, b_, c_, d_}) {
    if (std::abs(e) > 1e-9) {
      const bool flip = e.real() < -1e-12 || (std::abs(e.real()) <= 1e-12 && e.imag() < 0.0);
      if (flip) return MoebiusMap(Raw{}, -a_, -b_, -c_, -d_);
      break;
    }
  }
  return *this;
}

bool MoebiusMap::projectively_equal(const MoebiusMap& o, double tol) const {
  auto close = [&](double sign) {
    return std::abs(a_ - sign * o.a_) <= tol && std::abs(b_ - sign * o.b_) <= tol &&
           std::abs(c_ - sign * o.c_) <= tol && std::abs(d_ - sign * o.d_) <= tol;
  };
  return close(1.0) || close(-1.0);
}

MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g) { return f * g; }
MoebiusMap inverse(const MoebiusMap& f) { return f.inverse(); }
SpherePoint apply(const MoebiusMap& f, const SpherePoint& z) { return f(z); }

double derivative_modulus(const MoebiusMap& f, Complex z) {
  const double den = std::norm(f.c() * z + f.d());
  if (den == 0.0) throw PoleError("derivative requested at the pole");
  return 1.0 / den;
}

MapClass classify(const MoebiusMap& f) {
  if (f.projectively_equal(MoebiusMap::identity(), 1e-9)) return MapClass::Identity;
  const Complex tr2 = f.trace() * f.trace();
  if (std::abs(tr2 - 4.0) < 1e-9) return MapClass::Parabolic;
  if (std::abs(tr2.imag()) < 1e-9 && tr2.real() >= 0.0 && tr2.real() < 4.0)
    return MapClass::Elliptic;
  return MapClass::Loxodromic;
}

namespace {

// Eigenvalue of largest modulus of the determinant-one matrix.
Complex dominant_eigenvalue(const MoebiusMap& f) {
  const Complex tr = f.trace();
  const Complex root = std::sqrt(tr * tr - 4.0);
  const Complex l1 = 0.5 * (tr + root);
  const Complex l2 = 0.5 * (tr - root);
  return std::abs(l1) >= std::abs(l2) ? l1 : l2;
}

// Fixed point attached to eigenvalue lambda: z = (lambda - d)/c = b/(lambda - a),
// choosing the better conditioned quotient.
SpherePoint eigen_fixed_point(const MoebiusMap& f, Complex lambda) {
  const Complex den1 = f.c();
  const Complex den2 = lambda - f.a();
  if (std::abs(den1) >= std::abs(den2)) {
    if (den1 == Complex(0.0)) return SpherePoint::infinity();
    return SpherePoint((lambda - f.d()) / den1);
  }
  if (den2 == Complex(0.0)) return SpherePoint::infinity();
  return SpherePoint(f.b() / den2);
}

}  // namespace

FixedPoints fixed_points(const MoebiusMap& f) {
  const MapClass cls = classify(f);
  if (cls == MapClass::Identity) throw IdentityError("identity has no isolated fixed points");
  if (cls == MapClass::Parabolic) {
    const Complex lambda = 0.5 * f.trace();
    const SpherePoint p = eigen_fixed_point(f, lambda);
    return {p, p, true};
  }
  const Complex big = dominant_eigenvalue(f);
  const Complex small = 1.0 / big;
  FixedPoints fp{eigen_fixed_point(f, big), eigen_fixed_point(f, small), cls != MapClass::Elliptic};
  return fp;
}

Complex multiplier(const MoebiusMap& f) {
  const Complex lambda = dominant_eigenvalue(f);
  return lambda * lambda;
}

Circle isometric_circle(const MoebiusMap& f) {
  if (std::abs(f.c()) == 0.0) throw CIsZeroError("map fixes infinity; no isometric circle");
  return Circle(-f.d() / f.c(), 1.0 / std::abs(f.c()));
}

double base_displacement(const MoebiusMap& f) {
  const double n2 = std::norm(f.a()) + std::norm(f.b()) + std::norm(f.c()) + std::norm(f.d());
  return std::acosh(std::max(1.0, 0.5 * n2));
}

Circle image_circle(const MoebiusMap& f, const Circle& circle) {
  const SpherePoint pole = f.pole();
  if (pole.is_finite() &&
      std::abs(std::abs(pole.value() - circle.center) - circle.radius) <= 1e-12 * circle.radius)
    throw DegenerateImage("circle passes through the pole; image is a line");
  std::array<Complex, 3> pts;
  for (int k = 0; k < 3; ++k) {
    const SpherePoint w = f(circle.point_at(2.0 * kPi * k / 3.0));
    if (w.is_infinite()) throw DegenerateImage("boundary point mapped to infinity");
    pts[k] = w.value();
  }
  const auto img = circle_through(pts[0], pts[1], pts[2]);
  if (!img) throw DegenerateImage("image points are collinear");
  if (img->radius < 1e-14) throw DegenerateImage("image radius underflows 1e-14");
  return *img;
}

std::size_t projective_hash(const MoebiusMap& f, double quantum) {
  const MoebiusMap m = f.canonical();
  std::size_t h = 0;
  for (const Complex& e : m.entries()) {
    for (double v : {e.real(), e.imag()}) {
      const double scaled = v / quantum;
      const auto q = std::abs(scaled) < 1e18 ? static_cast<long long>(std::llround(scaled))
                                             : static_cast<long long>(std::ilogb(v)) * 1000003LL;
      h ^= std::hash<long long>{}(q) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
  }
  return h;
}

}  // namespace schottky
