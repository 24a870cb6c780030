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

#include <cmath>
#include <random>

#include "doctest.h"
#include "schottky/errors.hpp"
#include "schottky/moebius.hpp"
#include "schottky/sampling.hpp"

using namespace schottky;

namespace {

const MoebiusMap kFlip(0.0, -1.0, 1.0, 0.0);  // z -> -1/z

MoebiusMap random_map(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    const Complex a(n(rng), n(rng)), b(n(rng), n(rng)), c(n(rng), n(rng)), d(n(rng), n(rng));
    if (std::abs(a * d - b * c) > 0.1) return MoebiusMap(a, b, c, d);
  }
}

}  // namespace

TEST_CASE("normalization keeps determinant one") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const MoebiusMap m = random_map(rng);
    CHECK(std::abs(m.determinant() - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(MoebiusMap(1.0, 2.0, 2.0, 4.0), std::invalid_argument);
}

TEST_CASE("negated matrix is the same map") {
  const MoebiusMap m(2.0, 1.0, 1.0, 1.0);
  const MoebiusMap neg(-m.a(), -m.b(), -m.c(), -m.d());
  CHECK(m.projectively_equal(neg));
  CHECK(projective_hash(m) == projective_hash(neg));
}

TEST_CASE("composition") {
  const MoebiusMap g(1.0, 2.0, 3.0, 7.0);
  CHECK(compose(MoebiusMap::identity(), g).projectively_equal(g));
  CHECK(compose(MoebiusMap::diagonal(2.0), MoebiusMap::diagonal(2.0)).projectively_equal(MoebiusMap::diagonal(4.0)));
  CHECK(compose(g, inverse(g)).projectively_equal(MoebiusMap::identity()));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const MoebiusMap a = random_map(rng), b = random_map(rng), c = random_map(rng);
    CHECK(((a * b) * c).projectively_equal(a * (b * c), 1e-12 * 100));
  }
}

TEST_CASE("application") {
  CHECK(schottky::apply(MoebiusMap::identity(), SpherePoint(Complex(0.3, -2.0))).value() == Complex(0.3, -2.0));
  CHECK(std::abs(kFlip(2.0).value() - Complex(-0.5)) < 1e-15);
  CHECK(kFlip(0.0).is_infinite());
  CHECK(std::abs(kFlip(SpherePoint::infinity()).value()) < 1e-15);
  CHECK(MoebiusMap::diagonal(2.0)(SpherePoint::infinity()).is_infinite());
}

TEST_CASE("derivative modulus") {
  CHECK(derivative_modulus(MoebiusMap::identity(), Complex(4.0, 1.0)) == doctest::Approx(1.0));
  CHECK(derivative_modulus(kFlip, 2.0) == doctest::Approx(0.25));
  CHECK_THROWS_AS(derivative_modulus(kFlip, 0.0), PoleError);

  // Chain rule against a difference quotient of the composition.
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n(0.0, 1.0);
  int checked = 0;
  while (checked < 200) {
    const MoebiusMap f = random_map(rng), g = random_map(rng);
    const Complex z(n(rng), n(rng));
    const SpherePoint gz = g(z);
    if (gz.is_infinite() || std::abs(z - g.pole().value()) < 0.1 || std::abs(gz.value() - f.pole().value()) < 0.1)
      continue;
    const double chain = derivative_modulus(f, gz.value()) * derivative_modulus(g, z);
    const double h = 1e-6;
    const double fd = std::abs(f(g(z + h).value()).value() - f(gz).value()) / h;
    CHECK(std::abs(chain - fd) <= 1e-4 * chain);
    CHECK(std::abs(derivative_modulus(f * g, z) - chain) <= 1e-10 * chain);
    ++checked;
  }
}

TEST_CASE("fixed points") {
  const FixedPoints d = fixed_points(MoebiusMap::diagonal(2.0));
  CHECK(d.attracting.is_infinite());
  CHECK(std::abs(d.repelling.value()) < 1e-15);
  const FixedPoints p = fixed_points(MoebiusMap(1.0, 1.0, 0.0, 1.0));
  CHECK(p.attracting.is_infinite());
  CHECK(p.repelling.is_infinite());
  CHECK_THROWS_AS(fixed_points(MoebiusMap::identity()), IdentityError);

  // Iterating a loxodromic map from a generic point lands on the attractor.
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const MoebiusMap f = random_map(rng);
    if (classify(f) != MapClass::Loxodromic || std::abs(multiplier(f)) < 1.5) continue;
    const FixedPoints fp = fixed_points(f);
    SpherePoint z = Complex(0.123, 0.456);
    for (int k = 0; k < 50; ++k) z = f(z);
    CHECK(z.chordal_distance(fp.attracting) < 1e-6);
  }
}

TEST_CASE("classification") {
  CHECK(classify(MoebiusMap::identity()) == MapClass::Identity);
  CHECK(classify(MoebiusMap(1.0, 1.0, 0.0, 1.0)) == MapClass::Parabolic);
  CHECK(classify(MoebiusMap::diagonal(2.0)) == MapClass::Loxodromic);
  CHECK(classify(MoebiusMap::diagonal(std::polar(1.0, 0.7))) == MapClass::Elliptic);
}

TEST_CASE("isometric circle") {
  const Circle c = isometric_circle(kFlip);
  CHECK(std::abs(c.center) < 1e-15);
  CHECK(c.radius == doctest::Approx(1.0));

  const MoebiusMap f(3.0, -8.0, 1.0, -3.0);
  const Circle iso = isometric_circle(f);
  CHECK(std::abs(iso.center - Complex(3.0)) < 1e-12);
  CHECK(iso.radius == doctest::Approx(1.0));
  for (int k = 0; k < 12; ++k) CHECK(derivative_modulus(f, iso.point_at(k * 0.5)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(isometric_circle(MoebiusMap::diagonal(2.0)), CIsZeroError);
}

TEST_CASE("base displacement") {
  CHECK(base_displacement(MoebiusMap::identity()) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(base_displacement(MoebiusMap::diagonal(2.0)) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));

  // d(f^n)/n tends to the translation length log|k| for f and its conjugates.
  const MoebiusMap f = MoebiusMap::from_fixed_points(Complex(1.0, 2.0), Complex(-3.0, 0.5), Complex(4.0, 1.0));
  const MoebiusMap u(1.0, 2.0, -1.0, 3.0);
  const double ell = std::log(std::abs(multiplier(f)));
  for (const MoebiusMap& g : {f, u * f * u.inverse()}) {
    MoebiusMap p = g;
    for (int n = 1; n < 64; ++n) p = p * g;
    CHECK(std::abs(base_displacement(p) / 64.0 - ell) < 0.1);
  }
}

TEST_CASE("image circle matches three mapped points") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  for (int i = 0; i < 50; ++i) {
    const MoebiusMap f = random_map(rng);
    const Circle c(Complex(5.0, -1.0), 0.5);
    if (std::abs(std::abs(f.pole().value() - c.center) - c.radius) < 0.05) continue;
    const Circle img = image_circle(f, c);
    for (int k = 0; k < 5; ++k) {
      const Complex w = f(c.point_at(u(rng))).value();
      CHECK(std::abs(std::abs(w - img.center) - img.radius) < 1e-9 * std::max(1.0, img.radius));
    }
  }
}

TEST_CASE("pairing map sends the exterior into the target disk") {
  const Circle from(Complex(-3.0), 1.0), to(Complex(3.0), 1.0);
  const MoebiusMap m = pairing_map(from, to);
  const Circle img = image_circle(m, from);
  CHECK(std::abs(img.center - to.center) < 1e-12);
  CHECK(img.radius == doctest::Approx(1.0));
  CHECK(to.contains(m(Complex(10.0, 4.0)).value()));
}
