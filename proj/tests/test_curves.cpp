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

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "schottky/curve.hpp"
#include "schottky/dimension.hpp"
#include "schottky/sampling.hpp"

using namespace schottky;

namespace {

double cross2(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

// Star-shaped polygon with vertices at sorted random angles.
PolyCurve random_star(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> n(4, 9);
  std::vector<double> angles(n(rng));
  for (double& a : angles) a = 2.0 * kPi * u(rng);
  std::sort(angles.begin(), angles.end());
  const Complex shift(4.0 * u(rng) - 2.0, 4.0 * u(rng) - 2.0);
  std::vector<Complex> v;
  for (double a : angles) v.push_back(shift + std::polar(0.5 + 2.0 * u(rng), a));
  return PolyCurve::polygon(v);
}

double hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double h = 0.0;
  for (int pass = 0; pass < 2; ++pass) {
    const auto& p = pass == 0 ? a : b;
    const auto& q = pass == 0 ? b : a;
    for (Complex x : p) {
      double best = 1e300;
      for (Complex y : q) best = std::min(best, std::abs(x - y));
      h = std::max(h, best);
    }
  }
  return h;
}

double perimeter(const std::vector<Complex>& p) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[(i + 1) % p.size()] - p[i]);
  return s;
}

// Full coupling-grid DP for every rotation of b.
double brute_cyclic_frechet(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double best = 1e300;
  for (std::size_t s = 0; s < b.size(); ++s) {
    std::vector<Complex> ca = a, cb;
    for (std::size_t j = 0; j <= b.size(); ++j) cb.push_back(b[(s + j) % b.size()]);
    ca.push_back(a[0]);
    const std::size_t n = ca.size(), m = cb.size();
    std::vector<std::vector<double>> f(n, std::vector<double>(m));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        double r = 1e300;
        if (i == 0 && j == 0) r = 0.0;
        if (i > 0) r = std::min(r, f[i - 1][j]);
        if (j > 0) r = std::min(r, f[i][j - 1]);
        if (i > 0 && j > 0) r = std::min(r, f[i - 1][j - 1]);
        f[i][j] = std::max(r, std::abs(ca[i] - cb[j]));
      }
    }
    best = std::min(best, f[n - 1][m - 1]);
  }
  return best;
}

}  // namespace

TEST_CASE("simple curves") {
  CHECK(is_simple(PolyCurve::polygon({0.0, 1.0, Complex(1.0, 1.0), Complex(0.0, 1.0)})));
  CHECK(is_simple(PolyCurve::circle(0.0, 2.0)));
  // Figure eight.
  CHECK_FALSE(is_simple(PolyCurve::polygon({0.0, Complex(1.0, 1.0), Complex(1.0, 0.0), Complex(0.0, 1.0)})));
  CHECK_THROWS_AS(PolyCurve::polygon({0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("pieces") {
  const Piece a = Piece::arc(0.0, 1.0, 1.0, Complex(0.0, 1.0), true);
  CHECK(a.length() == doctest::Approx(kPi / 2));
  CHECK(std::abs(a.point_at(0.5) - std::polar(1.0, kPi / 4)) < 1e-12);
  CHECK(std::abs(a.tangent_at(0.0) - Complex(0.0, 1.0)) < 1e-12);
  const Piece t = Piece::through(0.0, 1.0, 2.0);
  CHECK_FALSE(t.is_arc());
  const Piece m = map_piece(MoebiusMap(0.0, -1.0, 1.0, 0.0), Piece::arc(0.0, 2.0, 2.0, -2.0, true));
  CHECK(m.radius == doctest::Approx(0.5));
  CHECK(intersect(Piece::line(-1.0, 1.0), Piece::line(Complex(0.0, -1.0), Complex(0.0, 1.0))).size() == 1);
}

TEST_CASE("generating curve") {
  const SchottkyGroup G = four_circle_group(1.0);
  const GeneratingCurve zeta = default_generating_curve(G);
  CHECK(zeta.strands.size() == 4);
  CHECK_NOTHROW(validate_generating_curve(G, zeta));
  const auto& circles = G.require_pairing().circles;
  for (const Strand& s : zeta.strands) {
    const Circle& from = circles[s.from];
    const Circle& to = circles[s.to];
    CHECK(std::abs(std::abs(s.start() - from.center) - from.radius) < 1e-12);
    CHECK(std::abs(std::abs(s.end() - to.center) - to.radius) < 1e-12);
    // Meets both circles along a radius.
    const Complex r0 = (s.start() - from.center) / from.radius;
    const Complex r1 = (s.end() - to.center) / to.radius;
    CHECK(std::abs(cross2(r0, s.pieces.front().tangent_at(0.0))) < 1e-9);
    CHECK(std::abs(cross2(r1, s.pieces.back().tangent_at(1.0))) < 1e-9);
  }
  // Endpoints on circle i + g are the images of those on circle i.
  for (const Strand& s : zeta.strands) {
    if (s.from >= 2) continue;
    const Complex img = G.generators()[s.from](s.start()).value();
    const bool matched = std::any_of(zeta.strands.begin(), zeta.strands.end(), [&](const Strand& t) {
      return (t.from == s.from + 2 && std::abs(t.start() - img) < 1e-9) ||
             (t.to == s.from + 2 && std::abs(t.end() - img) < 1e-9);
    });
    CHECK(matched);
  }
}

TEST_CASE("quasi-circle piece count") {
  for (double r : {1.0, 1.9}) {
    const SchottkyGroup G = four_circle_group(r);
    const GeneratingCurve zeta = default_generating_curve(G);
    for (int k = 0; k <= 4; ++k) CHECK(build_quasicircle(G, zeta, k).size() == quasicircle_piece_count(zeta, 2, k));
  }
  const SchottkyGroup one = rank_one_group();
  const GeneratingCurve zeta = default_generating_curve(one);
  CHECK(build_quasicircle(one, zeta, 0).size() == quasicircle_piece_count(zeta, 1, 0));
  CHECK_THROWS_AS(build_quasicircle(one, zeta, -1), std::invalid_argument);
}

TEST_CASE("quasi-circle is simple and invariant") {
  const SchottkyGroup G = four_circle_group(1.0);
  const GeneratingCurve zeta = default_generating_curve(G);
  const int k = 6;
  const PolyCurve q = build_quasicircle(G, zeta, k);
  const double tol = 2.0 * max_cover_radius(G, k);
  CHECK(is_simple(q));
  CHECK(is_invariant(G, q, tol));
  CHECK_FALSE(is_invariant(G, PolyCurve::circle(0.0, 2.0), tol));

  // The image under a group element is again invariant, with a looser
  // tolerance since the map distorts the truncation.
  const MoebiusMap h = G.generators()[0] * G.generators()[1];
  const SchottkyGroup H = G.conjugated(MoebiusMap::identity());
  CHECK(is_invariant(H, q.mapped(h), 8.0 * tol));

  const QuasicircleFlags f = classify_quasicircle(G, q, G.require_pairing());
  CHECK(f.transverse);
  CHECK_FALSE(f.parallel);
  CHECK(f.linear);
}

TEST_CASE("parallel flag") {
  const SchottkyGroup G = four_circle_group(1.0);
  // Half of circle 0 closed by two segments.
  const Piece arc = Piece::arc(-3.0, 1.0, Complex(-3.0, -1.0), Complex(-3.0, 1.0), true);
  const PolyCurve c({arc, Piece::line(Complex(-3.0, 1.0), -5.0), Piece::line(-5.0, Complex(-3.0, -1.0))});
  const QuasicircleFlags f = classify_quasicircle(G, c, G.require_pairing());
  CHECK(f.parallel);
  CHECK_FALSE(f.transverse);
}

TEST_CASE("length estimate") {
  for (double r : {1.0, 1.5}) {
    const SchottkyGroup G = four_circle_group(r);
    const GeneratingCurve zeta = default_generating_curve(G);
    std::vector<double> direct;
    for (int k = 3; k <= 7; ++k) {
      const LengthEstimate e = quasicircle_length_estimate(G, zeta, k);
      CHECK(e.estimate / e.direct >= 0.1);
      CHECK(e.estimate / e.direct <= 10.0);
      direct.push_back(e.direct);
    }
    for (std::size_t i = 2; i < direct.size(); ++i) {
      const double ratio = std::abs(direct[i] - direct[i - 1]) / std::abs(direct[i - 1] - direct[i - 2]);
      CHECK(ratio < 0.9);
    }
  }
}

TEST_CASE("Frechet distance of concentric circles") {
  const PolyCurve a = PolyCurve::circle(0.0, 1.0);
  const PolyCurve b = PolyCurve::circle(0.0, 2.0);
  CHECK(frechet_distance(a, a) == doctest::Approx(0.0));

  // Hausdorff distance bounds the sup term from below and the radial
  // coupling bounds it from above.
  const int n = 2000;
  std::vector<Complex> pa, pb;
  double radial = 0.0;
  for (int i = 0; i < n; ++i) {
    pa.push_back(std::polar(1.0, 2.0 * kPi * i / n));
    pb.push_back(std::polar(2.0, 2.0 * kPi * i / n));
    radial = std::max(radial, std::abs(pa.back() - pb.back()));
  }
  const double lower = hausdorff(pa, pb) + std::abs(perimeter(pa) - perimeter(pb));
  const double upper = radial + std::abs(perimeter(pa) - perimeter(pb));
  CHECK(upper - lower < 1e-9);
  CHECK(std::abs(frechet_distance(a, b) - lower) <= 0.01);
  CHECK(std::abs(frechet_distance(a, b) - (1.0 + 2.0 * kPi)) <= 0.01);
  CHECK(frechet_distance(a, b, {.length_term = false}) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("Frechet metric axioms") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const PolyCurve a = random_star(rng), b = random_star(rng), c = random_star(rng);
    const double ab = frechet_distance(a, b), ba = frechet_distance(b, a);
    const double bc = frechet_distance(b, c), ac = frechet_distance(a, c);
    CHECK(frechet_distance(a, a) <= 1e-9);
    CHECK(ab >= 0.0);
    CHECK(std::abs(ab - ba) <= 1e-9);
    CHECK(ac <= ab + bc + 1e-9);
  }
}

TEST_CASE("cyclic Frechet against all rotations") {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_int_distribution<int> len(3, 40);
  for (int t = 0; t < 200; ++t) {
    std::vector<Complex> a(len(rng)), b(len(rng));
    for (auto& z : a) z = Complex(g(rng), g(rng));
    for (auto& z : b) z = Complex(g(rng), g(rng));
    CHECK(cyclic_discrete_frechet(a, b) == doctest::Approx(brute_cyclic_frechet(a, b)).epsilon(1e-15));
  }
  std::mt19937_64 rng2(19);
  for (int t = 0; t < 5; ++t) {
    const std::vector<Complex> a = random_star(rng2).sample_uniform(120), b = random_star(rng2).sample_uniform(90);
    CHECK(cyclic_discrete_frechet(a, b) == doctest::Approx(brute_cyclic_frechet(a, b)).epsilon(1e-15));
  }
}

TEST_CASE("discrete Frechet") {
  CHECK(discrete_frechet({0.0, 1.0, 2.0}, {0.0, 1.0, 2.0}) == 0.0);
  CHECK(discrete_frechet({0.0, 2.0}, {Complex(0.0, 1.0), Complex(2.0, 1.0)}) == doctest::Approx(1.0));
  // A rotated copy of a closed sequence is at distance zero.
  CHECK(cyclic_discrete_frechet({0.0, 1.0, Complex(1.0, 1.0)}, {1.0, Complex(1.0, 1.0), 0.0}) == doctest::Approx(0.0));
}
