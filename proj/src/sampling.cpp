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

#include "schottky/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace schottky {

MoebiusMap pairing_map(const Circle& from, const Circle& to, Complex phase) {
  const Complex c = from.center;
  const Complex cp = to.center;
  const Complex k = from.radius * to.radius * phase;
  return MoebiusMap(cp, k - cp * c, 1.0, -c);
}

SchottkyGroup classical_group(const std::vector<Circle>& circles, const std::vector<Complex>& phases) {
  const std::size_t g = circles.size() / 2;
  if (circles.size() != 2 * g || phases.size() != g)
    throw std::invalid_argument("need 2g circles and g phases");
  std::vector<MoebiusMap> gens;
  for (std::size_t i = 0; i < g; ++i) gens.push_back(pairing_map(circles[i], circles[i + g], phases[i]));
  return SchottkyGroup(std::move(gens), CirclePairing{circles});
}

SchottkyGroup four_circle_group(double r) {
  const Complex I(0.0, 1.0);
  return classical_group({Circle(-3.0, r), Circle(-3.0 * I, r), Circle(3.0, r), Circle(3.0 * I, r)},
                         {1.0, 1.0});
}

SchottkyGroup fuchsian_four_circle_group(double r) {
  const Complex I(0.0, 1.0);
  return classical_group({Circle(-3.0, r), Circle(-3.0 * I, r), Circle(3.0, r), Circle(3.0 * I, r)},
                         {-1.0, 1.0});
}

SchottkyGroup rank_one_group() { return classical_group({Circle(-3.0, 1.0), Circle(3.0, 1.0)}, {1.0}); }

SchottkyGroup cyclic_diagonal_group() { return SchottkyGroup({MoebiusMap::diagonal(2.0)}); }

SchottkyGroup ring_group(int rank, double ring_radius, double gap) {
  const int n = 2 * rank;
  const double side = 2.0 * ring_radius * std::sin(kPi / n);
  const double r = 0.5 * (side - gap);
  if (!(r > 0.0)) throw std::invalid_argument("gap too large for ring");
  std::vector<Circle> circles;
  for (int k = 0; k < n; ++k) circles.emplace_back(std::polar(ring_radius, 2.0 * kPi * k / n), r);
  return classical_group(circles, std::vector<Complex>(rank, 1.0));
}

SchottkyGroup random_classical_group(int rank, std::mt19937_64& rng, double min_gap) {
  const double half = 4.0 + rank;
  std::uniform_real_distribution<double> pos(-half, half);
  std::uniform_real_distribution<double> rad(0.3, 1.2);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (;;) {
    std::vector<Circle> circles;
    int attempts = 0;
    while (static_cast<int>(circles.size()) < 2 * rank && attempts < 10000) {
      ++attempts;
      const Circle c(Complex(pos(rng), pos(rng)), rad(rng));
      bool ok = true;
      for (const auto& o : circles) ok = ok && disk_gap(c, o) > min_gap;
      if (ok) circles.push_back(c);
    }
    if (static_cast<int>(circles.size()) < 2 * rank) continue;
    std::vector<Complex> phases;
    for (int i = 0; i < rank; ++i) phases.push_back(std::polar(1.0, ang(rng)));
    return classical_group(circles, phases);
  }
}

std::vector<MoebiusMap> random_fixed_point_generators(int rank, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto point_in_disk = [&] {
    return std::polar(5.0 * std::sqrt(unit(rng)), 2.0 * kPi * unit(rng));
  };
  std::vector<MoebiusMap> gens;
  for (int i = 0; i < rank; ++i) {
    const Complex attracting = point_in_disk();
    const Complex repelling = point_in_disk();
    const double modulus = std::exp(std::log(1.5) + unit(rng) * (std::log(20.0) - std::log(1.5)));
    const double arg = (unit(rng) * 2.0 - 1.0) * kPi / 4.0;
    gens.push_back(MoebiusMap::from_fixed_points(attracting, repelling, std::polar(modulus, arg)));
  }
  return gens;
}

void random_nielsen_move(std::vector<MoebiusMap>& gens, std::vector<Word>& witness, std::mt19937_64& rng) {
  const int g = static_cast<int>(gens.size());
  std::uniform_int_distribution<int> pick(0, g - 1);
  std::uniform_int_distribution<int> kind_dist(0, g > 1 ? 3 : 1);
  const int kind = kind_dist(rng);
  const int i = pick(rng);
  // Witness words are expressed in the original generators; letters of the
  // enclosing rank are the same g.
  auto winv = [&](const Word& w) { return inverse(w, g); };
  if (kind <= 1 && g == 1) {
    gens[0] = gens[0].inverse();
    witness[0] = winv(witness[0]);
    return;
  }
  if (kind == 0 || kind == 1) {
    int j = pick(rng);
    while (j == i) j = pick(rng);
    const bool invert = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    const MoebiusMap other = invert ? gens[j].inverse() : gens[j];
    const Word other_w = invert ? winv(witness[j]) : witness[j];
    if (kind == 0) {
      gens[i] = gens[i] * other;
      witness[i] = multiply(witness[i], other_w, g);
    } else {
      gens[i] = other * gens[i];
      witness[i] = multiply(other_w, witness[i], g);
    }
  } else if (kind == 2) {
    gens[i] = gens[i].inverse();
    witness[i] = winv(witness[i]);
  } else {
    int j = pick(rng);
    while (j == i) j = pick(rng);
    std::swap(gens[i], gens[j]);
    std::swap(witness[i], witness[j]);
  }
}

MoebiusMap random_conjugator(Complex q, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Complex rot = std::polar(0.5 + unit(rng) * 4.0, 2.0 * kPi * unit(rng));
  const Complex shift(unit(rng) * 4.0 - 2.0, unit(rng) * 4.0 - 2.0);
  // z -> rot/(z - q) + shift
  return MoebiusMap(shift, rot - shift * q, 1.0, -q);
}

Complex random_point_outside(const std::vector<Circle>& circles, std::mt19937_64& rng, double clearance,
                             double pad) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& c : circles) {
    xmin = std::min(xmin, c.center.real() - c.radius);
    xmax = std::max(xmax, c.center.real() + c.radius);
    ymin = std::min(ymin, c.center.imag() - c.radius);
    ymax = std::max(ymax, c.center.imag() + c.radius);
  }
  std::uniform_real_distribution<double> ux(xmin - pad, xmax + pad), uy(ymin - pad, ymax + pad);
  for (;;) {
    const Complex q(ux(rng), uy(rng));
    bool ok = true;
    for (const auto& c : circles) ok = ok && std::abs(q - c.center) > c.radius + clearance;
    if (ok) return q;
  }
}

}  // namespace schottky
