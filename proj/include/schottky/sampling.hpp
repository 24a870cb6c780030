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

#include <cstdint>
#include <random>
#include <vector>

#include "schottky/circle.hpp"
#include "schottky/group.hpp"
#include "schottky/moebius.hpp"

namespace schottky {

/// Map pairing `from` with `to`: z -> c' + r r' u / (z - c) with |u| = 1.
/// Sends the exterior of `from` onto the interior of `to`.
MoebiusMap pairing_map(const Circle& from, const Circle& to, Complex phase = 1.0);

/// Group from 2g circles (i paired with i + g) and one unimodular phase
/// per pair. Validates the classical domain.
SchottkyGroup classical_group(const std::vector<Circle>& circles, const std::vector<Complex>& phases);

/// Circles at -3, -3i, 3, 3i of radius r; generators z -> 3 + r^2/(z+3)
/// and z -> 3i + r^2/(z+3i).
SchottkyGroup four_circle_group(double radius = 1.0);

/// Same circles with the first pairing twisted so both generators preserve
/// the circle |z|^2 = 9 - r^2 (limit set on a circle).
SchottkyGroup fuchsian_four_circle_group(double radius);

/// Rank one: z -> 3 + 1/(z+3) pairing |z+3| = 1 with |z-3| = 1.
SchottkyGroup rank_one_group();

/// <diag(2, 1/2)>, i.e. z -> 4z, without a pairing.
SchottkyGroup cyclic_diagonal_group();

/// 2g circles on a ring of `ring_radius` with neighbors separated by `gap`,
/// opposite circles paired.
SchottkyGroup ring_group(int rank, double ring_radius, double gap);

/// Random pairwise disjoint circles (radii in [0.3, 1.2]) in a square of
/// half-width 4 + rank, with random unimodular phases.
SchottkyGroup random_classical_group(int rank, std::mt19937_64& rng, double min_gap = 0.1);

/// Random loxodromic generators: fixed points uniform in the disk of radius
/// 5, multiplier modulus log-uniform in [1.5, 20], argument uniform in
/// [-pi/4, pi/4]. No pairing.
std::vector<MoebiusMap> random_fixed_point_generators(int rank, std::mt19937_64& rng);

/// Random Nielsen move (g_i <- g_i g_j^{+-1}, g_j^{+-1} g_i, g_i^{-1}, or a
/// swap) applied in place, with the witness words updated alongside.
void random_nielsen_move(std::vector<MoebiusMap>& gens, std::vector<Word>& witness, std::mt19937_64& rng);

/// Moebius map sending `q` to infinity composed with a random similarity.
MoebiusMap random_conjugator(Complex q, std::mt19937_64& rng);

/// Point at positive distance from every circle, within the bounding box of
/// the configuration enlarged by `pad`.
Complex random_point_outside(const std::vector<Circle>& circles, std::mt19937_64& rng,
                             double clearance = 0.3, double pad = 2.0);

}  // namespace schottky
