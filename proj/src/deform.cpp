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
#include <stdexcept>

#include "schottky/classical.hpp"
#include "schottky/errors.hpp"

namespace schottky {

MoebiusMap inflate_multiplier(const MoebiusMap& m, double factor) {
  if (!(factor > 0.0)) throw std::invalid_argument("inflation factor must be positive");
  if (classify(m) != MapClass::Loxodromic) throw NonLoxodromicError("only loxodromic maps can be inflated");
  // Eigenvector (z, 1) of a finite fixed point z has eigenvalue cz + d, and
  // (1, 0) belongs to infinity with eigenvalue a; the attracting point
  // carries the dominant eigenvalue.
  const FixedPoints fp = fixed_points(m);
  auto vec = [](const SpherePoint& p) {
    return p.is_infinite() ? std::pair<Complex, Complex>{1.0, 0.0} : std::pair<Complex, Complex>{p.value(), 1.0};
  };
  const auto [p1, p2] = vec(fp.attracting);
  const auto [q1, q2] = vec(fp.repelling);
  const Complex lambda = fp.attracting.is_infinite() ? m.a() : m.c() * fp.attracting.value() + m.d();
  const Complex mu = lambda * std::sqrt(factor);
  // V diag(mu, 1/mu) V^{-1} with V = [[p1, q1], [p2, q2]].
  const Complex det = p1 * q2 - q1 * p2;
  const Complex a = (p1 * mu * q2 - q1 / mu * p2) / det;
  const Complex b = (-p1 * mu * q1 + q1 / mu * p1) / det;
  const Complex c = (p2 * mu * q2 - q2 / mu * p2) / det;
  const Complex d = (-p2 * mu * q1 + q2 / mu * p1) / det;
  return MoebiusMap(a, b, c, d);
}

namespace {

std::vector<Complex> multipliers_of(const std::vector<MoebiusMap>& gens) {
  std::vector<Complex> out;
  for (const auto& m : gens) out.push_back(multiplier(m));
  return out;
}

}  // namespace

DeformResult deform_toward_classical(const SchottkyGroup& group, const DeformOptions& opts) {
  if (opts.steps < 0) throw std::invalid_argument("step count must be >= 0");
  DeformResult result;
  SearchOptions search;
  search.budget = opts.search_budget;

  auto record = [&](int step, const std::vector<MoebiusMap>& gens, const DimensionEstimate& est) {
    DeformStep s{step, SchottkyGroup(gens), est, multipliers_of(gens), std::nullopt};
    const SearchResult found = search_classical_generators(s.group, search);
    if (found.success()) s.certificate = found.certificate();
    result.path.push_back(std::move(s));
    const auto& cert = result.path.back().certificate;
    return opts.stop_when_certified && cert && cert->margin > opts.stop_margin;
  };

  std::vector<MoebiusMap> gens = group.generators();
  DimensionEstimate est = exponent_of_convergence(SchottkyGroup(gens), opts.depth);
  result.warned = est.value >= 1.0;
  if (record(0, gens, est)) return result;

  double eps = opts.epsilon;
  for (int t = 1; t <= opts.steps; ++t) {
    for (;;) {
      std::vector<MoebiusMap> next;
      for (const auto& m : gens) next.push_back(inflate_multiplier(m, 1.0 + eps));
      const DimensionEstimate next_est = exponent_of_convergence(SchottkyGroup(next), opts.depth);
      if (std::abs(next_est.value - est.value) > opts.max_dimension_step && eps > 1e-4) {
        eps *= 0.5;
        continue;
      }
      gens = std::move(next);
      est = next_est;
      break;
    }
    if (record(t, gens, est)) break;
  }
  return result;
}

}  // namespace schottky
