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
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <unordered_set>

#include "schottky/classical.hpp"
#include "schottky/errors.hpp"
#include "schottky/parallel.hpp"

namespace schottky {

namespace {

using Vec = std::vector<double>;

// Downhill simplex; stops at a zero value, after `max_evals` evaluations or
// once the simplex values agree to `ftol`.
double nelder_mead(const std::function<double(const Vec&)>& f, Vec& x, double step, int max_evals,
                   double ftol = 1e-14) {
  const std::size_t n = x.size();
  std::vector<Vec> simplex(n + 1, x);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
  Vec values(n + 1);
  int evals = 0;
  for (std::size_t i = 0; i <= n; ++i) values[i] = f(simplex[i]), ++evals;
  std::vector<std::size_t> idx(n + 1);
  auto blend = [&](const Vec& a, const Vec& b, double t) {
    Vec out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = a[k] + t * (b[k] - a[k]);
    return out;
  };
  while (evals < max_evals) {
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = idx.front(), worst = idx.back(), second = idx[n - 1];
    if (values[best] == 0.0 || values[worst] - values[best] <= ftol * (1.0 + values[best])) break;
    Vec centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i)
      if (i != worst)
        for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / static_cast<double>(n);
    const Vec reflected = blend(centroid, simplex[worst], -1.0);
    const double fr = f(reflected);
    ++evals;
    if (fr < values[best]) {
      const Vec expanded = blend(centroid, simplex[worst], -2.0);
      const double fe = f(expanded);
      ++evals;
      if (fe < fr) simplex[worst] = expanded, values[worst] = fe;
      else simplex[worst] = reflected, values[worst] = fr;
    } else if (fr < values[second]) {
      simplex[worst] = reflected, values[worst] = fr;
    } else {
      const bool outside = fr < values[worst];
      const Vec contracted = blend(centroid, outside ? reflected : simplex[worst], 0.5);
      const double fc = f(contracted);
      ++evals;
      if (fc < std::min(fr, values[worst])) {
        simplex[worst] = contracted, values[worst] = fc;
      } else {
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == best) continue;
          simplex[i] = blend(simplex[best], simplex[i], 0.5);
          values[i] = f(simplex[i]);
          ++evals;
        }
      }
    }
  }
  const std::size_t best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
  x = simplex[best];
  return values[best];
}

// Circles of a candidate pairing. Per generator: log of the radius relative
// to the isometric radius, and an offset of the center from the pole in
// units of the radius, kept inside the circle.
struct Layout {
  std::vector<MoebiusMap> gens;
  std::vector<Complex> pole;
  std::vector<double> iso_radius;

  std::optional<std::vector<Circle>> circles(const Vec& x) const {
    const std::size_t g = gens.size();
    std::vector<Circle> out(2 * g);
    for (std::size_t i = 0; i < g; ++i) {
      const double tau = iso_radius[i] * std::exp(-0.5 * x[3 * i]);
      Complex w(x[3 * i + 1], x[3 * i + 2]);
      const double len = std::abs(w);
      if (len > 0.0) w *= std::tanh(len) / len;
      if (!std::isfinite(tau) || !(tau > 0.0)) return std::nullopt;
      out[i] = Circle(pole[i] + tau * w, tau);
      try {
        out[i + g] = image_circle(gens[i], out[i]);
      } catch (const DegenerateImage&) {
        return std::nullopt;
      }
    }
    return out;
  }

  double cost(const Vec& x, double margin) const {
    const auto cs = circles(x);
    if (!cs) return std::numeric_limits<double>::max();
    double total = 0.0;
    for (std::size_t a = 0; a < cs->size(); ++a) {
      for (std::size_t b = a + 1; b < cs->size(); ++b) {
        const Circle& p = (*cs)[a];
        const Circle& q = (*cs)[b];
        const double want = margin * std::min(p.radius, q.radius);
        const double over = (want - disk_gap(p, q)) / (p.radius + q.radius);
        if (over > 0.0) total += over * over;
      }
    }
    return total;
  }
};

}  // namespace

PairingFit fit_pairing(const std::vector<MoebiusMap>& generators, const SearchOptions& opts) {
  PairingFit fit;
  fit.cost = std::numeric_limits<double>::max();
  Layout layout;
  layout.gens = generators;
  for (const auto& m : generators) {
    // A map fixing infinity sends exteriors to exteriors: no pairing.
    if (std::abs(m.c()) <= 1e-12 * std::max({std::abs(m.a()), std::abs(m.d()), 1.0})) return fit;
    layout.pole.push_back(-m.d() / m.c());
    layout.iso_radius.push_back(1.0 / std::abs(m.c()));
  }
  const std::size_t dims = 3 * generators.size();
  auto objective = [&](const Vec& x) { return layout.cost(x, opts.fit_margin); };

  std::mt19937_64 rng(0x5eedULL + generators.size());
  std::uniform_real_distribution<double> log_lambda(-3.0, 3.0), offset(-0.6, 0.6);
  Vec best_x(dims, 0.0);
  double best = objective(best_x);
  for (int restart = 0; best > 0.0 && restart <= opts.fit_restarts; ++restart) {
    Vec x(dims, 0.0);
    if (restart > 0) {
      for (std::size_t i = 0; i < generators.size(); ++i) {
        x[3 * i] = log_lambda(rng);
        x[3 * i + 1] = offset(rng);
        x[3 * i + 2] = offset(rng);
      }
    }
    const double value = nelder_mead(objective, x, 0.5, 400 * static_cast<int>(dims));
    if (value < best) best = value, best_x = x;
  }
  fit.cost = best;
  if (best > 0.0) return fit;

  const auto circles = layout.circles(best_x);
  if (!circles) return fit;
  try {
    const ClassicalCertificate cert = verify_classical_domain(generators, CirclePairing{*circles});
    fit.pairing = cert.pairing;
    fit.margin = cert.margin;
  } catch (const ClassicalityViolation&) {
    // The sampled orientation test rejected the layout; report it as a
    // tiny positive cost so the search keeps going.
    fit.cost = std::numeric_limits<double>::min();
  }
  return fit;
}

namespace {

struct Node {
  std::vector<MoebiusMap> gens;
  double length = 0.0;
  std::vector<Word> witness;
  int depth = 0;
};

// Hash of a generating set up to inversion and order of the generators.
std::size_t set_key(const std::vector<MoebiusMap>& gens) {
  std::vector<std::size_t> parts;
  for (const auto& m : gens) parts.push_back(std::min(projective_hash(m), projective_hash(m.inverse())));
  std::sort(parts.begin(), parts.end());
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::size_t p : parts) h = (h ^ p) * 0x100000001b3ULL;
  return h;
}

// Sum of translation lengths; Nielsen moves that lengthen a ping-pong
// generating set raise it, so undoing them lowers it.
double total_length(const std::vector<MoebiusMap>& gens) {
  double total = 0.0;
  for (const auto& m : gens) total += std::log(std::abs(multiplier(m)));
  return total;
}

}  // namespace

SearchResult search_classical_generators(const SchottkyGroup& group, const SearchOptions& opts) {
  const int g = group.rank();
  for (int i = 0; i < g; ++i)
    if (classify(group.generators()[i]) != MapClass::Loxodromic)
      throw NonLoxodromicError("generator " + std::to_string(i + 1) + " is not loxodromic");

  SearchResult result;
  FailureReport failure;
  failure.best_cost = std::numeric_limits<double>::infinity();

  Node root;
  root.gens = group.generators();
  root.length = total_length(root.gens);
  for (int i = 0; i < g; ++i) root.witness.push_back(Word{{i}});

  // Best-first on total translation length, then fit cost, then insertion
  // order.
  using Entry = std::tuple<double, double, std::uint64_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  std::vector<Node> nodes;
  std::unordered_set<std::size_t> seen;
  std::uint64_t counter = 0;

  auto success = [&](const Node& n, const PairingFit& fit) {
    ClassicalCertificate cert;
    cert.generators = n.gens;
    cert.pairing = *fit.pairing;
    cert.margin = fit.margin;
    cert.witness_words = n.witness;
    cert.search_depth = n.depth;
    result.outcome = cert;
    result.visited = counter;
    return result;
  };
  auto note = [&](const Node& n, double cost) {
    if (cost < failure.best_cost) {
      failure.best_cost = cost;
      failure.best_generators = n.gens;
      failure.best_witness = n.witness;
    }
  };

  const PairingFit root_fit = fit_pairing(root.gens, opts);
  ++counter;
  if (root_fit.pairing) return success(root, root_fit);
  note(root, root_fit.cost);
  seen.insert(set_key(root.gens));
  nodes.push_back(root);
  open.emplace(root.length, root_fit.cost, 0, 0);

  while (!open.empty() && counter < opts.budget) {
    const Node parent = nodes[std::get<3>(open.top())];
    open.pop();
    std::vector<Node> children;
    for (int i = 0; i < g; ++i) {
      for (int j = 0; j < g; ++j) {
        if (j == i) continue;
        for (int sign = 0; sign < 2; ++sign) {
          const MoebiusMap other = sign ? parent.gens[j].inverse() : parent.gens[j];
          const Word other_w = sign ? inverse(parent.witness[j], g) : parent.witness[j];
          for (int side = 0; side < 2; ++side) {
            Node child = parent;
            child.depth = parent.depth + 1;
            try {
              child.gens[i] = side ? other * parent.gens[i] : parent.gens[i] * other;
            } catch (const std::invalid_argument&) {
              continue;  // product overflowed
            }
            child.witness[i] = side ? multiply(other_w, parent.witness[i], g) : multiply(parent.witness[i], other_w, g);
            if (classify(child.gens[i]) != MapClass::Loxodromic) continue;
            child.length = total_length(child.gens);
            if (!seen.insert(set_key(child.gens)).second) continue;
            children.push_back(std::move(child));
          }
        }
      }
    }
    const std::size_t room = static_cast<std::size_t>(opts.budget - counter);
    if (children.size() > room) children.resize(room);
    std::vector<PairingFit> fits(children.size());
    parallel_for(children.size(), [&](std::size_t k) { fits[k] = fit_pairing(children[k].gens, opts); });
    for (std::size_t k = 0; k < children.size(); ++k) {
      ++counter;
      if (fits[k].pairing) return success(children[k], fits[k]);
      note(children[k], fits[k].cost);
      nodes.push_back(children[k]);
      open.emplace(children[k].length, fits[k].cost, nodes.size() - 1, nodes.size() - 1);
    }
  }
  failure.visited = counter;
  failure.reason = open.empty() ? "search space exhausted" : "budget exhausted";
  result.outcome = failure;
  result.visited = counter;
  return result;
}

}  // namespace schottky
