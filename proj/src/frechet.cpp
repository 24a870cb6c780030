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
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "schottky/curve.hpp"
#include "schottky/parallel.hpp"

namespace schottky {

double discrete_frechet(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("Frechet distance of an empty sequence");
  const std::size_t m = b.size();
  std::vector<double> row(m), prev(m);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double d = std::abs(a[i] - b[j]);
      double reach;
      if (i == 0 && j == 0) reach = 0.0;
      else if (i == 0) reach = row[j - 1];
      else if (j == 0) reach = prev[0];
      else reach = std::min({prev[j], prev[j - 1], row[j - 1]});
      row[j] = std::max(reach, d);
    }
    std::swap(row, prev);
  }
  return prev[m - 1];
}

namespace {

// Frechet distance between closed sequences a (from a[anchor]) and b (from
// b[shift]), both returning to their start, or `bound` when it is at least
// that. Only cells below the bound are visited: each row keeps the column
// range [lo, hi) that is still live. dist holds |a| rows of the distances to
// b written out twice, so row entries for a shift are contiguous.
double closed_frechet(const std::vector<double>& dist, std::size_t na, std::size_t nb, std::size_t anchor,
                      std::size_t shift, double bound) {
  constexpr double kDead = std::numeric_limits<double>::infinity();
  const std::size_t n = na + 1, m = nb + 1;
  std::vector<double> row(m, kDead), prev(m, kDead);
  std::size_t plo = 0, phi = 0;  // live range of the previous row
  for (std::size_t i = 0; i < n; ++i) {
    const double* d = &dist[((anchor + i) % na) * 2 * nb + shift];
    const std::size_t first = i == 0 ? 0 : plo;
    std::size_t lo = m, hi = 0;
    for (std::size_t j = first; j < m; ++j) {
      double reach = j > first ? row[j - 1] : kDead;
      if (i == 0) {
        if (j == 0) reach = 0.0;
      } else {
        if (j < phi) reach = std::min(reach, prev[j]);
        if (j > plo && j - 1 < phi) reach = std::min(reach, prev[j - 1]);
      }
      const double v = std::max(reach, d[j]);
      if (v < bound) {
        row[j] = v;
        if (lo == m) lo = j;
        hi = j + 1;
      } else {
        row[j] = kDead;
        if (j >= phi) break;  // nothing further right is reachable
      }
    }
    if (lo == m) return bound;
    std::swap(row, prev);
    plo = lo;
    phi = hi;
  }
  return phi == m ? prev[m - 1] : bound;
}

}  // namespace

double cyclic_discrete_frechet(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("Frechet distance of an empty sequence");
  const std::size_t na = a.size(), nb = b.size();
  std::vector<double> dist(na * 2 * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      dist[i * 2 * nb + j] = dist[i * 2 * nb + nb + j] = std::abs(a[i] - b[j]);
  // Every cyclic coupling passes through each a[i]; trying every partner of
  // one of them covers all couplings. A first pass from the closest partner
  // of a[0] gives a bound; the anchor is then the point of a with the fewest
  // partners under that bound, tried closest first.
  auto partner = [&](std::size_t i, std::size_t s) { return dist[i * 2 * nb + s]; };
  const std::size_t s0 = static_cast<std::size_t>(
      std::min_element(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(nb)) - dist.begin());
  const double first = closed_frechet(dist, na, nb, 0, s0, std::numeric_limits<double>::infinity());
  std::size_t anchor = 0, fewest = nb + 1;
  for (std::size_t i = 0; i < na; ++i) {
    std::size_t count = 0;
    for (std::size_t s = 0; s < nb; ++s) count += partner(i, s) < first ? 1 : 0;
    if (count < fewest) {
      fewest = count;
      anchor = i;
    }
  }
  std::vector<std::size_t> shifts;
  for (std::size_t s = 0; s < nb; ++s)
    if (partner(anchor, s) < first) shifts.push_back(s);
  std::stable_sort(shifts.begin(), shifts.end(),
                   [&](std::size_t x, std::size_t y) { return partner(anchor, x) < partner(anchor, y); });
  std::atomic<double> best{first};
  parallel_for(shifts.size(), [&](std::size_t k) {
    const std::size_t shift = shifts[k];
    double current = best.load();
    if (partner(anchor, shift) >= current) return;
    const double d = closed_frechet(dist, na, nb, anchor, shift, current);
    while (d < current && !best.compare_exchange_weak(current, d)) {
    }
  });
  return best.load();
}

double frechet_distance(const PolyCurve& a, const PolyCurve& b, const FrechetOptions& opts) {
  if (opts.resolution < 0.0 || opts.samples_per_curve < 3)
    throw std::invalid_argument("invalid Frechet sampling options");
  auto resolution = [&](const PolyCurve& c) {
    return opts.resolution > 0.0 ? opts.resolution : c.length() / opts.samples_per_curve;
  };
  const std::vector<Complex> sa = a.sample(resolution(a));
  std::vector<Complex> sb = b.sample(resolution(b));
  double d = cyclic_discrete_frechet(sa, sb);
  if (opts.allow_reversal) {
    std::reverse(sb.begin(), sb.end());
    d = std::min(d, cyclic_discrete_frechet(sa, sb));
  }
  if (opts.length_term) d += std::abs(a.length() - b.length());
  return d;
}

}  // namespace schottky
