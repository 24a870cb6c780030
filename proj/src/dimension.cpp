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

#include "schottky/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "schottky/errors.hpp"
#include "schottky/parallel.hpp"

namespace schottky {

std::string to_string(DimensionMethod m) {
  switch (m) {
    case DimensionMethod::Exponent: return "exponent";
    case DimensionMethod::Transfer: return "transfer";
    case DimensionMethod::BoxCount: return "boxcount";
  }
  return "unknown";
}

DimensionMethod parse_dimension_method(const std::string& name) {
  if (name == "exponent") return DimensionMethod::Exponent;
  if (name == "transfer") return DimensionMethod::Transfer;
  if (name == "boxcount") return DimensionMethod::BoxCount;
  throw std::invalid_argument("unknown dimension method '" + name + "'");
}

std::string to_string(RectifiabilityVerdict v) {
  switch (v) {
    case RectifiabilityVerdict::ConvergesLikely: return "converges_likely";
    case RectifiabilityVerdict::DivergesLikely: return "diverges_likely";
    case RectifiabilityVerdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Poincare series

DisplacementShells::DisplacementShells(const SchottkyGroup& group, int depth) {
  if (depth < 1) throw std::invalid_argument("series depth must be >= 1");
  const int letters = 2 * group.rank();
  // Subtrees below each first letter are independent; concatenating them in
  // letter order reproduces the lexicographic order of each shell.
  std::vector<std::vector<std::vector<double>>> parts(letters);
  parallel_for(letters, [&](std::size_t first) {
    auto& shells = parts[first];
    shells.assign(depth, {});
    const MoebiusMap& m0 = group.letter_map(static_cast<Letter>(first));
    shells[0].push_back(base_displacement(m0));
    if (depth == 1) return;
    visit_words<MoebiusMap>(
        group.rank(), depth, m0,
        [&](const MoebiusMap& acc, Letter l) { return acc * group.letter_map(l); },
        [&](const std::vector<Letter>& w, const MoebiusMap& m) {
          shells[w.size() - 1].push_back(base_displacement(m));
        },
        {static_cast<Letter>(first)});
  });
  shells_.assign(depth, {});
  for (int k = 0; k < depth; ++k) {
    for (const auto& part : parts) shells_[k].insert(shells_[k].end(), part[k].begin(), part[k].end());
  }
}

double DisplacementShells::shell_sum(double s, int length) const {
  if (length < 1 || length > depth()) throw std::out_of_range("shell length out of range");
  double sum = 0.0;
  for (double d : shells_[length - 1]) sum += std::exp(-s * d);
  return sum;
}

SeriesTruncation DisplacementShells::truncation(double s) const {
  SeriesTruncation t;
  t.s = s;
  t.depth = depth();
  for (int k = 1; k <= depth(); ++k) {
    const double shell = shell_sum(s, k);
    t.partial_sum += shell;
    t.last_shell = shell;
  }
  return t;
}

SeriesTruncation poincare_partial_sum(const SchottkyGroup& group, double s, int depth) {
  if (s < 0.0) throw std::invalid_argument("exponent must be >= 0");
  return DisplacementShells(group, depth).truncation(s);
}

DimensionEstimate exponent_of_convergence(const SchottkyGroup& group, int depth) {
  if (depth < 4) throw std::invalid_argument("exponent estimation needs depth >= 4");
  const DisplacementShells shells(group, depth);
  auto log_ratio = [&](double s, int k) { return std::log(shells.shell_sum(s, k) / shells.shell_sum(s, k - 1)); };

  double lo = 0.0, hi = 2.0;
  double root;
  if (log_ratio(lo, depth) <= 0.0) {
    root = lo;
  } else if (log_ratio(hi, depth) >= 0.0) {
    root = hi;
  } else {
    while (hi - lo > 1e-3) {
      const double mid = 0.5 * (lo + hi);
      (log_ratio(mid, depth) > 0.0 ? lo : hi) = mid;
    }
    root = 0.5 * (lo + hi);
  }
  const double r_last = std::exp(log_ratio(root, depth));
  const double r_prev = std::exp(log_ratio(root, depth - 1));
  if (std::abs(r_last - r_prev) > 0.5 * r_prev)
    throw NonConvergedError("shell ratios oscillate by more than 50% between depths " +
                            std::to_string(depth - 1) + " and " + std::to_string(depth));
  return {root, DimensionMethod::Exponent, depth, std::abs(std::log(r_last))};
}

// ---------------------------------------------------------------------------
// Transfer operator

namespace {

// Lexicographic index of a reduced word among words of the same length.
std::size_t word_index(const std::vector<Letter>& w, int rank) {
  const std::size_t branch = 2 * rank - 1;
  std::size_t idx = 0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    std::size_t digit = w[j];
    if (j > 0) {
      const Letter inv = inverse_letter(w[j - 1], rank);
      if (w[j] > inv) --digit;
      idx = idx * branch + digit;
    } else {
      idx = digit;
    }
  }
  return idx;
}

struct TransferGraph {
  // successors[u] lists (v, |u0'(z_v)|).
  std::vector<std::vector<std::pair<std::size_t, double>>> successors;
};

TransferGraph build_transfer_graph(const SchottkyGroup& group, int depth) {
  const int rank = group.rank();
  const std::vector<Word> words = enumerate_reduced_words(rank, depth);
  const std::vector<Circle> disks = cover_disks(group, depth);
  TransferGraph graph;
  graph.successors.resize(words.size());
  for (std::size_t u = 0; u < words.size(); ++u) {
    const auto& lu = words[u].letters;
    const MoebiusMap& head = group.letter_map(lu.front());
    std::vector<Letter> v(lu.begin() + 1, lu.end());
    v.push_back(0);
    for (Letter x = 0; x < 2 * rank; ++x) {
      if (depth > 1 && x == inverse_letter(v[v.size() - 2], rank)) continue;
      if (depth == 1 && x == inverse_letter(lu.front(), rank)) continue;
      v.back() = x;
      const std::size_t vi = word_index(v, rank);
      graph.successors[u].emplace_back(vi, derivative_modulus(head, disks[vi].center));
    }
  }
  return graph;
}

double spectral_radius(const TransferGraph& graph, double s, std::vector<double>& x) {
  const std::size_t n = graph.successors.size();
  if (x.size() != n) x.assign(n, 1.0 / static_cast<double>(n));
  std::vector<std::vector<std::pair<std::size_t, double>>> weighted = graph.successors;
  for (auto& row : weighted)
    for (auto& e : row) e.second = std::pow(e.second, s);
  std::vector<double> y(n);
  double previous = -1.0;
  for (int iter = 0; iter < 10000; ++iter) {
    double norm = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      double acc = 0.0;
      for (const auto& [v, w] : weighted[u]) acc += w * x[v];
      y[u] = acc;
      norm += acc;
    }
    const double xnorm = std::accumulate(x.begin(), x.end(), 0.0);
    const double rho = norm / xnorm;
    for (std::size_t u = 0; u < n; ++u) x[u] = y[u] / norm;
    if (previous > 0.0 && std::abs(rho - previous) <= 1e-10 * rho) return rho;
    previous = rho;
  }
  throw NonConvergedError("power iteration did not converge in 10000 iterations");
}

}  // namespace

double transfer_spectral_radius(const SchottkyGroup& group, int depth, double s) {
  group.require_pairing();
  const TransferGraph graph = build_transfer_graph(group, depth);
  std::vector<double> x;
  return spectral_radius(graph, s, x);
}

DimensionEstimate transfer_dimension(const SchottkyGroup& group, int depth) {
  group.require_pairing();
  if (depth < 1) throw std::invalid_argument("transfer depth must be >= 1");
  const TransferGraph graph = build_transfer_graph(group, depth);
  std::vector<double> x;
  auto rho = [&](double s) { return spectral_radius(graph, s, x); };

  double lo = 0.0, hi = 2.0;
  double r_lo = rho(lo);
  if (r_lo <= 1.0 + 1e-4) return {0.0, DimensionMethod::Transfer, depth, std::abs(r_lo - 1.0)};
  double r_hi = rho(hi);
  if (r_hi >= 1.0) return {2.0, DimensionMethod::Transfer, depth, std::abs(r_hi - 1.0)};
  double mid = 0.5 * (lo + hi);
  double r_mid = rho(mid);
  for (int iter = 0; iter < 60 && std::abs(r_mid - 1.0) > 1e-4; ++iter) {
    (r_mid > 1.0 ? lo : hi) = mid;
    mid = 0.5 * (lo + hi);
    r_mid = rho(mid);
  }
  // Polish inside the final bracket; the residual stays the spectral gap
  // from one.
  while (hi - lo > 1e-7) {
    (r_mid > 1.0 ? lo : hi) = mid;
    mid = 0.5 * (lo + hi);
    r_mid = rho(mid);
  }
  return {mid, DimensionMethod::Transfer, depth, std::abs(r_mid - 1.0)};
}

// ---------------------------------------------------------------------------
// Box counting

std::vector<double> log_scales(double coarse, double fine, int count) {
  if (count < 2 || !(coarse > fine) || !(fine > 0.0))
    throw std::invalid_argument("need coarse > fine > 0 and at least two scales");
  std::vector<double> out(count);
  const double step = std::log(fine / coarse) / (count - 1);
  for (int i = 0; i < count; ++i) out[i] = coarse * std::exp(step * i);
  return out;
}

DimensionEstimate box_counting(const std::vector<Complex>& points, const std::vector<double>& scales) {
  if (points.size() < 2) throw std::invalid_argument("box counting needs at least two points");
  if (scales.size() < 4) throw std::invalid_argument("box counting needs at least four scales");
  const auto [mn, mx] = std::minmax_element(scales.begin(), scales.end());
  if (!(*mn > 0.0) || *mx / *mn < 100.0 * (1.0 - 1e-12))
    throw std::invalid_argument("box-counting scales must span at least two decades");
  const bool identical = std::all_of(points.begin(), points.end(), [&](Complex p) { return p == points.front(); });
  if (identical) throw DegenerateFit("all points identical");

  struct CellHash {
    std::size_t operator()(const std::pair<long long, long long>& c) const {
      return std::hash<long long>{}(c.first) * 0x9e3779b97f4a7c15ULL ^ std::hash<long long>{}(c.second);
    }
  };
  std::vector<double> xs, ys;
  for (double eps : scales) {
    std::unordered_set<std::pair<long long, long long>, CellHash> cells;
    for (Complex p : points)
      cells.emplace(static_cast<long long>(std::floor(p.real() / eps)),
                    static_cast<long long>(std::floor(p.imag() / eps)));
    xs.push_back(std::log(1.0 / eps));
    ys.push_back(std::log(static_cast<double>(cells.size())));
  }
  const double n = static_cast<double>(xs.size());
  const double mx_ = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx_) * (xs[i] - mx_);
    sxy += (xs[i] - mx_) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (my + slope * (xs[i] - mx_));
    rss += r * r;
  }
  return {std::clamp(slope, 0.0, 2.0), DimensionMethod::BoxCount, 0, std::sqrt(rss / n)};
}

DimensionEstimate box_counting_dimension(const SchottkyGroup& group, int depth) {
  const LimitSetSample sample = sample_limit_set(group, depth);
  std::vector<Complex> pts;
  pts.reserve(sample.points.size());
  for (const auto& p : sample.points) pts.push_back(p.point);
  double diameter = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size() && j < i + 64; ++j)
      diameter = std::max(diameter, std::abs(pts[i] - pts[j]));
  for (Complex p : pts) diameter = std::max(diameter, std::abs(p - pts.front()));
  if (!(diameter > 0.0)) throw DegenerateFit("limit-set sample has zero extent");
  // Above the depth-2 cover radius the count only sees the first clusters;
  // below 8x the depth-k radius the sample no longer resolves the set.
  double coarse = diameter / 4.0;
  if (group.has_pairing() && group.rank() > 1 && depth >= 2) coarse = max_cover_radius(group, 2);
  double fine = coarse * 1e-3;
  if (group.has_pairing() && group.rank() > 1) fine = std::max(fine, 8.0 * max_cover_radius(group, depth));
  fine = std::min(fine, coarse / 100.0);
  DimensionEstimate est = box_counting(pts, log_scales(coarse, fine, 16));
  est.depth = depth;
  return est;
}

RectifiabilityVerdict rectifiability_proxy(const SchottkyGroup& group, int depth) {
  if (depth < 4) throw std::invalid_argument("rectifiability proxy needs depth >= 4");
  const DisplacementShells shells(group, depth);
  constexpr double delta = 0.05;
  bool below = true, above = true;
  for (int k = depth - 2; k <= depth; ++k) {
    const double ratio = shells.shell_sum(1.0, k) / shells.shell_sum(1.0, k - 1);
    below = below && ratio < 1.0 - delta;
    above = above && ratio > 1.0 + delta;
  }
  if (below) return RectifiabilityVerdict::ConvergesLikely;
  if (above) return RectifiabilityVerdict::DivergesLikely;
  return RectifiabilityVerdict::Inconclusive;
}

DimensionEstimate estimate_dimension(const SchottkyGroup& group, DimensionMethod method, int depth) {
  switch (method) {
    case DimensionMethod::Exponent: return exponent_of_convergence(group, depth);
    case DimensionMethod::Transfer: return transfer_dimension(group, depth);
    case DimensionMethod::BoxCount: return box_counting_dimension(group, depth);
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace schottky
