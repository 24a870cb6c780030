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
#include <stdexcept>

#include "schottky/classical.hpp"
#include "schottky/errors.hpp"

namespace schottky {

std::string to_string(SingularityKind k) {
  switch (k) {
    case SingularityKind::None: return "none";
    case SingularityKind::Tangency: return "tangency";
    case SingularityKind::Degeneration: return "degeneration";
    case SingularityKind::Collapsing: return "collapsing";
  }
  return "unknown";
}

namespace {

// Least-squares fit of x = L + C / t on the trailing half.
double fit_limit(const std::vector<double>& values, const std::vector<double>& params) {
  if (values.size() != params.size() || values.size() < 2)
    throw std::invalid_argument("extrapolation needs matching values and parameters (at least two)");
  const std::size_t n = values.size();
  const std::size_t first = n >= 4 ? n / 2 : 0;
  double su = 0, sx = 0, suu = 0, sux = 0;
  const double count = static_cast<double>(n - first);
  for (std::size_t i = first; i < n; ++i) {
    if (!(params[i] > 0.0)) throw std::invalid_argument("sequence parameters must be positive");
    const double u = 1.0 / params[i];
    su += u;
    sx += values[i];
    suu += u * u;
    sux += u * values[i];
  }
  const double var = suu - su * su / count;
  double limit;
  if (std::abs(var) <= 1e-300) {
    limit = values.back();
  } else {
    const double slope = (sux - su * sx / count) / var;
    limit = (sx - slope * su) / count;
  }
  return limit;
}

}  // namespace

double extrapolate_limit(const std::vector<double>& values, const std::vector<double>& params) {
  double limit = fit_limit(values, params);
  const double last = values.back();
  if ((last >= 0.0 && limit < 0.0) || (last <= 0.0 && limit > 0.0)) limit = 0.0;
  return limit;
}

namespace {

struct Track {
  std::vector<double> x, y, r;
};

Complex center_of(const DomainEntry& e) {
  return std::visit([](const auto& v) {
    using T = std::decay_t<decltype(v)>;
    if constexpr (std::is_same_v<T, Circle>) return v.center;
    else return v.point;
  }, e);
}

double radius_of(const DomainEntry& e) {
  return std::holds_alternative<Circle>(e) ? std::get<Circle>(e).radius : 0.0;
}

// First step from which the sequence moves monotonically toward zero.
int onset(const std::vector<double>& q) {
  int start = static_cast<int>(q.size()) - 1;
  while (start > 0 && std::abs(q[start]) < std::abs(q[start - 1])) --start;
  return start == static_cast<int>(q.size()) - 1 ? -1 : start;
}

}  // namespace

SingularityReport classify_domain_sequence(const DomainSequence& seq, const SingularityOptions& opts) {
  if (seq.steps.size() < 3) throw std::invalid_argument("singularity classification needs at least three steps");
  const std::size_t count = seq.steps.front().entries.size();
  for (std::size_t s = 0; s < seq.steps.size(); ++s)
    if (seq.steps[s].entries.size() != count)
      throw InconsistentSequence("step " + std::to_string(s + 1) + " has " +
                                 std::to_string(seq.steps[s].entries.size()) + " entries, expected " +
                                 std::to_string(count));

  std::vector<double> t;
  for (std::size_t s = 0; s < seq.steps.size(); ++s)
    t.push_back(seq.steps[s].parameter.value_or(static_cast<double>(s + 1)));
  std::vector<Track> tracks(count);
  for (const auto& step : seq.steps) {
    for (std::size_t i = 0; i < count; ++i) {
      const Complex c = center_of(step.entries[i]);
      tracks[i].x.push_back(c.real());
      tracks[i].y.push_back(c.imag());
      tracks[i].r.push_back(radius_of(step.entries[i]));
    }
  }

  std::vector<Complex> center(count);
  std::vector<double> radius(count), initial(count);
  for (std::size_t i = 0; i < count; ++i) {
    center[i] = {fit_limit(tracks[i].x, t), fit_limit(tracks[i].y, t)};
    radius[i] = extrapolate_limit(tracks[i].r, t);
    initial[i] = *std::max_element(tracks[i].r.begin(), tracks[i].r.end());
  }

  SingularityReport report;
  // Degeneration.
  for (std::size_t i = 0; i < count; ++i) {
    const bool point_now = tracks[i].r.back() == 0.0;
    if (point_now || radius[i] < opts.degeneracy_tol * initial[i]) {
      report.kind = SingularityKind::Degeneration;
      report.indices = {static_cast<int>(i)};
      report.point = center[i];
      report.onset_step = onset(tracks[i].r);
      return report;
    }
  }
  auto bounded = [&](std::size_t i) { return radius[i] > opts.bounded_below * initial[i]; };

  // Collapsing: two circles tend to one.
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (!bounded(i) || !bounded(j)) continue;
      std::vector<double> dc, dr;
      for (std::size_t s = 0; s < t.size(); ++s) {
        dc.push_back(std::hypot(tracks[i].x[s] - tracks[j].x[s], tracks[i].y[s] - tracks[j].y[s]));
        dr.push_back(std::abs(tracks[i].r[s] - tracks[j].r[s]));
      }
      const double mean = 0.5 * (radius[i] + radius[j]);
      if (extrapolate_limit(dc, t) + extrapolate_limit(dr, t) <= opts.tangency_tol * mean) {
        report.kind = SingularityKind::Collapsing;
        report.indices = {static_cast<int>(i), static_cast<int>(j)};
        report.point = 0.5 * (center[i] + center[j]);
        report.radius = mean;
        std::vector<double> sum(dc.size());
        for (std::size_t s = 0; s < sum.size(); ++s) sum[s] = dc[s] + dr[s];
        report.onset_step = onset(sum);
        return report;
      }
    }
  }

  // Tangency: the gap between two closed disks tends to zero.
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (!bounded(i) || !bounded(j)) continue;
      std::vector<double> gap;
      for (std::size_t s = 0; s < t.size(); ++s)
        gap.push_back(std::hypot(tracks[i].x[s] - tracks[j].x[s], tracks[i].y[s] - tracks[j].y[s]) -
                      tracks[i].r[s] - tracks[j].r[s]);
      const double mean = 0.5 * (radius[i] + radius[j]);
      if (std::abs(extrapolate_limit(gap, t)) <= opts.tangency_tol * mean) {
        report.kind = SingularityKind::Tangency;
        report.indices = {static_cast<int>(i), static_cast<int>(j)};
        const Complex axis = center[j] - center[i];
        report.point = center[i] + radius[i] * axis / std::abs(axis);
        report.onset_step = onset(gap);
        return report;
      }
    }
  }
  return report;
}

}  // namespace schottky
