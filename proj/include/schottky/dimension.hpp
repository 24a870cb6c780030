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

#include <string>
#include <vector>

#include "schottky/circle.hpp"
#include "schottky/group.hpp"

namespace schottky {

enum class DimensionMethod { Exponent, Transfer, BoxCount };

std::string to_string(DimensionMethod m);
DimensionMethod parse_dimension_method(const std::string& name);

struct DimensionEstimate {
  double value = 0.0;
  DimensionMethod method = DimensionMethod::Exponent;
  int depth = 0;
  /// Method-specific convergence indicator, >= 0.
  double residual = 0.0;
};

struct SeriesTruncation {
  double s = 0.0;
  int depth = 0;
  double partial_sum = 0.0;
  /// Sum over words of exactly `depth` letters.
  double last_shell = 0.0;
};

/// Hyperbolic displacements d(o, w o) of every reduced word, grouped by
/// length 1..depth. Computed once and reused across exponents.
class DisplacementShells {
 public:
  DisplacementShells(const SchottkyGroup& group, int depth);

  int depth() const { return static_cast<int>(shells_.size()); }
  /// Sum of exp(-s d) over words of exactly `length` letters.
  double shell_sum(double s, int length) const;
  SeriesTruncation truncation(double s) const;

 private:
  std::vector<std::vector<double>> shells_;
};

/// Sum of exp(-s d(o, w o)) over reduced words of length 1..depth.
SeriesTruncation poincare_partial_sum(const SchottkyGroup& group, double s, int depth);

/// Critical exponent from the growth rate of the last shell: bisection on
/// s in [0, 2] for log(shell_k / shell_{k-1}) = 0, tolerance 1e-3. Throws
/// NonConvergedError when consecutive shell ratios differ by more than 50%.
DimensionEstimate exponent_of_convergence(const SchottkyGroup& group, int depth);

/// Spectral radius of the depth-k transfer matrix T(s) with entries
/// |l'(z_v)|^s along allowed disk transitions.
double transfer_spectral_radius(const SchottkyGroup& group, int depth, double s);

/// Root of spectral radius T(s) = 1 on [0, 2]. Throws NoPairingError or
/// NonConvergedError.
DimensionEstimate transfer_dimension(const SchottkyGroup& group, int depth);

/// Least-squares slope of log N(eps) against log(1/eps). Requires at least
/// two points, four scales and two decades of scale range.
DimensionEstimate box_counting(const std::vector<Complex>& points, const std::vector<double>& scales);

/// Log-spaced scales between `coarse` and `fine`.
std::vector<double> log_scales(double coarse, double fine, int count);

/// Box-counting on the depth-k limit-set sample with scales spanning the
/// resolved range of the cover.
DimensionEstimate box_counting_dimension(const SchottkyGroup& group, int depth);

enum class RectifiabilityVerdict { ConvergesLikely, DivergesLikely, Inconclusive };

std::string to_string(RectifiabilityVerdict v);

/// Shell ratios at s = 1 over the last three shells: all below 1 - 0.05
/// converges, all above 1 + 0.05 diverges.
RectifiabilityVerdict rectifiability_proxy(const SchottkyGroup& group, int depth);

/// Dispatch by method with the default parameters of each estimator.
DimensionEstimate estimate_dimension(const SchottkyGroup& group, DimensionMethod method, int depth);

}  // namespace schottky
