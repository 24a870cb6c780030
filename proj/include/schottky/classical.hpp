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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "schottky/circle.hpp"
#include "schottky/dimension.hpp"
#include "schottky/group.hpp"
#include "schottky/moebius.hpp"
#include "schottky/words.hpp"

namespace schottky {

/// Witness that a generating set pairs 2g disjoint round circles.
struct ClassicalCertificate {
  std::vector<MoebiusMap> generators;
  CirclePairing pairing;
  /// Minimum gap between the closed disks; strictly positive.
  double margin = 0.0;
  /// generators[i] == word_to_map(input group, witness_words[i]).
  std::vector<Word> witness_words;
  /// Nielsen moves applied to reach this generating set.
  int search_depth = 0;
};

/// Checks (a) pairwise disjoint closed disks, (b) generator i maps circle i
/// onto circle i + g, (c) generator i maps the exterior of circle i into
/// disk i + g. Throws ClassicalityViolation naming the offending index.
ClassicalCertificate verify_classical_domain(const std::vector<MoebiusMap>& generators,
                                             const CirclePairing& pairing);

// ---------------------------------------------------------------------------
// Singularities of fundamental-domain sequences

struct DomainStep {
  std::vector<DomainEntry> entries;
  /// Sequence parameter of the step; defaults to its 1-based position.
  std::optional<double> parameter;
};

struct DomainSequence {
  std::vector<DomainStep> steps;
};

enum class SingularityKind { None, Tangency, Degeneration, Collapsing };

std::string to_string(SingularityKind k);

struct SingularityReport {
  SingularityKind kind = SingularityKind::None;
  /// Indices involved (one for degeneration, two otherwise).
  std::vector<int> indices;
  /// Tangency or degeneration point, or the center of the collapsed circle.
  Complex point;
  /// Radius of the limiting circle for collapsing.
  double radius = 0.0;
  /// 0-based step from which the detected quantity moves monotonically to
  /// its limit; -1 when it does not.
  int onset_step = -1;
};

struct SingularityOptions {
  /// Tangency when the limiting gap is below this fraction of mean radius.
  double tangency_tol = 1e-6;
  /// Degeneration when the limiting radius is below this fraction of the
  /// initial radius.
  double degeneracy_tol = 1e-6;
  /// Radii stay "bounded below" when their limit exceeds this fraction of
  /// the initial radius.
  double bounded_below = 1e-6;
};

/// Extrapolated limit of a scalar sequence sampled at parameters t (model
/// x = L + C / t fitted on the trailing half, clamped to x_last's sign).
double extrapolate_limit(const std::vector<double>& values, const std::vector<double>& params);

SingularityReport classify_domain_sequence(const DomainSequence& seq,
                                           const SingularityOptions& opts = {});

// ---------------------------------------------------------------------------
// Search for classical generating sets

struct SearchOptions {
  std::uint64_t budget = 100000;
  /// Target relative margin used while fitting circles.
  double fit_margin = 0.02;
  /// Per-node continuous fitting effort.
  int fit_restarts = 6;
};

struct FailureReport {
  double best_cost = 0.0;
  std::uint64_t visited = 0;
  std::vector<MoebiusMap> best_generators;
  std::vector<Word> best_witness;
  std::string reason;
};

struct SearchResult {
  std::variant<ClassicalCertificate, FailureReport> outcome;
  std::uint64_t visited = 0;

  bool success() const { return std::holds_alternative<ClassicalCertificate>(outcome); }
  const ClassicalCertificate& certificate() const { return std::get<ClassicalCertificate>(outcome); }
  const FailureReport& failure() const { return std::get<FailureReport>(outcome); }
};

struct PairingFit {
  /// Sum of squared pairwise overlaps (with target margin); 0 when feasible.
  double cost = 0.0;
  std::optional<CirclePairing> pairing;
  double margin = 0.0;
};

/// Fits one circle per generator around its pole (and the image circle
/// around the pole of the inverse) so that all 2g closed disks are disjoint.
PairingFit fit_pairing(const std::vector<MoebiusMap>& generators, const SearchOptions& opts = {});

/// Best-first search over Nielsen moves g_i <- g_i g_j^{+-1}, g_j^{+-1} g_i
/// for a generating set admitting a classical domain. Throws
/// NonLoxodromicError if an input generator is not loxodromic.
SearchResult search_classical_generators(const SchottkyGroup& group,
                                         const SearchOptions& opts = {});

// ---------------------------------------------------------------------------
// Deformation toward classical groups

struct DeformOptions {
  int steps = 20;
  /// Initial inflation rate; halved while a step changes the dimension by
  /// more than max_dimension_step.
  double epsilon = 0.15;
  double max_dimension_step = 0.05;
  int depth = 7;
  /// Stop at the first step certified with margin above this value.
  double stop_margin = 0.1;
  bool stop_when_certified = true;
  std::uint64_t search_budget = 2000;
};

struct DeformStep {
  int step = 0;
  SchottkyGroup group;
  DimensionEstimate dimension;
  std::vector<Complex> multipliers;
  std::optional<ClassicalCertificate> certificate;
};

struct DeformResult {
  std::vector<DeformStep> path;
  /// True when the input estimate was >= 1 (the flow still runs).
  bool warned = false;
};

/// Scales the multiplier modulus of every generator by (1+eps)^t while
/// keeping its fixed points, recording a dimension estimate per step.
DeformResult deform_toward_classical(const SchottkyGroup& group, const DeformOptions& opts = {});

/// Generator with the same fixed points and multiplier scaled in modulus.
MoebiusMap inflate_multiplier(const MoebiusMap& m, double factor);

}  // namespace schottky
