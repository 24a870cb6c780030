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
#include <iosfwd>
#include <optional>
#include <vector>

#include "json.hpp"
#include "schottky/classical.hpp"

namespace schottky {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitNumerical = 2, kExitBudget = 3 };

struct TheoremCheckOptions {
  int samples = 25;
  double threshold = 0.85;
  std::uint64_t budget = 100000;
  std::uint64_t seed = 1;
  /// Exponent-of-convergence depth for the dimension filter.
  int depth = 8;
  /// Draws stop here even if fewer than `samples` groups passed.
  int max_draws = 0;
};

struct TheoremCheckEntry {
  int draw = 0;
  std::vector<MoebiusMap> generators;
  double dimension = 0.0;
  SearchResult search;
};

struct TheoremCheckReport {
  int draws = 0;
  /// Draws rejected because a generator was not loxodromic or the
  /// estimator failed.
  int rejected = 0;
  /// Draws whose estimate was at or above the threshold.
  int filtered = 0;
  std::vector<TheoremCheckEntry> entries;

  int successes() const;
  std::uint64_t budget_used() const;
};

/// Draws seeded random rank-2 groups until `samples` of them have a
/// dimension estimate below the threshold (or max_draws is reached) and
/// searches each for a classical generating set.
TheoremCheckReport run_theorem_check(const TheoremCheckOptions& opts);
nlohmann::json theorem_report_to_json(const TheoremCheckReport& report, const TheoremCheckOptions& opts);

/// Entry point of `schottky-lab`; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schottky
