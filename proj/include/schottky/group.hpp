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

#include <optional>
#include <string>
#include <vector>

#include "schottky/circle.hpp"
#include "schottky/moebius.hpp"
#include "schottky/words.hpp"

namespace schottky {

/// 2g circles; circle i is paired with circle i + g. Generator i maps the
/// exterior of circle i onto the interior of circle i + g, so letter l sends
/// everything outside disk l into disk (l + g) mod 2g.
struct CirclePairing {
  std::vector<Circle> circles;

  int rank() const { return static_cast<int>(circles.size()) / 2; }
  /// Disk that letter l maps into.
  int target_disk(Letter l) const { return (l + rank()) % (2 * rank()); }
};

/// Rank-g group given by g loxodromic generators and an optional circle
/// pairing. The constructor validates both; use `unchecked` only for
/// intermediate objects whose validity is established elsewhere.
class SchottkyGroup {
 public:
  explicit SchottkyGroup(std::vector<MoebiusMap> generators,
                         std::optional<CirclePairing> pairing = std::nullopt);

  static SchottkyGroup unchecked(std::vector<MoebiusMap> generators,
                                 std::optional<CirclePairing> pairing = std::nullopt);

  int rank() const { return static_cast<int>(generators_.size()); }
  const std::vector<MoebiusMap>& generators() const { return generators_; }
  const std::optional<CirclePairing>& pairing() const { return pairing_; }
  bool has_pairing() const { return pairing_.has_value(); }
  const CirclePairing& require_pairing() const;

  /// Generator or inverse named by a letter.
  const MoebiusMap& letter_map(Letter l) const { return letter_maps_[l]; }

  /// Conjugate every generator (and the circles, when present) by u:
  /// g -> u g u^{-1}.
  SchottkyGroup conjugated(const MoebiusMap& u) const;

 private:
  SchottkyGroup() = default;
  void build_letter_maps();

  std::vector<MoebiusMap> generators_;
  std::vector<MoebiusMap> letter_maps_;
  std::optional<CirclePairing> pairing_;
};

/// Left-to-right product of the letters; empty word gives the identity.
/// Throws std::invalid_argument for a non-reduced word.
MoebiusMap word_to_map(const SchottkyGroup& group, const Word& w);

/// Image of pairing circle `disk` under word_to_map(w). Requires w to be
/// admissible for the disk. Throws NoPairingError, std::invalid_argument or
/// DegenerateImage.
Circle nested_disk(const SchottkyGroup& group, const Word& w, int disk);

/// Depth-|w| cover disk of a nonempty reduced word l1...lk: the image of
/// disk target(lk) under l1...l(k-1). Disks of depth k+1 nest in their
/// depth-k prefix.
Circle cover_disk(const SchottkyGroup& group, const Word& w);

/// All depth-k cover disks in lexicographic word order.
std::vector<Circle> cover_disks(const SchottkyGroup& group, int depth);
double max_cover_radius(const SchottkyGroup& group, int depth);

struct LimitSample {
  Complex point;
  Word word;
};

struct LimitSetSample {
  std::vector<LimitSample> points;
  int depth = 0;
  /// True when points are attracting fixed points because no pairing exists.
  bool from_fixed_points = false;
};

/// One point per depth-k reduced word: the center of the cover disk when a
/// pairing exists, the attracting fixed point of the word otherwise. Rank-1
/// groups always give their two fixed points.
LimitSetSample sample_limit_set(const SchottkyGroup& group, int depth);

/// Attracting fixed points of every depth-k word; these lie exactly in the
/// limit set.
std::vector<Complex> limit_points(const SchottkyGroup& group, int depth);

/// Checks that generator i maps `samples` points of the exterior of circle i
/// into the open disk i + g (ping-pong). Returns the first failing generator
/// or -1.
int ping_pong_violation(const SchottkyGroup& group, int samples = 64);

}  // namespace schottky
