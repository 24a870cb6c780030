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

#include "schottky/group.hpp"

#include <algorithm>
#include <stdexcept>

#include "schottky/classical.hpp"
#include "schottky/errors.hpp"

namespace schottky {

SchottkyGroup::SchottkyGroup(std::vector<MoebiusMap> generators,
                             std::optional<CirclePairing> pairing)
    : generators_(std::move(generators)), pairing_(std::move(pairing)) {
  if (generators_.empty()) throw std::invalid_argument("a Schottky group needs rank >= 1");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (classify(generators_[i]) != MapClass::Loxodromic)
      throw NonLoxodromicError("generator " + std::to_string(i + 1) + " is " +
                               to_string(classify(generators_[i])));
  }
  if (pairing_) {
    if (pairing_->circles.size() != 2 * generators_.size())
      throw std::invalid_argument("pairing needs exactly 2g circles");
    verify_classical_domain(generators_, *pairing_);
  }
  build_letter_maps();
}

SchottkyGroup SchottkyGroup::unchecked(std::vector<MoebiusMap> generators,
                                       std::optional<CirclePairing> pairing) {
  SchottkyGroup g;
  g.generators_ = std::move(generators);
  g.pairing_ = std::move(pairing);
  g.build_letter_maps();
  return g;
}

void SchottkyGroup::build_letter_maps() {
  letter_maps_.clear();
  for (const auto& m : generators_) letter_maps_.push_back(m);
  for (const auto& m : generators_) letter_maps_.push_back(m.inverse());
}

const CirclePairing& SchottkyGroup::require_pairing() const {
  if (!pairing_) throw NoPairingError("operation requires a circle pairing");
  return *pairing_;
}

SchottkyGroup SchottkyGroup::conjugated(const MoebiusMap& u) const {
  const MoebiusMap uinv = u.inverse();
  std::vector<MoebiusMap> gens;
  for (const auto& m : generators_) gens.push_back(u * m * uinv);
  std::optional<CirclePairing> pairing;
  if (pairing_) {
    CirclePairing p;
    for (const auto& c : pairing_->circles) p.circles.push_back(image_circle(u, c));
    pairing = p;
  }
  return unchecked(std::move(gens), std::move(pairing));
}

MoebiusMap word_to_map(const SchottkyGroup& group, const Word& w) {
  if (!is_reduced(w, group.rank())) throw std::invalid_argument("word is not reduced");
  MoebiusMap m;
  for (Letter l : w.letters) m = m * group.letter_map(l);
  return m;
}

Circle nested_disk(const SchottkyGroup& group, const Word& w, int disk) {
  const CirclePairing& pairing = group.require_pairing();
  if (disk < 0 || disk >= 2 * group.rank()) throw std::invalid_argument("disk index out of range");
  if (!is_admissible_for_disk(w, disk))
    throw std::invalid_argument("word " + to_string(w) + " is not admissible for disk " +
                                std::to_string(disk + 1));
  if (w.empty()) return pairing.circles[disk];
  return image_circle(word_to_map(group, w), pairing.circles[disk]);
}

Circle cover_disk(const SchottkyGroup& group, const Word& w) {
  if (w.empty()) throw std::invalid_argument("cover disks are indexed by nonempty words");
  const CirclePairing& pairing = group.require_pairing();
  Word prefix{std::vector<Letter>(w.letters.begin(), w.letters.end() - 1)};
  return nested_disk(group, prefix, pairing.target_disk(w.back()));
}

std::vector<Circle> cover_disks(const SchottkyGroup& group, int depth) {
  if (depth < 1) throw std::invalid_argument("cover depth must be >= 1");
  const CirclePairing& pairing = group.require_pairing();
  std::vector<Circle> out;
  out.reserve(reduced_word_count(group.rank(), depth));
  // Walk prefixes of length depth-1 carrying the map, then image each
  // admissible target disk.
  auto emit = [&](const std::vector<Letter>& letters, const MoebiusMap& m) {
    for (Letter l = 0; l < 2 * group.rank(); ++l) {
      if (!letters.empty() && l == inverse_letter(letters.back(), group.rank())) continue;
      const Circle& base = pairing.circles[pairing.target_disk(l)];
      out.push_back(letters.empty() ? base : image_circle(m, base));
    }
  };
  if (depth == 1) {
    emit({}, MoebiusMap::identity());
    return out;
  }
  visit_words<MoebiusMap>(
      group.rank(), depth - 1, MoebiusMap::identity(),
      [&](const MoebiusMap& acc, Letter l) { return acc * group.letter_map(l); },
      [&](const std::vector<Letter>& letters, const MoebiusMap& m) {
        if (static_cast<int>(letters.size()) == depth - 1) emit(letters, m);
      });
  return out;
}

double max_cover_radius(const SchottkyGroup& group, int depth) {
  double r = 0.0;
  for (const auto& c : cover_disks(group, depth)) r = std::max(r, c.radius);
  return r;
}

LimitSetSample sample_limit_set(const SchottkyGroup& group, int depth) {
  if (depth < 1) throw std::invalid_argument("limit-set depth must be >= 1");
  LimitSetSample out;
  out.depth = depth;
  if (group.rank() == 1) {
    const FixedPoints fp = fixed_points(group.generators()[0]);
    out.from_fixed_points = true;
    if (fp.attracting.is_finite()) out.points.push_back({fp.attracting.value(), Word{{0}}});
    if (fp.repelling.is_finite()) out.points.push_back({fp.repelling.value(), Word{{1}}});
    return out;
  }
  const std::vector<Word> words = enumerate_reduced_words(group.rank(), depth);
  out.points.reserve(words.size());
  if (group.has_pairing()) {
    const std::vector<Circle> disks = cover_disks(group, depth);
    for (std::size_t i = 0; i < words.size(); ++i) out.points.push_back({disks[i].center, words[i]});
    return out;
  }
  out.from_fixed_points = true;
  for (const Word& w : words) {
    const FixedPoints fp = fixed_points(word_to_map(group, w));
    if (fp.attracting.is_finite()) out.points.push_back({fp.attracting.value(), w});
  }
  return out;
}

std::vector<Complex> limit_points(const SchottkyGroup& group, int depth) {
  std::vector<Complex> out;
  ReducedWordStream stream(group.rank(), depth);
  Word w;
  while (stream.next(w)) {
    const FixedPoints fp = fixed_points(word_to_map(group, w));
    if (fp.attracting.is_finite()) out.push_back(fp.attracting.value());
  }
  return out;
}

int ping_pong_violation(const SchottkyGroup& group, int samples) {
  const CirclePairing& pairing = group.require_pairing();
  const int g = group.rank();
  for (int i = 0; i < g; ++i) {
    const Circle& src = pairing.circles[i];
    const Circle& dst = pairing.circles[i + g];
    const MoebiusMap& m = group.generators()[i];
    const SpherePoint at_inf = m(SpherePoint::infinity());
    if (at_inf.is_infinite() || !dst.contains(at_inf.value())) return i;
    for (double scale : {1.0 + 1e-6, 1.5, 4.0}) {
      for (int k = 0; k < samples; ++k) {
        const Complex z = src.center + std::polar(src.radius * scale, 2.0 * kPi * k / samples);
        const SpherePoint w = m(z);
        if (w.is_infinite() || !dst.contains(w.value())) return i;
      }
    }
  }
  return -1;
}

}  // namespace schottky
