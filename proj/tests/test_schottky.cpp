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
#include <random>

#include "doctest.h"
#include "schottky/errors.hpp"
#include "schottky/group.hpp"
#include "schottky/sampling.hpp"

using namespace schottky;

namespace {

// Every string over 2g letters, filtered for free reduction.
std::vector<Word> brute_force_reduced(int g, int k) {
  std::vector<Word> out;
  std::vector<Letter> w(k, 0);
  for (;;) {
    bool ok = true;
    for (int i = 0; i + 1 < k; ++i) ok = ok && w[i + 1] != (w[i] + g) % (2 * g);
    if (ok) out.push_back(Word{w});
    int pos = k - 1;
    while (pos >= 0 && ++w[pos] == 2 * g) w[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

}  // namespace

TEST_CASE("reduced word enumeration") {
  CHECK(enumerate_reduced_words(2, 1).size() == 4);
  CHECK(enumerate_reduced_words(2, 3).size() == 36);
  for (int g = 1; g <= 3; ++g) {
    for (int k = 1; k <= 5; ++k) {
      const auto words = enumerate_reduced_words(g, k);
      CHECK(words == brute_force_reduced(g, k));
      CHECK(words.size() == reduced_word_count(g, k));
    }
  }
  for (int k = 6; k <= 8; ++k) {
    const auto words = enumerate_reduced_words(2, k);
    CHECK(words.size() == reduced_word_count(2, k));
    CHECK(std::all_of(words.begin(), words.end(), [](const Word& w) { return is_reduced(w, 2); }));
  }
}

TEST_CASE("word algebra") {
  const Word a = parse_word("1.2", 2);
  CHECK(a.letters == std::vector<Letter>{0, 1});
  CHECK(to_string(a) == "1.2");
  CHECK(to_string(Word{}) == "e");
  CHECK(multiply(a, inverse(a, 2), 2).empty());
  CHECK_FALSE(is_reduced(parse_word("1.3", 2), 2));  // 3 is the inverse of 1
  CHECK_THROWS(parse_word("1.5", 2));
}

TEST_CASE("word_to_map") {
  const SchottkyGroup G = four_circle_group(1.0);
  CHECK(word_to_map(G, Word{}).projectively_equal(MoebiusMap::identity()));
  CHECK_THROWS_AS(word_to_map(G, Word{{0, 2}}), std::invalid_argument);

  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> len(1, 4), letter(0, 3);
  for (int i = 0; i < 100; ++i) {
    Word u, v;
    for (int k = len(rng); k > 0; --k) u.letters.push_back(letter(rng));
    for (int k = len(rng); k > 0; --k) v.letters.push_back(letter(rng));
    Word uv = u;
    uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
    if (!is_reduced(uv, 2)) continue;
    const MoebiusMap lhs = word_to_map(G, uv);
    const MoebiusMap rhs = word_to_map(G, u) * word_to_map(G, v);
    CHECK(lhs.projectively_equal(rhs, 1e-9 * std::max(1.0, std::abs(lhs.a()) + std::abs(lhs.b()))));
  }
}

TEST_CASE("disk admissibility") {
  CHECK_FALSE(is_admissible_for_disk(Word{{0}}, 0));
  CHECK(is_admissible_for_disk(Word{{1}}, 0));
  int admissible = 0;
  for (const Word& w : enumerate_reduced_words(2, 2)) admissible += is_admissible_for_disk(w, 0) ? 1 : 0;
  CHECK(admissible == 9);
}

TEST_CASE("nested disks") {
  const SchottkyGroup G = four_circle_group(1.0);
  for (int i = 0; i < 4; ++i) {
    const Circle c = nested_disk(G, Word{}, i);
    CHECK(std::abs(c.center - G.pairing()->circles[i].center) < 1e-15);
  }
  // Depth-k cover disks nest in the disk of their prefix.
  for (int k = 2; k <= 5; ++k) {
    for (const Word& w : enumerate_reduced_words(2, k)) {
      Word parent = w;
      parent.letters.pop_back();
      CHECK(circle_inside(cover_disk(G, w), cover_disk(G, parent), 1e-12));
    }
  }
  // Geometric decay of the largest radius.
  double prev = max_cover_radius(G, 1);
  for (int k = 2; k <= 6; ++k) {
    const double r = max_cover_radius(G, k);
    CHECK(r <= 0.5 * prev);
    prev = r;
  }
}

TEST_CASE("limit set sample") {
  const SchottkyGroup cyclic = rank_one_group();
  for (int k : {1, 4, 7}) {
    const LimitSetSample s = sample_limit_set(cyclic, k);
    REQUIRE(s.points.size() == 2);
    const FixedPoints fp = fixed_points(cyclic.generators()[0]);
    for (const auto& p : s.points)
      CHECK(std::min(std::abs(p.point - fp.attracting.value()), std::abs(p.point - fp.repelling.value())) < 1e-12);
  }

  const SchottkyGroup G = four_circle_group(1.0);
  const int k = 5;
  const LimitSetSample s = sample_limit_set(G, k);
  CHECK(s.points.size() == reduced_word_count(2, k));
  const std::vector<Circle> disks = cover_disks(G, k);
  for (const auto& p : s.points)
    CHECK(std::any_of(disks.begin(), disks.end(), [&](const Circle& c) { return c.contains(p.point); }));

  // A generator moves a depth-k disk into a disk of depth k - 1 or k + 1.
  const double eps = max_cover_radius(G, k - 1);
  for (const auto& m : G.generators()) {
    for (std::size_t i = 0; i < s.points.size(); i += 7) {
      const Complex w = m(s.points[i].point).value();
      double best = 1e300;
      for (const auto& q : s.points) best = std::min(best, std::abs(q.point - w));
      CHECK(best <= eps);
    }
  }
}

TEST_CASE("group validation") {
  CHECK_THROWS_AS(SchottkyGroup({MoebiusMap(1.0, 1.0, 0.0, 1.0)}), NonLoxodromicError);
  std::vector<Circle> overlapping = {Circle(-1.0, 1.5), Circle(1.0, 1.5)};
  CHECK_THROWS(classical_group(overlapping, {1.0}));
}
