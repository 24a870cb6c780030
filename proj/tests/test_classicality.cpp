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

#include <cmath>
#include <random>

#include "doctest.h"
#include "schottky/classical.hpp"
#include "schottky/errors.hpp"
#include "schottky/sampling.hpp"

using namespace schottky;

namespace {

CirclePairing four_circles(double r) {
  return CirclePairing{{Circle(-3.0, r), Circle(Complex(0.0, -3.0), r), Circle(3.0, r), Circle(Complex(0.0, 3.0), r)}};
}

DomainStep step(std::vector<DomainEntry> entries) { return DomainStep{std::move(entries), std::nullopt}; }

void check_witnesses(const SchottkyGroup& input, const ClassicalCertificate& cert) {
  REQUIRE(cert.witness_words.size() == cert.generators.size());
  for (std::size_t i = 0; i < cert.generators.size(); ++i) {
    const MoebiusMap w = word_to_map(input, cert.witness_words[i]);
    const double scale = std::abs(w.a()) + std::abs(w.b()) + std::abs(w.c()) + std::abs(w.d());
    CHECK(w.projectively_equal(cert.generators[i], 1e-7 * std::max(1.0, scale)));
  }
}

}  // namespace

TEST_CASE("verify classical domain") {
  const SchottkyGroup one = rank_one_group();
  CHECK(verify_classical_domain(one.generators(), one.require_pairing()).margin == doctest::Approx(4.0));

  const SchottkyGroup G = four_circle_group(1.0);
  const ClassicalCertificate c = verify_classical_domain(G.generators(), G.require_pairing());
  CHECK(c.margin == doctest::Approx(3.0 * std::sqrt(2.0) - 2.0));

  // Overlapping neighbours.
  const CirclePairing big = four_circles(2.2);
  const std::vector<MoebiusMap> gens = {pairing_map(big.circles[0], big.circles[2]),
                                        pairing_map(big.circles[1], big.circles[3])};
  try {
    verify_classical_domain(gens, big);
    FAIL("expected a violation");
  } catch (const ClassicalityViolation& v) {
    CHECK(v.kind() == ClassicalityViolation::Kind::Disjointness);
    REQUIRE(v.other() >= 0);
    CHECK(disk_gap(big.circles[v.index()], big.circles[v.other()]) < 0.0);
  }

  // Generators that do not map circle i onto circle i + g.
  const CirclePairing small = four_circles(1.0);
  const std::vector<MoebiusMap> wrong = {G.generators()[1], G.generators()[0]};
  try {
    verify_classical_domain(wrong, small);
    FAIL("expected a violation");
  } catch (const ClassicalityViolation& v) {
    CHECK(v.kind() == ClassicalityViolation::Kind::Pairing);
  }
}

TEST_CASE("extrapolation") {
  std::vector<double> x, t;
  for (int n = 1; n <= 12; ++n) {
    t.push_back(n);
    x.push_back(2.0 + 3.0 / n);
  }
  CHECK(extrapolate_limit(x, t) == doctest::Approx(2.0));
  CHECK_THROWS_AS(extrapolate_limit({1.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("singularity classification") {
  DomainSequence tangency, degeneration, collapse, constant;
  for (int n = 1; n <= 12; ++n) {
    const double e = 1.0 / n;
    tangency.steps.push_back(step({Circle(0.0, 1.0), Circle(2.0 + e, 1.0)}));
    degeneration.steps.push_back(step({Circle(0.0, 1.0), Circle(5.0, e)}));
    // Concentric circles whose radii merge.
    collapse.steps.push_back(step({Circle(0.0, 1.0), Circle(0.0, 1.0 + e)}));
    constant.steps.push_back(step({Circle(0.0, 1.0), Circle(5.0, 1.0)}));
  }

  const SingularityReport t = classify_domain_sequence(tangency);
  CHECK(t.kind == SingularityKind::Tangency);
  CHECK(t.indices == std::vector<int>{0, 1});
  CHECK(std::abs(t.point - Complex(1.0)) < 1e-6);
  CHECK(t.onset_step == 0);

  const SingularityReport d = classify_domain_sequence(degeneration);
  CHECK(d.kind == SingularityKind::Degeneration);
  CHECK(d.indices == std::vector<int>{1});
  CHECK(std::abs(d.point - Complex(5.0)) < 1e-6);

  const SingularityReport c = classify_domain_sequence(collapse);
  CHECK(c.kind == SingularityKind::Collapsing);
  CHECK(c.radius == doctest::Approx(1.0).epsilon(1e-6));

  CHECK(classify_domain_sequence(constant).kind == SingularityKind::None);

  // A circle already shrunk to a point.
  DomainSequence point = degeneration;
  point.steps.back().entries[1] = DegeneratePoint{5.0};
  CHECK(classify_domain_sequence(point).kind == SingularityKind::Degeneration);

  DomainSequence ragged = constant;
  ragged.steps[2].entries.pop_back();
  CHECK_THROWS_AS(classify_domain_sequence(ragged), InconsistentSequence);
  DomainSequence short_seq;
  short_seq.steps.assign(constant.steps.begin(), constant.steps.begin() + 2);
  CHECK_THROWS_AS(classify_domain_sequence(short_seq), std::invalid_argument);
}

TEST_CASE("search finds classical generators") {
  const SchottkyGroup G = four_circle_group(1.0);
  const SearchResult direct = search_classical_generators(G);
  REQUIRE(direct.success());
  CHECK(direct.certificate().search_depth == 0);
  check_witnesses(G, direct.certificate());

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<MoebiusMap> gens = G.generators();
    std::vector<Word> witness = {Word{{0}}, Word{{1}}};
    for (int k = 0; k < 3; ++k) random_nielsen_move(gens, witness, rng);
    const MoebiusMap u = random_conjugator(random_point_outside(G.require_pairing().circles, rng), rng);
    for (auto& m : gens) m = u * m * u.inverse();
    const SchottkyGroup scrambled(gens);
    const SearchResult r = search_classical_generators(scrambled, {.budget = 10000});
    REQUIRE(r.success());
    CHECK(r.visited <= 10000);
    CHECK(r.certificate().margin > 0.0);
    check_witnesses(scrambled, r.certificate());
  }

  // z -> 4z conjugated so that infinity is not fixed.
  const MoebiusMap u(1.0, 0.0, 1.0, 1.0);
  const SchottkyGroup cyclic({u * MoebiusMap::diagonal(2.0) * u.inverse()});
  const SearchResult rc = search_classical_generators(cyclic);
  REQUIRE(rc.success());
  check_witnesses(cyclic, rc.certificate());

  CHECK_THROWS_AS(search_classical_generators(SchottkyGroup::unchecked({MoebiusMap(1.0, 1.0, 0.0, 1.0)})),
                  NonLoxodromicError);
}

TEST_CASE("search reports failure within budget") {
  // Commuting generators share fixed points, so no pairing can separate them.
  const SchottkyGroup abelian({MoebiusMap::diagonal(2.0), MoebiusMap::diagonal(3.0)});
  const SearchResult r = search_classical_generators(abelian, {.budget = 50});
  REQUIRE_FALSE(r.success());
  CHECK(r.failure().visited <= 50);
  CHECK(r.failure().best_cost > 0.0);
  CHECK_FALSE(r.failure().reason.empty());
  CHECK(r.failure().best_generators.size() == 2);
  CHECK(r.failure().best_witness.size() == 2);
}

TEST_CASE("inflating a multiplier keeps the fixed points") {
  const MoebiusMap m = MoebiusMap::from_fixed_points(Complex(1.0, 1.0), -2.0, Complex(3.0, 1.0));
  const MoebiusMap big = inflate_multiplier(m, 2.0);
  CHECK(std::abs(multiplier(big)) == doctest::Approx(2.0 * std::abs(multiplier(m))));
  CHECK(std::arg(multiplier(big)) == doctest::Approx(std::arg(multiplier(m))));
  const FixedPoints a = fixed_points(m), b = fixed_points(big);
  CHECK(std::abs(a.attracting.value() - b.attracting.value()) < 1e-9);
  CHECK(std::abs(a.repelling.value() - b.repelling.value()) < 1e-9);
}

TEST_CASE("deformation") {
  const DeformResult done = deform_toward_classical(four_circle_group(1.0));
  REQUIRE(done.path.size() == 1);
  CHECK(done.path[0].step == 0);
  CHECK(done.path[0].certificate.has_value());

  DeformOptions opts;
  opts.steps = 20;
  opts.stop_when_certified = false;
  const DeformResult r = deform_toward_classical(four_circle_group(1.9), opts);
  REQUIRE(r.path.size() == 21);
  for (std::size_t i = 1; i < r.path.size(); ++i)
    CHECK(r.path[i].dimension.value <= r.path[i - 1].dimension.value + 0.02);
  CHECK(r.path.back().certificate.has_value());

  opts.steps = 5;
  const DeformResult cyc = deform_toward_classical(rank_one_group(), opts);
  for (const auto& s : cyc.path) CHECK(s.dimension.value <= 0.05);
}
