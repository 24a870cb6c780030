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
#include "schottky/dimension.hpp"
#include "schottky/errors.hpp"
#include "schottky/sampling.hpp"
#include "schottky/words.hpp"

using namespace schottky;

namespace {

SchottkyGroup hex_packing_group() {
  const std::vector<Complex> centers = {0.0,
                                        1.0,
                                        std::polar(1.0, kPi / 3),
                                        std::polar(1.0, 2 * kPi / 3),
                                        -1.0,
                                        std::polar(1.0, 4 * kPi / 3),
                                        std::polar(1.0, 5 * kPi / 3),
                                        2.0,
                                        1.0 + std::polar(1.0, kPi / 3),
                                        1.0 + std::polar(1.0, -kPi / 3)};
  std::vector<Circle> circles;
  for (Complex c : centers) circles.emplace_back(c, 0.49);
  return classical_group(circles, std::vector<Complex>(5, 1.0));
}

}  // namespace

TEST_CASE("partial sums in closed form") {
  // diag(2, 1/2)^n moves the base point by 2n log 2.
  const SchottkyGroup cyclic = cyclic_diagonal_group();
  double expected = 0.0;
  for (int n = 1; n <= 10; ++n) expected += 2.0 * std::pow(4.0, -n);
  const SeriesTruncation t = poincare_partial_sum(cyclic, 1.0, 10);
  CHECK(t.partial_sum == doctest::Approx(expected).epsilon(1e-12));
  CHECK(t.last_shell == doctest::Approx(2.0 * std::pow(4.0, -10)).epsilon(1e-12));
  CHECK(std::abs(poincare_partial_sum(cyclic, 1.0, 30).partial_sum - 2.0 / 3.0) < 1e-12);

  const SchottkyGroup G = four_circle_group(1.0);
  for (int k = 1; k <= 6; ++k)
    CHECK(poincare_partial_sum(G, 0.0, k).partial_sum == doctest::Approx(double(reduced_word_count_upto(2, k) - 1)));
}

TEST_CASE("shell ratios stabilize") {
  const SchottkyGroup G = four_circle_group(1.0);
  const DisplacementShells shells(G, 10);
  std::vector<double> ratio;
  for (int k = 4; k <= 10; ++k) ratio.push_back(shells.shell_sum(0.5, k) / shells.shell_sum(0.5, k - 1));
  for (std::size_t i = 1; i < ratio.size(); ++i) CHECK(std::abs(ratio[i] - ratio[i - 1]) < 1e-3);
}

TEST_CASE("cyclic groups have dimension zero") {
  CHECK(exponent_of_convergence(cyclic_diagonal_group(), 8).value <= 0.05);
  CHECK(exponent_of_convergence(rank_one_group(), 8).value <= 0.05);
  CHECK(transfer_dimension(rank_one_group(), 8).value <= 0.02);
  CHECK(box_counting_dimension(rank_one_group(), 8).value <= 0.05);
  CHECK_THROWS_AS(transfer_dimension(cyclic_diagonal_group(), 4), NoPairingError);
}

TEST_CASE("four-circle group estimators agree") {
  const SchottkyGroup G = four_circle_group(1.0);
  const double e = exponent_of_convergence(G, 8).value;
  const double t = transfer_dimension(G, 6).value;
  const double b = box_counting_dimension(G, 7).value;
  CHECK(e > 0.0);
  CHECK(e < 1.0);
  CHECK(std::abs(e - t) <= 0.05);
  CHECK(std::abs(e - b) <= 0.1);
}

TEST_CASE("transfer refinement settles") {
  const SchottkyGroup G = four_circle_group(1.9);
  std::vector<double> v;
  for (int k = 3; k <= 8; ++k) v.push_back(transfer_dimension(G, k).value);
  for (std::size_t i = 2; i < v.size(); ++i)
    CHECK(std::abs(v[i] - v[i - 1]) <= std::abs(v[i - 1] - v[i - 2]) + 1e-9);
}

TEST_CASE("Fuchsian family") {
  double prev = 0.0;
  for (double r : {0.5, 1.0, 1.5, 1.9, 2.05}) {
    const double e = exponent_of_convergence(fuchsian_four_circle_group(r), 8).value;
    CHECK(e > prev);
    CHECK(e <= 1.05);
    prev = e;
  }
}

TEST_CASE("box counting on known sets") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::vector<double> scales = log_scales(0.1, 0.001, 12);

  CHECK(box_counting({Complex(0.0), Complex(1.0)}, log_scales(0.1, 0.001, 8)).value <= 0.05);

  std::vector<Complex> circle, square;
  for (int i = 0; i < 10000; ++i) circle.push_back(std::polar(1.0, 2.0 * kPi * u(rng)));
  // Dense enough that the finest boxes are all hit.
  for (int i = 0; i < 250000; ++i) square.emplace_back(u(rng), u(rng));
  CHECK(std::abs(box_counting(circle, log_scales(0.2, 0.002, 12)).value - 1.0) <= 0.1);
  CHECK(std::abs(box_counting(square, log_scales(0.5, 0.005, 8)).value - 2.0) <= 0.1);

  CHECK_THROWS_AS(box_counting({Complex(0.0)}, scales), std::invalid_argument);
  CHECK_THROWS_AS(box_counting(circle, log_scales(0.1, 0.05, 8)), std::invalid_argument);
}

TEST_CASE("rectifiability proxy") {
  CHECK(rectifiability_proxy(cyclic_diagonal_group(), 8) == RectifiabilityVerdict::ConvergesLikely);
  CHECK(rectifiability_proxy(four_circle_group(1.0), 8) == RectifiabilityVerdict::ConvergesLikely);
  const SchottkyGroup hex = hex_packing_group();
  CHECK(exponent_of_convergence(hex, 6).value > 1.0);
  CHECK(rectifiability_proxy(hex, 6) == RectifiabilityVerdict::DivergesLikely);
}

TEST_CASE("method names") {
  CHECK(parse_dimension_method("boxcount") == DimensionMethod::BoxCount);
  CHECK(to_string(DimensionMethod::Transfer) == "transfer");
  CHECK_THROWS(parse_dimension_method("hausdorff"));
}
