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
#include <limits>
#include <string>

#include "schottky/classical.hpp"
#include "schottky/errors.hpp"

namespace schottky {

ClassicalCertificate verify_classical_domain(const std::vector<MoebiusMap>& generators,
                                             const CirclePairing& pairing) {
  const int g = static_cast<int>(generators.size());
  if (g < 1 || static_cast<int>(pairing.circles.size()) != 2 * g)
    throw std::invalid_argument("need g generators and 2g circles");
  const auto& circles = pairing.circles;

  double margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 2 * g; ++i) {
    for (int j = i + 1; j < 2 * g; ++j) {
      const double gap = disk_gap(circles[i], circles[j]);
      if (!(gap > 0.0))
        throw ClassicalityViolation(ClassicalityViolation::Kind::Disjointness, i, j,
                                    "closed disks " + std::to_string(i + 1) + " and " +
                                        std::to_string(j + 1) + " intersect (gap " +
                                        std::to_string(gap) + ")");
      margin = std::min(margin, gap);
    }
  }

  for (int i = 0; i < g; ++i) {
    const MoebiusMap& m = generators[i];
    const Circle& src = circles[i];
    const Circle& dst = circles[i + g];
    Circle img;
    try {
      img = image_circle(m, src);
    } catch (const DegenerateImage& e) {
      throw ClassicalityViolation(ClassicalityViolation::Kind::Pairing, i, -1,
                                  "generator " + std::to_string(i + 1) + ": " + e.what());
    }
    const double scale = std::max(1.0, std::abs(dst.center));
    if (std::abs(img.center - dst.center) > 1e-8 * scale ||
        std::abs(img.radius - dst.radius) > 1e-8 * dst.radius)
      throw ClassicalityViolation(ClassicalityViolation::Kind::Pairing, i, -1,
                                  "generator " + std::to_string(i + 1) + " does not map circle " +
                                      std::to_string(i + 1) + " onto circle " +
                                      std::to_string(i + g + 1));

    // Exterior of circle i must land inside disk i+g: infinity plus rings of
    // samples outside circle i.
    auto inside_dst = [&](const SpherePoint& w) {
      return w.is_finite() && std::abs(w.value() - dst.center) < dst.radius * (1.0 + 1e-9);
    };
    bool ok = inside_dst(m(SpherePoint::infinity()));
    constexpr int kSamples = 64;
    for (double scale_out : {1.01, 1.5, 3.0}) {
      for (int k = 0; ok && k < kSamples; ++k) {
        const Complex z = src.center + std::polar(src.radius * scale_out, 2.0 * kPi * (k + 0.5) / kSamples);
        ok = inside_dst(m(z));
      }
    }
    if (!ok)
      throw ClassicalityViolation(ClassicalityViolation::Kind::Orientation, i, -1,
                                  "generator " + std::to_string(i + 1) +
                                      " does not map the exterior of circle " + std::to_string(i + 1) +
                                      " into disk " + std::to_string(i + g + 1));
  }

  ClassicalCertificate cert;
  cert.generators = generators;
  cert.pairing = pairing;
  cert.margin = margin;
  for (int i = 0; i < g; ++i) cert.witness_words.push_back(Word{{i}});
  return cert;
}

}  // namespace schottky
