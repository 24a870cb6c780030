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
#include <string>
#include <vector>

#include "json.hpp"
#include "schottky/classical.hpp"
#include "schottky/curve.hpp"
#include "schottky/dimension.hpp"
#include "schottky/group.hpp"

namespace schottky {

inline constexpr const char* kToolName = "schottky-lab";
inline constexpr const char* kToolVersion = "0.1.0";

/// Parameters of one invocation; embedded in every output it produces.
struct ExperimentConfig {
  std::string command;
  int depth = 0;
  std::string method;
  std::uint64_t seed = 1;
  bool deterministic = false;
  std::uint64_t budget = 100000;
  std::string out;

  nlohmann::json to_json() const;
  /// Single-line snapshot used in CSV headers and SVG comments.
  std::string snapshot() const;
};

struct GroupDocument {
  SchottkyGroup group;
  std::string name;
  std::string provenance;
};

/// Matrices are four [re, im] pairs, row-major (a, b, c, d).
nlohmann::json matrix_to_json(const MoebiusMap& m);
MoebiusMap matrix_from_json(const nlohmann::json& j, const std::string& field);
nlohmann::json circle_to_json(const Circle& c);
Circle circle_from_json(const nlohmann::json& j, const std::string& field);

/// {"rank": g, "generators": [...], "circles": optional [...]}. Throws
/// ParseError naming the offending field (JSON-pointer style); syntax
/// errors report line and column.
GroupDocument parse_group_document(const std::string& text);
GroupDocument read_group_file(const std::string& path);
nlohmann::json group_to_json(const SchottkyGroup& group, const std::string& name = "");

nlohmann::json estimate_to_json(const DimensionEstimate& est);
nlohmann::json certificate_to_json(const ClassicalCertificate& cert);
nlohmann::json failure_to_json(const FailureReport& report);
nlohmann::json singularity_to_json(const SingularityReport& report);

/// Array of steps; a step is an array of entries or {"parameter": t,
/// "entries": [...]}; an entry is {"center": [x, y], "radius": r} or
/// {"point": [x, y]}.
DomainSequence parse_domain_sequence(const std::string& text);

/// "re,im,word" rows after a commented config header.
void write_limit_set_csv(std::ostream& os, const LimitSetSample& sample, const ExperimentConfig& cfg);
/// "piece_index,tag,x0,y0,x1,y1,cx,cy,r" with tags line, arc_ccw, arc_cw.
void write_curve_csv(std::ostream& os, const PolyCurve& curve, const ExperimentConfig& cfg);
/// Reads the curve CSV format, or JSON {"vertices": [[x, y], ...]} /
/// {"circle": {"center": [x, y], "radius": r}}.
PolyCurve read_curve_file(const std::string& path);
PolyCurve parse_curve_csv(const std::string& text);

struct SvgLayers {
  std::vector<Circle> circles;
  std::vector<Complex> points;
  const PolyCurve* curve = nullptr;
};

/// Layered SVG (circles, limit-set, curve groups) with a config comment.
void write_svg(std::ostream& os, const SvgLayers& layers, const ExperimentConfig& cfg);

std::string read_text_file(const std::string& path);

}  // namespace schottky
