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

#include "schottky/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "schottky/errors.hpp"

namespace schottky {

using nlohmann::json;

namespace {

std::string num(double v, int digits = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

double number_at(const json& j, const std::string& field) {
  if (!j.is_number()) throw ParseError(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(field, "expected a finite number");
  return v;
}

Complex complex_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) throw ParseError(field, "expected [re, im]");
  return {number_at(j[0], field + "/0"), number_at(j[1], field + "/1")};
}

const json& member(const json& j, const std::string& key, const std::string& field) {
  if (!j.is_object()) throw ParseError(field, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(field + "/" + key, "missing field");
  return *it;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Byte offset to line and column.
    const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const std::size_t line = 1 + std::count(text.begin(), text.begin() + pos, '\n');
    const std::size_t nl = text.rfind('\n', pos == 0 ? 0 : pos - 1);
    const std::size_t col = nl == std::string::npos || pos == 0 ? pos + 1 : pos - nl;
    throw ParseError("", "JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
}

}  // namespace

json ExperimentConfig::to_json() const {
  return json{{"tool", kToolName},
              {"version", kToolVersion},
              {"command", command},
              {"depth", depth},
              {"method", method},
              {"seed", seed},
              {"deterministic", deterministic},
              {"budget", budget},
              {"out", out},
              {"tolerances",
               {{"projective_equality", 1e-9},
                {"exponent_bisection", 1e-3},
                {"transfer_spectral", 1e-4},
                {"pairing_match", 1e-8},
                {"singularity", 1e-6}}}};
}

std::string ExperimentConfig::snapshot() const { return to_json().dump(); }

json matrix_to_json(const MoebiusMap& m) {
  json out = json::array();
  for (Complex e : m.entries()) out.push_back(complex_to_json(e));
  return out;
}

MoebiusMap matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 4) throw ParseError(field, "expected four [re, im] entries (row-major a, b, c, d)");
  Complex e[4];
  for (int k = 0; k < 4; ++k) e[k] = complex_from_json(j[k], field + "/" + std::to_string(k));
  try {
    return MoebiusMap(e[0], e[1], e[2], e[3]);
  } catch (const std::invalid_argument&) {
    throw ParseError(field, "matrix is singular");
  }
}

json circle_to_json(const Circle& c) { return json{{"center", complex_to_json(c.center)}, {"radius", c.radius}}; }

Circle circle_from_json(const json& j, const std::string& field) {
  const Complex center = complex_from_json(member(j, "center", field), field + "/center");
  const double r = number_at(member(j, "radius", field), field + "/radius");
  if (!(r > 0.0)) throw ParseError(field + "/radius", "radius must be positive");
  return Circle(center, r);
}

GroupDocument parse_group_document(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw ParseError("", "empty group document");
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("", "group document must be an object");
  const json& gens = member(doc, "generators", "");
  if (!gens.is_array() || gens.empty()) throw ParseError("/generators", "expected a nonempty array");
  std::vector<MoebiusMap> maps;
  for (std::size_t i = 0; i < gens.size(); ++i) maps.push_back(matrix_from_json(gens[i], "/generators/" + std::to_string(i)));
  if (doc.contains("rank")) {
    const json& r = doc["rank"];
    if (!r.is_number_integer() || r.get<long long>() != static_cast<long long>(maps.size()))
      throw ParseError("/rank", "rank must equal the number of generators");
  }
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (classify(maps[i]) != MapClass::Loxodromic)
      throw ParseError("/generators/" + std::to_string(i), "generator is " + to_string(classify(maps[i])) +
                                                               ", expected loxodromic");
  std::optional<CirclePairing> pairing;
  if (doc.contains("circles") && !doc["circles"].is_null()) {
    const json& cs = doc["circles"];
    if (!cs.is_array() || cs.size() != 2 * maps.size()) throw ParseError("/circles", "expected 2g circles");
    CirclePairing p;
    for (std::size_t i = 0; i < cs.size(); ++i) p.circles.push_back(circle_from_json(cs[i], "/circles/" + std::to_string(i)));
    pairing = p;
  }
  GroupDocument out{SchottkyGroup::unchecked(maps), "", ""};
  try {
    out.group = SchottkyGroup(maps, pairing);
  } catch (const ClassicalityViolation& e) {
    throw ParseError("/circles/" + std::to_string(e.index()), e.what());
  }
  for (const char* key : {"name", "provenance"}) {
    if (!doc.contains(key)) continue;
    if (!doc[key].is_string()) throw ParseError(std::string("/") + key, "expected a string");
    (std::string(key) == "name" ? out.name : out.provenance) = doc[key].get<std::string>();
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupDocument read_group_file(const std::string& path) { return parse_group_document(read_text_file(path)); }

json group_to_json(const SchottkyGroup& group, const std::string& name) {
  json out{{"rank", group.rank()}, {"generators", json::array()}};
  for (const auto& m : group.generators()) out["generators"].push_back(matrix_to_json(m));
  if (group.has_pairing()) {
    out["circles"] = json::array();
    for (const auto& c : group.pairing()->circles) out["circles"].push_back(circle_to_json(c));
  }
  if (!name.empty()) out["name"] = name;
  return out;
}

json estimate_to_json(const DimensionEstimate& est) {
  return json{{"method", to_string(est.method)}, {"value", est.value}, {"depth", est.depth}, {"residual", est.residual}};
}

json certificate_to_json(const ClassicalCertificate& cert) {
  json out{{"generators", json::array()}, {"circles", json::array()}, {"margin", cert.margin},
           {"witness_words", json::array()}, {"search_depth", cert.search_depth}};
  for (const auto& m : cert.generators) out["generators"].push_back(matrix_to_json(m));
  for (const auto& c : cert.pairing.circles) out["circles"].push_back(circle_to_json(c));
  for (const auto& w : cert.witness_words) out["witness_words"].push_back(to_string(w));
  return out;
}

json failure_to_json(const FailureReport& report) {
  json out{{"reason", report.reason}, {"best_cost", std::isfinite(report.best_cost) ? json(report.best_cost) : json(nullptr)},
           {"visited", report.visited}, {"best_generators", json::array()}, {"best_witness", json::array()}};
  for (const auto& m : report.best_generators) out["best_generators"].push_back(matrix_to_json(m));
  for (const auto& w : report.best_witness) out["best_witness"].push_back(to_string(w));
  return out;
}

json singularity_to_json(const SingularityReport& report) {
  json out{{"kind", to_string(report.kind)}, {"indices", json::array()}, {"onset_step", report.onset_step}};
  for (int i : report.indices) out["indices"].push_back(i + 1);
  if (report.kind != SingularityKind::None) out["point"] = complex_to_json(report.point);
  if (report.kind == SingularityKind::Collapsing) out["radius"] = report.radius;
  return out;
}

DomainSequence parse_domain_sequence(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_array()) throw ParseError("", "expected an array of steps");
  DomainSequence seq;
  for (std::size_t s = 0; s < doc.size(); ++s) {
    const std::string field = "/" + std::to_string(s);
    const json& step = doc[s];
    DomainStep out;
    const json* entries = &step;
    std::string efield = field;
    if (step.is_object()) {
      entries = &member(step, "entries", field);
      efield = field + "/entries";
      if (step.contains("parameter")) out.parameter = number_at(step["parameter"], field + "/parameter");
    }
    if (!entries->is_array()) throw ParseError(efield, "expected an array of entries");
    for (std::size_t i = 0; i < entries->size(); ++i) {
      const json& e = (*entries)[i];
      const std::string f = efield + "/" + std::to_string(i);
      if (e.is_object() && e.contains("point")) {
        out.entries.push_back(DegeneratePoint{complex_from_json(e["point"], f + "/point")});
      } else {
        out.entries.push_back(circle_from_json(e, f));
      }
    }
    seq.steps.push_back(std::move(out));
  }
  return seq;
}

void write_limit_set_csv(std::ostream& os, const LimitSetSample& sample, const ExperimentConfig& cfg) {
  os << "# " << cfg.snapshot() << "\n";
  os << "# points " << sample.points.size() << (sample.from_fixed_points ? " from fixed points" : " from cover disks")
     << "\n";
  os << "re,im,word\n";
  for (const auto& p : sample.points) os << num(p.point.real()) << "," << num(p.point.imag()) << "," << to_string(p.word) << "\n";
}

void write_curve_csv(std::ostream& os, const PolyCurve& curve, const ExperimentConfig& cfg) {
  os << "# " << cfg.snapshot() << "\n";
  os << "piece_index,tag,x0,y0,x1,y1,cx,cy,r\n";
  const auto& pieces = curve.pieces();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Piece& p = pieces[i];
    os << i << "," << (p.is_arc() ? (p.ccw() ? "arc_ccw" : "arc_cw") : "line") << "," << num(p.start.real()) << ","
       << num(p.start.imag()) << "," << num(p.end.real()) << "," << num(p.end.imag());
    if (p.is_arc()) os << "," << num(p.center.real()) << "," << num(p.center.imag()) << "," << num(p.radius);
    os << "\n";
  }
}

PolyCurve parse_curve_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Piece> pieces;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#' || line.rfind("piece_index", 0) == 0) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    const std::string field = "line " + std::to_string(lineno);
    auto value = [&](std::size_t k) {
      try {
        std::size_t used = 0;
        const double v = std::stod(cells.at(k), &used);
        if (used != cells[k].size() || !std::isfinite(v)) throw std::invalid_argument("bad");
        return v;
      } catch (const std::exception&) {
        throw ParseError(field, "column " + std::to_string(k + 1) + " is not a number");
      }
    };
    if (cells.size() < 6) throw ParseError(field, "expected piece_index,tag,x0,y0,x1,y1[,cx,cy,r]");
    const Complex a(value(2), value(3)), b(value(4), value(5));
    const std::string& tag = cells[1];
    if (tag == "line") {
      pieces.push_back(Piece::line(a, b));
    } else if (tag == "arc_ccw" || tag == "arc_cw") {
      if (cells.size() < 9) throw ParseError(field, "arc needs cx,cy,r");
      const double r = value(8);
      if (!(r > 0.0)) throw ParseError(field, "arc radius must be positive");
      pieces.push_back(Piece::arc(Complex(value(6), value(7)), r, a, b, tag == "arc_ccw"));
    } else {
      throw ParseError(field, "unknown piece tag '" + tag + "'");
    }
  }
  try {
    return PolyCurve(std::move(pieces));
  } catch (const std::invalid_argument& e) {
    throw ParseError("", e.what());
  }
}

PolyCurve read_curve_file(const std::string& path) {
  const std::string text = read_text_file(path);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    const json doc = parse_json(text);
    if (doc.is_object() && doc.contains("circle")) {
      const Circle c = circle_from_json(doc["circle"], "/circle");
      return PolyCurve::circle(c.center, c.radius, 64);
    }
    const json& vs = member(doc, "vertices", "");
    if (!vs.is_array() || vs.size() < 3) throw ParseError("/vertices", "expected at least three vertices");
    std::vector<Complex> pts;
    for (std::size_t i = 0; i < vs.size(); ++i) pts.push_back(complex_from_json(vs[i], "/vertices/" + std::to_string(i)));
    try {
      return PolyCurve::polygon(pts);
    } catch (const std::invalid_argument& e) {
      throw ParseError("/vertices", e.what());
    }
  }
  return parse_curve_csv(text);
}

void write_svg(std::ostream& os, const SvgLayers& layers, const ExperimentConfig& cfg) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  auto grow = [&](Complex z, double pad) {
    xmin = std::min(xmin, z.real() - pad);
    xmax = std::max(xmax, z.real() + pad);
    ymin = std::min(ymin, z.imag() - pad);
    ymax = std::max(ymax, z.imag() + pad);
  };
  for (const auto& c : layers.circles) grow(c.center, c.radius);
  for (Complex z : layers.points) grow(z, 0.0);
  if (layers.curve)
    for (const auto& b : layers.curve->bounds()) grow({b[0], b[1]}, 0.0), grow({b[2], b[3]}, 0.0);
  if (xmin > xmax) xmin = ymin = -1.0, xmax = ymax = 1.0;
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double pad = 0.05 * span;
  const double dot = 0.002 * span;
  const double stroke = 0.001 * span;

  std::string snapshot = cfg.snapshot();
  std::replace(snapshot.begin(), snapshot.end(), '-', '_');  // "--" is not allowed in comments
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<!-- " << kToolName << " " << kToolVersion << " " << snapshot << " -->\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(xmin - pad, 9) << " " << num(-(ymax + pad), 9) << " "
     << num(xmax - xmin + 2 * pad, 9) << " " << num(ymax - ymin + 2 * pad, 9) << "\">\n";
  os << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"" << num(stroke, 6) << "\">\n";
  os << "<g id=\"circles\" stroke=\"#4a6fa5\">\n";
  for (const auto& c : layers.circles)
    os << "<circle cx=\"" << num(c.center.real(), 12) << "\" cy=\"" << num(c.center.imag(), 12) << "\" r=\""
       << num(c.radius, 12) << "\"/>\n";
  os << "</g>\n<g id=\"limit-set\" fill=\"#b03a2e\" stroke=\"none\">\n";
  for (Complex z : layers.points)
    os << "<circle class=\"pt\" cx=\"" << num(z.real(), 12) << "\" cy=\"" << num(z.imag(), 12) << "\" r=\""
       << num(dot, 6) << "\"/>\n";
  os << "</g>\n<g id=\"curve\" stroke=\"#1e8449\">\n";
  if (layers.curve) {
    for (const auto& p : layers.curve->pieces()) {
      os << "<path d=\"M " << num(p.start.real(), 12) << " " << num(p.start.imag(), 12) << " ";
      if (p.is_arc()) {
        os << "A " << num(p.radius, 12) << " " << num(p.radius, 12) << " 0 " << (std::abs(p.sweep) > kPi ? 1 : 0) << " "
           << (p.ccw() ? 1 : 0) << " ";
      } else {
        os << "L ";
      }
      os << num(p.end.real(), 12) << " " << num(p.end.imag(), 12) << "\"/>\n";
    }
  }
  os << "</g>\n</g>\n</svg>\n";
}

}  // namespace schottky
