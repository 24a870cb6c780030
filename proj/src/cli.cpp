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

#include "schottky/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "schottky/curve.hpp"
#include "schottky/errors.hpp"
#include "schottky/io.hpp"
#include "schottky/parallel.hpp"
#include "schottky/sampling.hpp"

namespace schottky {

using nlohmann::json;

int TheoremCheckReport::successes() const {
  int n = 0;
  for (const auto& e : entries) n += e.search.success() ? 1 : 0;
  return n;
}

std::uint64_t TheoremCheckReport::budget_used() const {
  std::uint64_t n = 0;
  for (const auto& e : entries) n += e.search.visited;
  return n;
}

TheoremCheckReport run_theorem_check(const TheoremCheckOptions& opts) {
  if (opts.samples < 1) throw std::invalid_argument("samples must be >= 1");
  const int max_draws = opts.max_draws > 0 ? opts.max_draws : 40 * opts.samples;
  std::mt19937_64 rng(opts.seed);
  TheoremCheckReport report;
  SearchOptions search;
  search.budget = opts.budget;
  while (static_cast<int>(report.entries.size()) < opts.samples && report.draws < max_draws) {
    ++report.draws;
    const std::vector<MoebiusMap> gens = random_fixed_point_generators(2, rng);
    double value = 0.0;
    try {
      value = exponent_of_convergence(SchottkyGroup(gens), opts.depth).value;
    } catch (const Error&) {
      ++report.rejected;
      continue;
    } catch (const std::invalid_argument&) {
      ++report.rejected;
      continue;
    }
    if (!(value < opts.threshold)) {
      ++report.filtered;
      continue;
    }
    TheoremCheckEntry entry{report.draws, gens, value, {}};
    entry.search = search_classical_generators(SchottkyGroup(gens), search);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

json theorem_report_to_json(const TheoremCheckReport& report, const TheoremCheckOptions& opts) {
  json results = json::array();
  json failures = json::array();
  for (const auto& e : report.entries) {
    json item{{"draw", e.draw}, {"dimension", e.dimension}, {"certified", e.search.success()},
              {"visited", e.search.visited}};
    if (e.search.success()) {
      item["margin"] = e.search.certificate().margin;
      item["search_depth"] = e.search.certificate().search_depth;
    }
    results.push_back(item);
    if (!e.search.success()) {
      json group = group_to_json(SchottkyGroup::unchecked(e.generators));
      failures.push_back(json{{"draw", e.draw},
                              {"dimension", e.dimension},
                              {"group", group},
                              {"seed", opts.seed},
                              {"report", failure_to_json(e.search.failure())}});
    }
  }
  const int passed = static_cast<int>(report.entries.size());
  return json{{"samples_requested", opts.samples},
              {"threshold", opts.threshold},
              {"draws", report.draws},
              {"rejected", report.rejected},
              {"filtered", report.filtered},
              {"passed", passed},
              {"successes", report.successes()},
              {"success_fraction", passed == 0 ? json(nullptr) : json(double(report.successes()) / passed)},
              {"budget_used", report.budget_used()},
              {"results", results},
              {"failures", failures}};
}

namespace {

struct Sink {
  std::string path;
  std::ostream& fallback;

  void write(const std::string& text) const {
    if (path.empty()) {
      fallback << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::ios_base::failure("cannot write " + path);
    f << text;
    if (!f) throw std::ios_base::failure("cannot write " + path);
  }
};

json with_config(json body, const ExperimentConfig& cfg) {
  body["config"] = cfg.to_json();
  return body;
}

int default_depth(DimensionMethod m) {
  switch (m) {
    case DimensionMethod::Exponent: return 8;
    case DimensionMethod::Transfer: return 6;
    case DimensionMethod::BoxCount: return 7;
  }
  return 8;
}

PolyCurve quasicircle_for(const SchottkyGroup& g, int depth, GeneratingCurve* zeta_out = nullptr) {
  const GeneratingCurve zeta = default_generating_curve(g);
  if (zeta_out) *zeta_out = zeta;
  return build_quasicircle(g, zeta, depth);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schottky group experiments: dimensions, quasi-circles and classical generators", kToolName};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);
  // Global flags may follow the subcommand.
  app.fallthrough();

  ExperimentConfig cfg;
  std::string out_path;
  app.add_flag("--deterministic", cfg.deterministic, "Serialize parallel work; outputs are byte-identical");
  app.add_option("--seed", cfg.seed, "Seed for random sampling");
  app.add_option("--out", out_path, "Write the primary output to this file instead of stdout");

  // group validate
  auto* group_cmd = app.add_subcommand("group", "Group document utilities");
  group_cmd->require_subcommand(1);
  std::string file;
  auto* validate = group_cmd->add_subcommand("validate", "Parse and validate a group document");
  validate->add_option("file", file, "Group JSON")->required();

  // dim
  auto* dim = app.add_subcommand("dim", "Estimate the limit-set dimension");
  std::string method = "exponent";
  int depth = -1;
  std::string trace_path;
  dim->add_option("file", file, "Group JSON")->required();
  dim->add_option("--method", method, "exponent, transfer or boxcount");
  dim->add_option("--depth", depth, "Word depth (default 8, 6, 7 by method)");
  dim->add_option("--trace", trace_path, "CSV of (s, partial_sum) samples");

  // limitset
  auto* limitset = app.add_subcommand("limitset", "Sample the limit set (CSV)");
  limitset->add_option("file", file, "Group JSON")->required();
  limitset->add_option("--depth", depth, "Word depth (default 6)");

  // quasicircle
  auto* quasi = app.add_subcommand("quasicircle", "Truncated quasi-circle (curve CSV)");
  quasi->add_option("file", file, "Group JSON with circles")->required();
  quasi->add_option("--depth", depth, "Refinement depth (default 4)");

  // frechet
  auto* frechet = app.add_subcommand("frechet", "Frechet distance between two closed curves");
  std::string file_b;
  bool no_length = false;
  double resolution = 0.0;
  frechet->add_option("a", file, "Curve CSV or JSON")->required();
  frechet->add_option("b", file_b, "Curve CSV or JSON")->required();
  frechet->add_flag("--no-length-term", no_length, "Omit the length difference");
  frechet->add_option("--resolution", resolution, "Sample spacing (default length/256 per curve)");

  // classical
  auto* classical = app.add_subcommand("classical", "Search for a classical generating set");
  classical->add_option("file", file, "Group JSON")->required();
  classical->add_option("--budget", cfg.budget, "Node budget");

  // singularity
  auto* singular = app.add_subcommand("singularity", "Classify a sequence of fundamental domains");
  singular->add_option("file", file, "JSON array of steps")->required();

  // deform
  auto* deform = app.add_subcommand("deform", "Multiplier-inflation path with dimension trace (CSV)");
  int steps = 20;
  deform->add_option("file", file, "Group JSON")->required();
  deform->add_option("--steps", steps, "Number of steps");
  deform->add_option("--depth", depth, "Exponent depth (default 7)");
  deform->add_option("--budget", cfg.budget, "Search budget per step (default 2000)");
  bool keep_going = false;
  deform->add_flag("--all-steps", keep_going, "Do not stop at the first certified step");

  // theorem-check
  auto* theorem = app.add_subcommand("theorem-check", "Random rank-2 groups below a dimension threshold");
  TheoremCheckOptions tc;
  theorem->add_option("--samples", tc.samples, "Groups that must pass the filter");
  theorem->add_option("--threshold", tc.threshold, "Dimension threshold");
  theorem->add_option("--budget", cfg.budget, "Search budget per group");
  theorem->add_option("--depth", depth, "Exponent depth for the filter (default 8)");
  theorem->add_option("--max-draws", tc.max_draws, "Cap on random draws (default 40 x samples)");

  // render
  auto* render = app.add_subcommand("render", "Layered SVG figure");
  std::string what = "limitset";
  render->add_option("file", file, "Group JSON")->required();
  render->add_option("--what", what, "limitset, quasicircle or circles")
      ->check(CLI::IsMember({"limitset", "quasicircle", "circles"}));
  render->add_option("--depth", depth, "Word depth (default 6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  cfg.out = out_path;
  set_deterministic(cfg.deterministic);
  const Sink sink{out_path, out};
  auto sub = [](CLI::App* c) { return c->parsed(); };

  try {
    if (sub(validate)) {
      cfg.command = "group validate";
      const GroupDocument doc = read_group_file(file);
      json body{{"valid", true}, {"rank", doc.group.rank()}, {"has_circles", doc.group.has_pairing()}};
      if (!doc.name.empty()) body["name"] = doc.name;
      if (!doc.provenance.empty()) body["provenance"] = doc.provenance;
      sink.write(with_config(body, cfg).dump(2) + "\n");
      return kExitOk;
    }
    if (sub(dim)) {
      cfg.command = "dim";
      const DimensionMethod m = parse_dimension_method(method);
      cfg.method = to_string(m);
      cfg.depth = depth >= 0 ? depth : default_depth(m);
      const GroupDocument doc = read_group_file(file);
      const DimensionEstimate est = estimate_dimension(doc.group, m, cfg.depth);
      if (!trace_path.empty()) {
        const DisplacementShells shells(doc.group, cfg.depth);
        std::ostringstream csv;
        csv << "# " << cfg.snapshot() << "\ns,partial_sum\n";
        csv.precision(17);
        for (int i = 0; i <= 40; ++i) {
          const double s = 0.05 * i;
          csv << s << "," << shells.truncation(s).partial_sum << "\n";
        }
        Sink{trace_path, out}.write(csv.str());
      }
      sink.write(with_config(estimate_to_json(est), cfg).dump(2) + "\n");
      return kExitOk;
    }
    if (sub(limitset)) {
      cfg.command = "limitset";
      cfg.depth = depth >= 0 ? depth : 6;
      const GroupDocument doc = read_group_file(file);
      std::ostringstream csv;
      write_limit_set_csv(csv, sample_limit_set(doc.group, cfg.depth), cfg);
      sink.write(csv.str());
      return kExitOk;
    }
    if (sub(quasi)) {
      cfg.command = "quasicircle";
      cfg.depth = depth >= 0 ? depth : 4;
      const GroupDocument doc = read_group_file(file);
      const PolyCurve curve = quasicircle_for(doc.group, cfg.depth);
      std::ostringstream csv;
      write_curve_csv(csv, curve, cfg);
      sink.write(csv.str());
      return kExitOk;
    }
    if (sub(frechet)) {
      cfg.command = "frechet";
      const PolyCurve a = read_curve_file(file);
      const PolyCurve b = read_curve_file(file_b);
      FrechetOptions fo;
      fo.length_term = !no_length;
      fo.resolution = resolution;
      const double d = frechet_distance(a, b, fo);
      json body{{"distance", d}, {"length_a", a.length()}, {"length_b", b.length()}, {"length_term", fo.length_term}};
      sink.write(with_config(body, cfg).dump(2) + "\n");
      return kExitOk;
    }
    if (sub(classical)) {
      cfg.command = "classical";
      const GroupDocument doc = read_group_file(file);
      SearchOptions so;
      so.budget = cfg.budget;
      const SearchResult r = search_classical_generators(doc.group, so);
      json body = r.success() ? json{{"certified", true}, {"certificate", certificate_to_json(r.certificate())}}
                              : json{{"certified", false}, {"failure", failure_to_json(r.failure())}};
      body["visited"] = r.visited;
      sink.write(with_config(body, cfg).dump(2) + "\n");
      return r.success() ? kExitOk : kExitBudget;
    }
    if (sub(singular)) {
      cfg.command = "singularity";
      const DomainSequence seq = parse_domain_sequence(read_text_file(file));
      sink.write(with_config(singularity_to_json(classify_domain_sequence(seq)), cfg).dump(2) + "\n");
      return kExitOk;
    }
    if (sub(deform)) {
      cfg.command = "deform";
      const GroupDocument doc = read_group_file(file);
      DeformOptions dopt;
      dopt.steps = steps;
      if (depth >= 0) dopt.depth = depth;
      cfg.depth = dopt.depth;
      cfg.method = "exponent";
      if (deform->count("--budget") == 0) cfg.budget = dopt.search_budget;
      dopt.search_budget = cfg.budget;
      dopt.stop_when_certified = !keep_going;
      const DeformResult r = deform_toward_classical(doc.group, dopt);
      if (r.warned) err << "warning: input dimension estimate is >= 1\n";
      std::ostringstream csv;
      csv << "# " << cfg.snapshot() << "\nstep,multipliers,dimension,certified,margin\n";
      csv.precision(17);
      for (const auto& s : r.path) {
        csv << s.step << ",";
        for (std::size_t i = 0; i < s.multipliers.size(); ++i)
        {
          const double im = s.multipliers[i].imag() == 0.0 ? 0.0 : s.multipliers[i].imag();
          csv << (i ? ";" : "") << s.multipliers[i].real() << (im < 0.0 ? "-" : "+") << std::abs(im) << "i";
        }
        csv << "," << s.dimension.value << "," << (s.certificate ? "true" : "false") << ","
            << (s.certificate ? s.certificate->margin : 0.0) << "\n";
      }
      sink.write(csv.str());
      return r.path.back().certificate ? kExitOk : kExitBudget;
    }
    if (sub(theorem)) {
      cfg.command = "theorem-check";
      tc.seed = cfg.seed;
      tc.budget = cfg.budget;
      if (depth >= 0) tc.depth = depth;
      cfg.depth = tc.depth;
      cfg.method = "exponent";
      const TheoremCheckReport r = run_theorem_check(tc);
      sink.write(with_config(theorem_report_to_json(r, tc), cfg).dump(2) + "\n");
      return r.successes() == static_cast<int>(r.entries.size()) ? kExitOk : kExitBudget;
    }
    if (sub(render)) {
      cfg.command = "render " + what;
      cfg.depth = depth >= 0 ? depth : 6;
      const GroupDocument doc = read_group_file(file);
      SvgLayers layers;
      if (doc.group.has_pairing()) layers.circles = doc.group.pairing()->circles;
      std::optional<PolyCurve> curve;
      if (what == "limitset") {
        for (const auto& p : sample_limit_set(doc.group, cfg.depth).points) layers.points.push_back(p.point);
      } else if (what == "quasicircle") {
        curve = quasicircle_for(doc.group, cfg.depth);
        layers.curve = &*curve;
      }
      std::ostringstream svg;
      write_svg(svg, layers, cfg);
      sink.write(svg.str());
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NonConvergedError& e) {
    err << "error: not converged: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const DegenerateFit& e) {
    err << "error: degenerate fit: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const DegenerateImage& e) {
    err << "error: degenerate image: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const OrderingError& e) {
    err << "error: ordering: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace schottky
