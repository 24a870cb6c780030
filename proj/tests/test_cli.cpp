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
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "schottky/circle.hpp"
#include "schottky/cli.hpp"

using namespace schottky;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "schottky-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fixture(const std::string& name) { return std::string(SCHOTTKY_FIXTURES) + "/" + name; }

std::string scratch(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "schottky_cli_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << content;
  return p.string();
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("group validate") {
  const Run ok = run({"group", "validate", fixture("four_circle.json")});
  CHECK(ok.code == kExitOk);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j.contains("config"));
  CHECK(j["config"]["command"] == "group validate");

  const Run syntax = run({"group", "validate", scratch("bad.json", "{\n  \"rank\": 1,\n  \"generators\": [\n")});
  CHECK(syntax.code == kExitInput);
  CHECK(syntax.err.find("line") != std::string::npos);

  const Run field = run({"group", "validate",
                         scratch("bad_gen.json", R"({"rank": 1, "generators": [[[1, 0], [0, 0], [0, 0]]]})")});
  CHECK(field.code == kExitInput);
  CHECK(field.err.find("/generators/0") != std::string::npos);

  const Run parabolic = run({"group", "validate",
                             scratch("parabolic.json", R"({"rank": 1, "generators": [[[1, 0], [1, 0], [0, 0], [1, 0]]]})")});
  CHECK(parabolic.code == kExitInput);

  CHECK(run({"group", "validate", fixture("missing.json")}).code == kExitInput);
  CHECK(run({"group", "validate", scratch("empty.json", "")}).code == kExitInput);
  CHECK(run({"nonsense"}).code == kExitInput);
}

TEST_CASE("dim") {
  const Run cyclic = run({"dim", fixture("cyclic.json"), "--depth", "8"});
  REQUIRE(cyclic.code == kExitOk);
  CHECK(nlohmann::json::parse(cyclic.out)["value"].get<double>() <= 0.05);

  const Run e = run({"dim", fixture("four_circle.json"), "--method", "exponent"});
  const Run b = run({"dim", fixture("four_circle.json"), "--method", "boxcount"});
  REQUIRE(e.code == kExitOk);
  REQUIRE(b.code == kExitOk);
  const double ev = nlohmann::json::parse(e.out)["value"].get<double>();
  const double bv = nlohmann::json::parse(b.out)["value"].get<double>();
  CHECK(std::abs(ev - bv) <= 0.1);

  // Box counting needs a pairing-free sample of more than one point.
  CHECK(run({"dim", fixture("cyclic.json"), "--method", "boxcount"}).code == kExitNumerical);
  CHECK(run({"dim", fixture("four_circle.json"), "--method", "bogus"}).code == kExitInput);

  const std::string trace = (fs::temp_directory_path() / "schottky_cli_tests" / "trace.csv").string();
  CHECK(run({"dim", fixture("four_circle.json"), "--trace", trace}).code == kExitOk);
  std::ifstream t(trace);
  std::string line;
  int rows = 0;
  while (std::getline(t, line))
    if (!line.empty() && line[0] != '#') ++rows;
  CHECK(rows > 2);
}

TEST_CASE("limit set and render") {
  const Run csv = run({"limitset", fixture("four_circle.json"), "--depth", "3"});
  REQUIRE(csv.code == kExitOk);
  CHECK(csv.out.rfind("# ", 0) == 0);
  CHECK(count(csv.out, "\n") == 36 + 3);  // snapshot, point count, header

  const Run svg = run({"render", fixture("four_circle.json"), "--what", "limitset", "--depth", "3"});
  REQUIRE(svg.code == kExitOk);
  CHECK(count(svg.out, "class=\"pt\"") == 36);
  CHECK(svg.out.find("id=\"circles\"") != std::string::npos);

  const Run quasi = run({"render", fixture("four_circle.json"), "--what", "quasicircle", "--depth", "2"});
  REQUIRE(quasi.code == kExitOk);
  const Run curve = run({"quasicircle", fixture("four_circle.json"), "--depth", "2"});
  REQUIRE(curve.code == kExitOk);
  CHECK(count(quasi.out, "<path") == count(curve.out, "\n") - 2);

  CHECK(run({"quasicircle", fixture("cyclic.json")}).code != kExitOk);
}

TEST_CASE("frechet") {
  const std::string a = scratch("c1.json", R"({"circle": {"center": [0, 0], "radius": 1}})");
  const std::string b = scratch("c2.json", R"({"circle": {"center": [0, 0], "radius": 2}})");
  const Run r = run({"frechet", a, b});
  REQUIRE(r.code == kExitOk);
  CHECK(std::abs(nlohmann::json::parse(r.out)["distance"].get<double>() - (1.0 + 2.0 * kPi)) <= 0.01);
  const Run n = run({"frechet", a, b, "--no-length-term"});
  CHECK(std::abs(nlohmann::json::parse(n.out)["distance"].get<double>() - 1.0) <= 0.01);
}

TEST_CASE("classical and singularity") {
  const Run ok = run({"classical", fixture("four_circle.json")});
  CHECK(ok.code == kExitOk);
  const std::string abelian =
      scratch("abelian.json", R"({"rank": 2, "generators": [[[2, 0], [0, 0], [0, 0], [0.5, 0]],
                                                            [[3, 0], [0, 0], [0, 0], [0.333333333333, 0]]]})");
  CHECK(run({"classical", abelian, "--budget", "20"}).code == kExitBudget);

  std::string seq = "[";
  for (int n = 1; n <= 10; ++n) {
    if (n > 1) seq += ",";
    seq += R"([{"center": [0, 0], "radius": 1}, {"center": [5, 0], "radius": )" + std::to_string(1.0 / n) + "}]";
  }
  seq += "]";
  const Run s = run({"singularity", scratch("seq.json", seq)});
  REQUIRE(s.code == kExitOk);
  const auto j = nlohmann::json::parse(s.out);
  CHECK(j["kind"] == "degeneration");
  CHECK(j["indices"] == nlohmann::json::array({2}));
}

TEST_CASE("theorem-check and determinism") {
  const Run none = run({"theorem-check", "--threshold", "0", "--samples", "2", "--max-draws", "3"});
  CHECK(none.code == kExitOk);
  CHECK(nlohmann::json::parse(none.out)["entries"].empty());

  const std::vector<std::string> args = {"theorem-check", "--samples", "2", "--seed", "4", "--deterministic"};
  const Run first = run(args), second = run(args);
  CHECK(first.code == kExitOk);
  CHECK(first.out == second.out);

  const Run deform = run({"deform", fixture("near_touching.json"), "--steps", "4", "--all-steps"});
  CHECK(deform.code == kExitOk);
  CHECK(count(deform.out, "\n") >= 5);
}

TEST_CASE("output file") {
  const std::string path = (fs::temp_directory_path() / "schottky_cli_tests" / "out.json").string();
  const Run r = run({"group", "validate", fixture("rank_one.json"), "--out", path});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream f(path);
  CHECK(nlohmann::json::parse(f)["config"]["out"] == path);
}
