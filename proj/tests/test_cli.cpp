// Copyright 2026 The GazeVal Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gazeval/cli.hpp"
#include "gazeval/config.hpp"
#include "gazeval/errors.hpp"
#include "gazeval/fixation.hpp"
#include "gazeval/saliency.hpp"
#include "gazeval/simulate.hpp"

namespace {

namespace fs = std::filesystem;
using namespace gazeval;

int run_cli(std::initializer_list<std::string> args) {
  std::vector<std::string> full{"gazeval"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const std::string& s : full) argv.push_back(s.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << content;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name)
      : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

// Two steady clusters separated by a large jump: two clean fixations.
std::string two_cluster_csv() {
  std::ostringstream out;
  out << "t_ms,lx,ly,rx,ry,lvalid,rvalid\n";
  for (int i = 0; i < 100; ++i) {
    out << i * 2 << ",400.0,300.0,400.0,300.0,1,1\n";
  }
  for (int i = 0; i < 100; ++i) {
    out << 200 + i * 2 << ",1400.0,800.0,1400.0,800.0,1,1\n";
  }
  return out.str();
}

std::map<std::string, std::string> csv_row_values(const std::string& text,
                                                  int value_col) {
  std::map<std::string, std::string> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
      if (c == ',') {
        fields.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    fields.push_back(cur);
    rows[fields[0] + "/" + fields[2]] = fields[static_cast<std::size_t>(value_col)];
  }
  return rows;
}

}  // namespace

TEST_CASE("config json parsing and hashing") {
  const Config defaults = parse_config("{}");
  CHECK(defaults.screen.width_px == 1920.0);
  CHECK(params_hash(defaults).size() == 16);
  CHECK(params_hash(defaults) == params_hash(Config{}));

  const Config custom = parse_config(R"({"saliency": {"sigma_deg": 2.0}})");
  CHECK(custom.saliency.sigma_deg == 2.0);
  CHECK(params_hash(custom) != params_hash(defaults));

  // Round trip through the serializer preserves the hash.
  const Config again = parse_config(config_to_json(custom));
  CHECK(params_hash(again) == params_hash(custom));

  CHECK_THROWS_AS(parse_config(R"({"salience": {}})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"saliency": {"sigma_deg": -1}})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"saliency": {"mask_threshold": 1.0}})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config("not json"), ConfigError);
  CHECK_THROWS_AS(load_config_file("/nonexistent/config.json"), IoError);
}

TEST_CASE("fixations command writes a scanpath") {
  TempDir dir("gazeval_cli_fix");
  write_file(dir.path / "gaze.csv", two_cluster_csv());
  const auto out = (dir.path / "fix.jsonl").string();

  CHECK(run_cli({"fixations", "--in", (dir.path / "gaze.csv").string(),
                 "--out", out, "--stimulus", "stim_07", "--reader", "reader_03",
                 "--task", "VTT"}) == 0);

  const auto loaded = load_scanpath_jsonl(out);
  CHECK(loaded.scanpath.stimulus_id == "stim_07");
  CHECK(loaded.scanpath.reader_id == "reader_03");
  CHECK(loaded.scanpath.task == Task::VTT);
  CHECK(loaded.scanpath.fixations.size() == 2);
  CHECK(loaded.params_hash == params_hash(Config{}));
}

TEST_CASE("fixations command error codes") {
  TempDir dir("gazeval_cli_fix_err");
  write_file(dir.path / "gaze.csv", two_cluster_csv());
  write_file(dir.path / "broken.csv", "not,a,gaze,file\n");
  const auto out = (dir.path / "fix.jsonl").string();

  // Missing input file: io error.
  CHECK(run_cli({"fixations", "--in", (dir.path / "missing.csv").string(),
                 "--out", out}) == 4);
  // Malformed content: parse error.
  CHECK(run_cli({"fixations", "--in", (dir.path / "broken.csv").string(),
                 "--out", out}) == 2);
  // Unknown task name: parse error.
  CHECK(run_cli({"fixations", "--in", (dir.path / "gaze.csv").string(),
                 "--out", out, "--task", "Triage"}) == 2);
  // Missing required flag: command-line error.
  CHECK(run_cli({"fixations", "--in", (dir.path / "gaze.csv").string()}) == 2);
}

TEST_CASE("saliency command writes map, sidecar, and mask") {
  TempDir dir("gazeval_cli_sal");
  write_file(dir.path / "gaze.csv", two_cluster_csv());
  const auto fix = (dir.path / "fix.jsonl").string();
  REQUIRE(run_cli({"fixations", "--in", (dir.path / "gaze.csv").string(),
                   "--out", fix}) == 0);

  const auto map_path = (dir.path / "map.pgm").string();
  const auto mask_path = (dir.path / "mask.pgm").string();
  CHECK(run_cli({"saliency", "--in", fix, "--map", map_path, "--mask", mask_path,
                 "--normalize", "sum"}) == 0);

  const AttentionMap map = load_map_pgm(map_path);
  CHECK(map.width() == 512);
  CHECK(map.max_cell() > 0.0);

  const auto sidecar = nlohmann::json::parse(read_file(map_path + ".json"));
  CHECK(sidecar.at("normalization") == "sum_one");
  CHECK(sidecar.at("params_hash") == params_hash(Config{}));

  const AttentionMap mask = load_map_pgm(mask_path);
  double on = 0.0;
  for (double v : mask.cells()) on += v;
  CHECK(on > 0.0);
  CHECK(on < static_cast<double>(mask.size()));

  CHECK(run_cli({"saliency", "--in", fix, "--map", map_path,
                 "--normalize", "sideways"}) == 2);
}

TEST_CASE("metrics command on identical inputs") {
  TempDir dir("gazeval_cli_met");
  write_file(dir.path / "gaze.csv", two_cluster_csv());
  const auto fix = (dir.path / "fix.jsonl").string();
  REQUIRE(run_cli({"fixations", "--in", (dir.path / "gaze.csv").string(),
                   "--out", fix, "--reader", "r1"}) == 0);

  const auto out = (dir.path / "metrics.csv").string();
  CHECK(run_cli({"metrics", "--a", fix, "--b", fix, "--out", out}) == 0);

  const std::string text = read_file(out);
  CHECK(text.rfind("metric,stimulus_id,scope,value,params_hash\n", 0) == 0);
  const auto rows = csv_row_values(text, 3);
  REQUIRE(rows.size() == 4);
  CHECK(std::stod(rows.at("cc/r1|r1")) == doctest::Approx(1.0).epsilon(1e-9));
  // Self divergence is bounded by epsilon times the nonzero cell count.
  CHECK(std::abs(std::stod(rows.at("kld/r1|r1"))) < 1e-6);
  CHECK(std::stod(rows.at("sim/r1|r1")) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::stod(rows.at("iou/r1|r1")) == 1.0);
}

TEST_CASE("metrics command in json format") {
  TempDir dir("gazeval_cli_met_json");
  write_file(dir.path / "gaze.csv", two_cluster_csv());
  const auto fix = (dir.path / "fix.jsonl").string();
  REQUIRE(run_cli({"fixations", "--in", (dir.path / "gaze.csv").string(),
                   "--out", fix}) == 0);

  const auto out = (dir.path / "metrics.json").string();
  CHECK(run_cli({"metrics", "--a", fix, "--b", fix, "--out", out,
                 "--format", "json"}) == 0);
  const auto rows = nlohmann::json::parse(read_file(out));
  REQUIRE(rows.is_array());
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].contains("metric"));
  CHECK(rows[0].at("params_hash") == params_hash(Config{}));

  CHECK(run_cli({"metrics", "--a", fix, "--b", fix, "--format", "yaml"}) == 2);
}

TEST_CASE("metrics command input validation") {
  TempDir dir("gazeval_cli_met_err");
  // Mismatched grids from raw PGM inputs.
  write_file(dir.path / "a.pgm", "P2\n2 2\n255\n0 100 200 255\n");
  write_file(dir.path / "b.pgm", "P2\n3 1\n255\n0 100 200\n");
  CHECK(run_cli({"metrics", "--a", (dir.path / "a.pgm").string(),
                 "--b", (dir.path / "b.pgm").string()}) == 2);

  write_file(dir.path / "notes.txt", "hello");
  CHECK(run_cli({"metrics", "--a", (dir.path / "notes.txt").string(),
                 "--b", (dir.path / "a.pgm").string()}) == 2);
  CHECK(run_cli({"metrics", "--a", (dir.path / "missing.pgm").string(),
                 "--b", (dir.path / "a.pgm").string()}) == 4);
}

TEST_CASE("ioc command emits per-reader rows") {
  TempDir dir("gazeval_cli_ioc");
  write_file(dir.path / "gaze.csv", two_cluster_csv());
  std::vector<std::string> fixes;
  for (const char* reader : {"r1", "r2", "r3"}) {
    const auto fix = (dir.path / (std::string(reader) + ".jsonl")).string();
    REQUIRE(run_cli({"fixations", "--in", (dir.path / "gaze.csv").string(),
                     "--out", fix, "--reader", reader, "--stimulus", "s1"}) == 0);
    fixes.push_back(fix);
  }

  const auto out = (dir.path / "ioc.csv").string();
  CHECK(run_cli({"ioc", "--in", fixes[0], fixes[1], fixes[2], "--out", out}) == 0);
  const auto rows = csv_row_values(read_file(out), 3);
  // Three methods, three readers each.
  REQUIRE(rows.size() == 9);
  for (const char* method : {"ioc_fixation", "ioc_dtw", "ioc_levenshtein"}) {
    for (const char* reader : {"r1", "r2", "r3"}) {
      const double v = std::stod(rows.at(std::string(method) + "/" + reader));
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
  // Identical scanpaths: congruency is exact.
  CHECK(std::stod(rows.at("ioc_fixation/r1")) == 1.0);
  CHECK(std::stod(rows.at("ioc_dtw/r2")) == 1.0);
  CHECK(std::stod(rows.at("ioc_levenshtein/r3")) == 1.0);

  const auto only = (dir.path / "ioc_fix.csv").string();
  CHECK(run_cli({"ioc", "--in", fixes[0], fixes[1], "--method", "fixation",
                 "--out", only}) == 0);
  CHECK(csv_row_values(read_file(only), 3).size() == 2);

  CHECK(run_cli({"ioc", "--in", fixes[0], fixes[1], "--method", "psychic"}) == 2);
  CHECK(run_cli({"ioc", "--in", fixes[0]}) == 2);
}

TEST_CASE("config flag and environment override") {
  TempDir dir("gazeval_cli_cfg");
  write_file(dir.path / "gaze.csv", two_cluster_csv());
  write_file(dir.path / "wide.json", R"({"saliency": {"sigma_deg": 2.0}})");
  write_file(dir.path / "typo.json", R"({"fixation": {"velocity": 30}})");
  const auto out = (dir.path / "fix.jsonl").string();

  Config wide;
  wide.saliency.sigma_deg = 2.0;

  CHECK(run_cli({"fixations", "--config", (dir.path / "wide.json").string(),
                 "--in", (dir.path / "gaze.csv").string(), "--out", out}) == 0);
  CHECK(load_scanpath_jsonl(out).params_hash == params_hash(wide));

  // Unknown config key: config error.
  CHECK(run_cli({"fixations", "--config", (dir.path / "typo.json").string(),
                 "--in", (dir.path / "gaze.csv").string(), "--out", out}) == 3);
  // Unreadable config file: io error.
  CHECK(run_cli({"fixations", "--config", (dir.path / "absent.json").string(),
                 "--in", (dir.path / "gaze.csv").string(), "--out", out}) == 4);

  // The environment variable applies when no flag is given.
  ::setenv("GAZEVAL_CONFIG", (dir.path / "wide.json").string().c_str(), 1);
  CHECK(run_cli({"fixations", "--in", (dir.path / "gaze.csv").string(),
                 "--out", out}) == 0);
  ::unsetenv("GAZEVAL_CONFIG");
  CHECK(load_scanpath_jsonl(out).params_hash == params_hash(wide));
}

TEST_CASE("simulate and report commands run end to end") {
  TempDir dir("gazeval_cli_pipeline");
  const auto data = (dir.path / "data").string();
  CHECK(run_cli({"simulate", "--out", data, "--readers", "2", "--stimuli", "2",
                 "--seed", "7"}) == 0);
  CHECK(fs::exists(dir.path / "data" / "catalog.json"));

  const auto report = (dir.path / "report").string();
  CHECK(run_cli({"report", "--sessions", (dir.path / "data" / "sessions").string(),
                 "--catalog", (dir.path / "data" / "catalog.json").string(),
                 "--gaze", (dir.path / "data" / "gaze").string(),
                 "--out", report, "--jobs", "2"}) == 0);
  for (const char* name : {"table1.csv", "table2.csv", "table3.csv",
                           "table4.csv", "ttests.csv", "report.json"}) {
    CHECK(fs::exists(dir.path / "report" / name));
  }

  // Rerunning the pipeline yields byte-identical outputs.
  const auto report2 = (dir.path / "report2").string();
  CHECK(run_cli({"report", "--sessions", (dir.path / "data" / "sessions").string(),
                 "--catalog", (dir.path / "data" / "catalog.json").string(),
                 "--gaze", (dir.path / "data" / "gaze").string(),
                 "--out", report2}) == 0);
  for (const char* name : {"table1.csv", "ttests.csv", "report.json"}) {
    CHECK(read_file(dir.path / "report" / name) ==
          read_file(dir.path / "report2" / name));
  }

  const auto report_json = nlohmann::json::parse(
      read_file(dir.path / "report" / "report.json"));
  CHECK(report_json.at("params_hash") == params_hash(Config{}));
  CHECK(report_json.at("counts").at("trials") == 8);
}

TEST_CASE("report command error codes") {
  TempDir dir("gazeval_cli_rep_err");
  fs::create_directories(dir.path / "empty_sessions");
  write_file(dir.path / "catalog.json", "[]");

  // No session manifests found: parse error.
  CHECK(run_cli({"report", "--sessions", (dir.path / "empty_sessions").string(),
                 "--catalog", (dir.path / "catalog.json").string(),
                 "--gaze", dir.path.string(),
                 "--out", (dir.path / "out").string()}) == 2);
  // Missing catalog: io error.
  CHECK(run_cli({"report", "--sessions", (dir.path / "empty_sessions").string(),
                 "--catalog", (dir.path / "absent.json").string(),
                 "--gaze", dir.path.string(),
                 "--out", (dir.path / "out").string()}) == 4);
}

TEST_CASE("command line surface") {
  CHECK(run_cli({"--help"}) == 0);
  CHECK(run_cli({}) == 2);
  CHECK(run_cli({"transmogrify"}) == 2);
  TempDir dir("gazeval_cli_surface");
  CHECK(run_cli({"simulate", "--out", (dir.path / "d").string(),
                 "--jobs", "0"}) == 2);
}
