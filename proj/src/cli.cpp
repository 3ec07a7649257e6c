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

#include "gazeval/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gazeval/config.hpp"
#include "gazeval/errors.hpp"
#include "gazeval/fixation.hpp"
#include "gazeval/ingest.hpp"
#include "gazeval/metrics.hpp"
#include "gazeval/report.hpp"
#include "gazeval/saliency.hpp"
#include "gazeval/simulate.hpp"
#include "gazeval/study.hpp"

namespace gazeval {

namespace {

using nlohmann::json;

Config effective_config(const std::string& config_flag) {
  if (!config_flag.empty()) return load_config_file(config_flag);
  if (const char* env = std::getenv("GAZEVAL_CONFIG"); env && *env) {
    return load_config_file(env);
  }
  Config config;
  validate(config);
  return config;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path.string());
  out << content;
  if (!out) throw IoError("write failed: " + path.string());
}

std::string fmt_value(std::optional<double> v) {
  if (!v) return "";
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", *v);
  return buf;
}

struct MetricRow {
  std::string metric;
  std::string stimulus_id;
  std::string scope;
  std::optional<double> value;
};

// Rows as `metric,stimulus_id,scope,value` CSV or a JSON array; the params
// hash is carried on every row.
void emit_rows(const std::vector<MetricRow>& rows, const std::string& hash,
               const std::string& format, const std::string& out_path) {
  std::string text;
  if (format == "json") {
    json array = json::array();
    for (const MetricRow& row : rows) {
      array.push_back({{"metric", row.metric},
                       {"stimulus_id", row.stimulus_id},
                       {"scope", row.scope},
                       {"value", row.value ? json(*row.value) : json()},
                       {"params_hash", hash}});
    }
    text = array.dump(2) + "\n";
  } else {
    text = "metric,stimulus_id,scope,value,params_hash\n";
    for (const MetricRow& row : rows) {
      text += row.metric + "," + row.stimulus_id + "," + row.scope + "," +
              fmt_value(row.value) + "," + hash + "\n";
    }
  }
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

struct MapInput {
  AttentionMap raw;
  std::string stimulus_id;
  std::string name;  // reader id or file stem, for the scope column
};

MapInput load_map_input(const std::filesystem::path& path, const Config& config) {
  MapInput input;
  if (path.extension() == ".jsonl") {
    const LoadedScanpath loaded = load_scanpath_jsonl(path);
    input.raw = attention_map(loaded.scanpath.fixations, config.saliency,
                              config.screen);
    input.stimulus_id = loaded.scanpath.stimulus_id;
    input.name = loaded.scanpath.reader_id;
  } else if (path.extension() == ".pgm") {
    input.raw = load_map_pgm(path);
    input.stimulus_id = path.stem().string();
    input.name = path.stem().string();
  } else {
    throw ParseError("unsupported input type (expected .jsonl or .pgm): " +
                     path.string());
  }
  return input;
}

int cmd_fixations(const std::string& in, const std::string& out,
                  const std::string& stimulus, const std::string& reader,
                  const std::string& task_name, const Config& config) {
  const auto task = task_from_string(task_name);
  if (!task) throw ParseError("task must be 'Diagnosis' or 'VTT'");
  const SampleStream stream = parse_gaze_stream_file(in, config.screen);
  const Scanpath scanpath{stimulus, reader, *task,
                          detect_fixations(stream, config.fixation,
                                           config.screen)};
  write_file(out, scanpath_to_jsonl(scanpath, params_hash(config)));
  return 0;
}

int cmd_saliency(const std::string& in, const std::string& map_out,
                 const std::string& mask_out, const std::string& norm_name,
                 const Config& config) {
  Normalization norm = Normalization::Raw;
  if (norm_name == "max") {
    norm = Normalization::MaxOne;
  } else if (norm_name == "sum") {
    norm = Normalization::SumOne;
  } else if (norm_name != "raw") {
    throw ParseError("normalize must be 'raw', 'max', or 'sum'");
  }

  const LoadedScanpath loaded = load_scanpath_jsonl(in);
  const std::string hash = params_hash(config);
  AttentionMap map = attention_map(loaded.scanpath.fixations, config.saliency,
                                   config.screen);
  if (norm != Normalization::Raw) map = normalize(std::move(map), norm);

  if (!map_out.empty()) {
    write_file(map_out, map_to_pgm(map));
    write_file(map_out + ".json", map_sidecar_json(map, hash, in) + "\n");
  }
  if (!mask_out.empty()) {
    write_file(mask_out, mask_to_pgm(gaze_mask(map, config.saliency)));
  }
  return 0;
}

int cmd_metrics(const std::string& a_path, const std::string& b_path,
                const std::string& out, const std::string& format,
                const Config& config) {
  const MapInput a = load_map_input(a_path, config);
  const MapInput b = load_map_input(b_path, config);

  const std::string stimulus = a.stimulus_id == b.stimulus_id
                                   ? a.stimulus_id
                                   : a.stimulus_id + "|" + b.stimulus_id;
  const std::string scope = a.name + "|" + b.name;

  const AttentionMap a_sum = normalize(a.raw, Normalization::SumOne);
  const AttentionMap b_sum = normalize(b.raw, Normalization::SumOne);
  const bool degenerate = a_sum.degenerate() || b_sum.degenerate();

  std::vector<MetricRow> rows;
  rows.push_back({"cc", stimulus, scope, cc(a.raw, b.raw)});
  rows.push_back({"kld", stimulus, scope,
                  degenerate ? std::nullopt
                             : std::optional(kld(a_sum, b_sum, config.metrics))});
  rows.push_back({"sim", stimulus, scope,
                  degenerate ? std::nullopt
                             : std::optional(sim(a_sum, b_sum))});
  rows.push_back({"iou", stimulus, scope,
                  iou(gaze_mask(a.raw, config.saliency),
                      gaze_mask(b.raw, config.saliency))});
  emit_rows(rows, params_hash(config), format, out);
  return 0;
}

int cmd_ioc(const std::vector<std::string>& inputs, const std::string& method,
            const std::string& out, const std::string& format,
            const Config& config) {
  std::vector<Scanpath> scanpaths;
  for (const std::string& path : inputs) {
    scanpaths.push_back(load_scanpath_jsonl(path).scanpath);
  }
  if (scanpaths.size() < 2) throw ParseError("ioc: fewer than 2 observers");
  const std::string stimulus = scanpaths.front().stimulus_id;

  std::vector<MetricRow> rows;
  auto append = [&](IocMethod m) {
    const IocResult result =
        m == IocMethod::Fixation
            ? ioc_fixation(scanpaths, config.metrics, config.saliency,
                           config.screen)
            : ioc_scanpath(scanpaths, m, config.metrics, config.screen);
    std::string name = to_string(m);
    for (char& c : name) c = static_cast<char>(std::tolower(c));
    for (const auto& [reader, score] : result.per_observer_scores) {
      rows.push_back({"ioc_" + name, stimulus, reader, score});
    }
  };
  if (method == "all" || method == "fixation") append(IocMethod::Fixation);
  if (method == "all" || method == "dtw") append(IocMethod::DTW);
  if (method == "all" || method == "levenshtein") append(IocMethod::Levenshtein);
  if (rows.empty() && method != "all") {
    throw ParseError("method must be 'fixation', 'dtw', 'levenshtein', or 'all'");
  }
  emit_rows(rows, params_hash(config), format, out);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Gaze-study evaluation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string config_path, format = "csv";
  int jobs = 1;
  std::uint64_t seed = 42;
  app.add_option("--config", config_path,
                 "Config JSON (default: $GAZEVAL_CONFIG, else built-ins)");
  app.add_option("--format", format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--jobs", jobs, "Worker threads for batch commands")
      ->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed, "Simulator seed");

  auto* fixations = app.add_subcommand("fixations", "Detect fixations in a gaze CSV");
  std::string fix_in, fix_out, fix_stimulus = "unknown", fix_reader = "unknown",
                      fix_task = "Diagnosis";
  fixations->add_option("--in", fix_in, "Gaze CSV")->required();
  fixations->add_option("--out", fix_out, "Fixation JSONL")->required();
  fixations->add_option("--stimulus", fix_stimulus, "Stimulus id for the header");
  fixations->add_option("--reader", fix_reader, "Reader id for the header");
  fixations->add_option("--task", fix_task, "Task: Diagnosis or VTT");

  auto* saliency = app.add_subcommand("saliency", "Build attention map and mask");
  std::string sal_in, sal_map, sal_mask, sal_norm = "raw";
  saliency->add_option("--in", sal_in, "Fixation JSONL")->required();
  saliency->add_option("--map", sal_map, "Attention map PGM output");
  saliency->add_option("--mask", sal_mask, "Gaze mask PGM output");
  saliency->add_option("--normalize", sal_norm, "raw, max, or sum");

  auto* metrics = app.add_subcommand("metrics", "Compare two maps or fixation files");
  std::string met_a, met_b, met_out;
  metrics->add_option("--a", met_a, "First input (.jsonl or .pgm)")->required();
  metrics->add_option("--b", met_b, "Second input (.jsonl or .pgm)")->required();
  metrics->add_option("--out", met_out, "Output file (default: stdout)");

  auto* ioc = app.add_subcommand("ioc", "Inter-observer congruency scores");
  std::vector<std::string> ioc_in;
  std::string ioc_method = "all", ioc_out;
  ioc->add_option("--in", ioc_in, "Fixation JSONL files (two or more)")
      ->required()
      ->expected(-2);
  ioc->add_option("--method", ioc_method, "fixation, dtw, levenshtein, or all");
  ioc->add_option("--out", ioc_out, "Output file (default: stdout)");

  auto* report = app.add_subcommand("report", "Run the full study pipeline");
  ReportOptions report_options;
  std::string rep_sessions, rep_catalog, rep_gaze, rep_out;
  report->add_option("--sessions", rep_sessions, "Session manifest directory")
      ->required();
  report->add_option("--catalog", rep_catalog, "Stimulus catalog JSON")
      ->required();
  report->add_option("--gaze", rep_gaze, "Gaze CSV directory")->required();
  report->add_option("--out", rep_out, "Report output directory")->required();
  report->add_flag("--skip-bad-trials", report_options.skip_bad_trials,
                   "Skip unparseable trials with a warning");

  auto* simulate = app.add_subcommand("simulate", "Generate a synthetic dataset");
  std::string sim_out, sim_config_path;
  int sim_readers = 0, sim_stimuli = 0;
  simulate->add_option("--out", sim_out, "Dataset output directory")->required();
  simulate->add_option("--readers", sim_readers, "Number of readers");
  simulate->add_option("--stimuli", sim_stimuli, "Number of stimuli");
  simulate->add_option("--sim-config", sim_config_path, "Simulator config JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "gazeval: " << e.what() << "\n";
    return 2;
  }

  try {
    const Config config = effective_config(config_path);
    if (fixations->parsed()) {
      return cmd_fixations(fix_in, fix_out, fix_stimulus, fix_reader, fix_task,
                           config);
    }
    if (saliency->parsed()) {
      return cmd_saliency(sal_in, sal_map, sal_mask, sal_norm, config);
    }
    if (metrics->parsed()) {
      return cmd_metrics(met_a, met_b, met_out, format, config);
    }
    if (ioc->parsed()) {
      return cmd_ioc(ioc_in, ioc_method, ioc_out, format, config);
    }
    if (report->parsed()) {
      report_options.sessions_dir = rep_sessions;
      report_options.catalog_file = rep_catalog;
      report_options.gaze_dir = rep_gaze;
      report_options.out_dir = rep_out;
      report_options.jobs = jobs;
      const ReportResult result = run_report(report_options, config);
      std::cout << "report: " << result.n_trials << " trials ("
                << result.skipped_trials << " skipped), "
                << result.files.size() << " files -> " << rep_out << "\n";
      return 0;
    }
    if (simulate->parsed()) {
      SimConfig sim = sim_config_path.empty()
                          ? SimConfig{}
                          : load_sim_config_file(sim_config_path);
      if (seed_opt->count() > 0) sim.seed = seed;
      if (sim_readers > 0) sim.n_readers = sim_readers;
      if (sim_stimuli > 0) sim.n_stimuli = sim_stimuli;
      const SimResult result = simulate_gaze(sim, config, sim_out);
      std::cout << "simulate: " << result.n_trials << " trials, "
                << result.files.size() << " files -> " << sim_out << "\n";
      return 0;
    }
    std::cerr << "gazeval: no subcommand given\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "gazeval: config error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    std::cerr << "gazeval: io error: " << e.what() << "\n";
    return 4;
  } catch (const ParseError& e) {
    std::cerr << "gazeval: parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gazeval: parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "gazeval: error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gazeval
