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

#include "gazeval/simulate.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "gazeval/errors.hpp"
#include "gazeval/fixation.hpp"
#include "gazeval/ingest.hpp"

namespace gazeval {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  SplitMix64 g(base ^ (stream * 0xD1342543DE82EF95ULL));
  return g.next();
}

void validate(const SimConfig& config) {
  if (config.n_readers < 1) throw ConfigError("sim: n_readers must be >= 1");
  if (config.n_stimuli < 1) throw ConfigError("sim: n_stimuli must be >= 1");
  if (!(config.sample_rate_hz > 0)) {
    throw ConfigError("sim: sample_rate_hz must be > 0");
  }
  const double dt = 1000.0 / config.sample_rate_hz;
  if (dt != std::floor(dt)) {
    throw ConfigError("sim: sample period must be a whole number of ms");
  }
  if (config.min_fixations_per_trial < 1 ||
      config.max_fixations_per_trial < config.min_fixations_per_trial) {
    throw ConfigError("sim: bad fixations_per_trial range");
  }
  if (!(config.min_fixation_duration_ms > 0) ||
      config.max_fixation_duration_ms < config.min_fixation_duration_ms) {
    throw ConfigError("sim: bad fixation_duration_ms range");
  }
  for (const AttentionComponent& c : config.attention_model) {
    if (!(c.weight > 0)) throw ConfigError("sim: attention weights must be > 0");
    if (!(c.spread_deg > 0)) throw ConfigError("sim: attention spreads must be > 0");
    if (c.center_x < 0 || c.center_x > 1 || c.center_y < 0 || c.center_y > 1) {
      throw ConfigError("sim: attention centers must be fractions in [0, 1]");
    }
  }
  if (config.vtt_correct_rate < 0 || config.vtt_correct_rate > 1 ||
      config.diagnosis_agreement_rate < 0 || config.diagnosis_agreement_rate > 1) {
    throw ConfigError("sim: answer rates must lie in [0, 1]");
  }
  if (!(config.jitter_deg > 0)) throw ConfigError("sim: jitter_deg must be > 0");
}

namespace {

using nlohmann::json;

std::vector<AttentionComponent> effective_model(const SimConfig& config) {
  if (!config.attention_model.empty()) return config.attention_model;
  return {AttentionComponent{}};
}

std::vector<std::string> effective_pool(const SimConfig& config) {
  if (!config.pathology_pool.empty()) return config.pathology_pool;
  return {"Atelectasis", "Cardiomegaly", "Pleural Effusion", "Pneumonia"};
}

double get_num(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) {
    throw ConfigError(std::string("sim: '") + key + "' must be a number");
  }
  return j[key].get<double>();
}

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const char* where) {
  for (const auto& [key, value] : j.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) {
          return key == k;
        }) == allowed.end()) {
      throw ConfigError(std::string("sim: unknown key '") + key + "' in " + where);
    }
  }
}

SimConfig sim_config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("sim: config must be a JSON object");
  check_keys(j,
             {"seed", "n_readers", "n_stimuli", "sample_rate_hz",
              "attention_model", "fixations_per_trial", "fixation_duration_ms",
              "vtt_correct_rate", "diagnosis_agreement_rate", "pathology_pool",
              "jitter_deg"},
             "sim config");

  SimConfig config;
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) {
      throw ConfigError("sim: 'seed' must be an integer");
    }
    config.seed = j["seed"].get<std::uint64_t>();
  }
  config.n_readers = static_cast<int>(get_num(j, "n_readers", config.n_readers));
  config.n_stimuli = static_cast<int>(get_num(j, "n_stimuli", config.n_stimuli));
  config.sample_rate_hz = get_num(j, "sample_rate_hz", config.sample_rate_hz);

  if (j.contains("attention_model")) {
    if (!j["attention_model"].is_array()) {
      throw ConfigError("sim: 'attention_model' must be an array");
    }
    for (const json& c : j["attention_model"]) {
      check_keys(c, {"center_x", "center_y", "weight", "spread_deg"},
                 "attention_model entry");
      AttentionComponent comp;
      comp.center_x = get_num(c, "center_x", comp.center_x);
      comp.center_y = get_num(c, "center_y", comp.center_y);
      comp.weight = get_num(c, "weight", comp.weight);
      comp.spread_deg = get_num(c, "spread_deg", comp.spread_deg);
      config.attention_model.push_back(comp);
    }
  }

  auto range = [&](const char* key, double& lo, double& hi) {
    if (!j.contains(key)) return;
    const json& r = j[key];
    if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number()) {
      throw ConfigError(std::string("sim: '") + key + "' must be [lo, hi]");
    }
    lo = r[0].get<double>();
    hi = r[1].get<double>();
  };
  double fix_lo = config.min_fixations_per_trial;
  double fix_hi = config.max_fixations_per_trial;
  range("fixations_per_trial", fix_lo, fix_hi);
  config.min_fixations_per_trial = static_cast<int>(fix_lo);
  config.max_fixations_per_trial = static_cast<int>(fix_hi);
  range("fixation_duration_ms", config.min_fixation_duration_ms,
        config.max_fixation_duration_ms);

  config.vtt_correct_rate = get_num(j, "vtt_correct_rate", config.vtt_correct_rate);
  config.diagnosis_agreement_rate =
      get_num(j, "diagnosis_agreement_rate", config.diagnosis_agreement_rate);
  if (j.contains("pathology_pool")) {
    if (!j["pathology_pool"].is_array()) {
      throw ConfigError("sim: 'pathology_pool' must be an array of strings");
    }
    for (const json& label : j["pathology_pool"]) {
      if (!label.is_string()) {
        throw ConfigError("sim: 'pathology_pool' must be an array of strings");
      }
      config.pathology_pool.push_back(label.get<std::string>());
    }
  }
  config.jitter_deg = get_num(j, "jitter_deg", config.jitter_deg);

  validate(config);
  return config;
}

// Chord length on screen (cm) subtending the given visual angle.
double chord_cm(double deg, const ScreenGeometry& geom) {
  return geom.viewing_distance_cm * std::tan(deg * std::numbers::pi / 180.0);
}

struct Cm {
  double x = 0.0;
  double y = 0.0;
};

Vec2 cm_to_px(const Cm& p, const ScreenGeometry& geom) {
  return {p.x / geom.pitch_x_cm(), p.y / geom.pitch_y_cm()};
}

double dist(const Cm& a, const Cm& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Draws the next cluster center: attention-model component by weight, then a
// Gaussian around its center, clamped to a 5% screen margin, rejected until
// at least 1 degree from the previous center. A deterministic sideways
// offset breaks out of pathological rejection loops (tiny spreads).
Cm draw_center(SplitMix64& rng, const std::vector<AttentionComponent>& model,
               double total_weight, const Cm* previous,
               const ScreenGeometry& geom) {
  const double margin_x = 0.05 * geom.width_cm;
  const double margin_y = 0.05 * geom.height_cm;
  const double min_separation = chord_cm(1.0, geom);

  for (int attempt = 0; attempt < 200; ++attempt) {
    double pick = rng.uniform() * total_weight;
    const AttentionComponent* comp = &model.back();
    for (const AttentionComponent& c : model) {
      if (pick < c.weight) {
        comp = &c;
        break;
      }
      pick -= c.weight;
    }
    const double spread = chord_cm(comp->spread_deg, geom);
    Cm center{comp->center_x * geom.width_cm + rng.gaussian() * spread,
              comp->center_y * geom.height_cm + rng.gaussian() * spread};
    center.x = std::clamp(center.x, margin_x, geom.width_cm - margin_x);
    center.y = std::clamp(center.y, margin_y, geom.height_cm - margin_y);
    if (!previous || dist(center, *previous) >= min_separation) return center;
  }

  const double step = chord_cm(1.05, geom);
  Cm forced = *previous;
  forced.x = forced.x + step <= geom.width_cm - margin_x ? forced.x + step
                                                         : forced.x - step;
  return forced;
}

void append_csv_row(std::string& csv, std::int64_t t_ms, const Vec2& px) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%lld,%.4f,%.4f,%.4f,%.4f,1,1\n",
                static_cast<long long>(t_ms), px.x, px.y, px.x, px.y);
  csv += buf;
}

void append_sample(SimulatedTrial& trial, std::int64_t t_ms, const Cm& p,
                   const ScreenGeometry& geom) {
  const Vec2 px = cm_to_px(p, geom);
  trial.stream.samples.push_back({t_ms, px, px});
  append_csv_row(trial.csv, t_ms, px);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path.string());
  out << content;
  if (!out) throw IoError("write failed: " + path.string());
}

std::string padded_index(int i, int total) {
  std::size_t digits = 1;
  for (int n = total; n >= 10; n /= 10) ++digits;
  std::string text = std::to_string(i);
  return text.size() >= digits ? text
                               : std::string(digits - text.size(), '0') + text;
}

}  // namespace

SimConfig parse_sim_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("sim: config is not valid JSON: ") + e.what());
  }
  return sim_config_from_json(j);
}

SimConfig load_sim_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open sim config: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sim_config(buf.str());
}

SimulatedTrial simulate_trial(int n_fixations, SplitMix64& rng,
                              const SimConfig& sim, const Config& config) {
  validate(sim);
  if (n_fixations < 1) throw ConfigError("sim: n_fixations must be >= 1");

  const ScreenGeometry& geom = config.screen;
  const auto model = effective_model(sim);
  double total_weight = 0.0;
  for (const AttentionComponent& c : model) total_weight += c.weight;

  const std::int64_t dt =
      static_cast<std::int64_t>(1000.0 / sim.sample_rate_hz);
  const double jitter_radius = chord_cm(sim.jitter_deg, geom);
  // Cumulative chord offsets of the saccade taper from either cluster center.
  const double taper[3] = {chord_cm(0.01, geom), chord_cm(0.03, geom),
                           chord_cm(0.43, geom)};

  SimulatedTrial trial;
  trial.csv = "t_ms,lx,ly,rx,ry,lvalid,rvalid\n";

  Cm previous_center;
  std::int64_t t = 0;
  for (int f = 0; f < n_fixations; ++f) {
    const Cm center = draw_center(rng, model, total_weight,
                                  f == 0 ? nullptr : &previous_center, geom);

    if (f > 0) {
      // Saccade: taper out of the previous cluster, one main jump, taper in.
      const double gap = dist(center, previous_center);
      const double ux = (center.x - previous_center.x) / gap;
      const double uy = (center.y - previous_center.y) / gap;
      const double offsets[6] = {taper[0],       taper[1],       taper[2],
                                 gap - taper[2], gap - taper[1], gap - taper[0]};
      for (double offset : offsets) {
        append_sample(trial,
                      t, {previous_center.x + ux * offset,
                          previous_center.y + uy * offset},
                      geom);
        t += dt;
      }
    }

    const double duration_ms =
        rng.uniform(sim.min_fixation_duration_ms, sim.max_fixation_duration_ms);
    const auto intervals = static_cast<std::int64_t>(
        std::llround(duration_ms / static_cast<double>(dt)));
    const std::int64_t onset = t;
    for (std::int64_t k = 0; k <= intervals; ++k) {
      const double r = jitter_radius * std::sqrt(rng.uniform());
      const double theta = 2.0 * std::numbers::pi * rng.uniform();
      append_sample(trial, t,
                    {center.x + r * std::cos(theta), center.y + r * std::sin(theta)},
                    geom);
      t += dt;
    }

    trial.truth.push_back({cm_to_px(center, geom), static_cast<double>(onset),
                           static_cast<double>(intervals * dt)});
    previous_center = center;
  }
  return trial;
}

SimResult simulate_gaze(const SimConfig& sim, const Config& config,
                        const std::filesystem::path& out_dir) {
  validate(sim);
  const std::string hash = params_hash(config);
  const std::vector<std::string> pool = effective_pool(sim);

  std::error_code ec;
  std::filesystem::create_directories(out_dir / "sessions", ec);
  std::filesystem::create_directories(out_dir / "gaze", ec);
  std::filesystem::create_directories(out_dir / "truth", ec);
  if (ec) throw IoError("cannot create output directories: " + ec.message());

  SimResult result;

  // Catalog: alternate Real/Synthetic; labels drawn per stimulus.
  std::vector<StimulusRecord> catalog;
  SplitMix64 catalog_rng(derive_seed(sim.seed, 0));
  for (int s = 0; s < sim.n_stimuli; ++s) {
    StimulusRecord stim;
    stim.stimulus_id = "stim_" + padded_index(s + 1, sim.n_stimuli);
    stim.authenticity = s % 2 == 0 ? Authenticity::Real : Authenticity::Synthetic;
    if (catalog_rng.uniform() >= 0.25) {
      const auto first = static_cast<std::size_t>(catalog_rng.uniform() *
                                                  static_cast<double>(pool.size()));
      stim.pathology_labels.insert(pool[std::min(first, pool.size() - 1)]);
      if (pool.size() > 1 && catalog_rng.uniform() < 0.3) {
        const auto second = static_cast<std::size_t>(
            catalog_rng.uniform() * static_cast<double>(pool.size()));
        stim.pathology_labels.insert(pool[std::min(second, pool.size() - 1)]);
      }
    }
    catalog.push_back(stim);
  }
  const auto catalog_path = out_dir / "catalog.json";
  write_file(catalog_path, stimulus_catalog_to_json(catalog));
  result.files.push_back(catalog_path);

  const char* specialties[] = {"General", "Thoracic", "Cardiothoracic",
                               "Neuroradiology"};
  const ExperienceBand bands[] = {ExperienceBand::Y0_9, ExperienceBand::Y10_19,
                                  ExperienceBand::Y20Plus};
  const Task tasks[] = {Task::Diagnosis, Task::VTT};

  for (int r = 0; r < sim.n_readers; ++r) {
    SessionManifest manifest;
    manifest.reader.reader_id = "reader_" + padded_index(r + 1, sim.n_readers);
    manifest.reader.specialties.insert(specialties[r % 4]);
    manifest.reader.years_band = bands[r % 3];

    for (int s = 0; s < sim.n_stimuli; ++s) {
      for (int task_idx = 0; task_idx < 2; ++task_idx) {
        const std::uint64_t trial_index =
            (static_cast<std::uint64_t>(r) * sim.n_stimuli + s) * 2 + task_idx;
        SplitMix64 rng(derive_seed(sim.seed, 1 + trial_index));

        const int n_fix =
            sim.min_fixations_per_trial +
            static_cast<int>(rng.uniform() * (sim.max_fixations_per_trial -
                                              sim.min_fixations_per_trial + 1));
        SimulatedTrial sim_trial = simulate_trial(
            std::min(n_fix, sim.max_fixations_per_trial), rng, sim, config);

        const StimulusRecord& stim = catalog[s];
        const std::string stem = manifest.reader.reader_id + "_" +
                                 stim.stimulus_id + "_" +
                                 to_string(tasks[task_idx]);

        TrialRecord trial;
        trial.reader_id = manifest.reader.reader_id;
        trial.stimulus_id = stim.stimulus_id;
        trial.task = tasks[task_idx];
        trial.gaze_file = stem + ".csv";
        trial.duration_s =
            static_cast<double>(sim_trial.stream.samples.back().t_ms) / 1000.0;

        if (trial.task == Task::VTT) {
          const bool correct = rng.uniform() < sim.vtt_correct_rate;
          trial.authenticity_vote =
              correct == (stim.authenticity == Authenticity::Synthetic)
                  ? Authenticity::Synthetic
                  : Authenticity::Real;
        } else {
          std::set<std::string> findings;
          const bool agree = rng.uniform() < sim.diagnosis_agreement_rate;
          const auto pick = [&](const std::vector<std::string>& from) {
            const auto i = static_cast<std::size_t>(rng.uniform() *
                                                    static_cast<double>(from.size()));
            return from[std::min(i, from.size() - 1)];
          };
          if (stim.pathology_labels.empty()) {
            if (!agree) findings.insert(pick(pool));
          } else if (agree) {
            findings.insert(pick({stim.pathology_labels.begin(),
                                  stim.pathology_labels.end()}));
          } else {
            std::vector<std::string> outside;
            for (const std::string& label : pool) {
              if (!stim.pathology_labels.count(label)) outside.push_back(label);
            }
            if (!outside.empty() && rng.uniform() < 0.5) {
              findings.insert(pick(outside));
            }
          }
          trial.finding_labels = findings;
        }
        manifest.trials.push_back(trial);

        const auto gaze_path = out_dir / "gaze" / trial.gaze_file;
        write_file(gaze_path, sim_trial.csv);
        result.files.push_back(gaze_path);

        Scanpath truth{stim.stimulus_id, manifest.reader.reader_id,
                       tasks[task_idx], sim_trial.truth};
        const auto truth_path = out_dir / "truth" / (stem + ".jsonl");
        write_file(truth_path, scanpath_to_jsonl(truth, hash));
        result.files.push_back(truth_path);

        ++result.n_trials;
      }
    }

    const auto manifest_path =
        out_dir / "sessions" / (manifest.reader.reader_id + ".json");
    write_file(manifest_path, session_manifest_to_json(manifest));
    result.files.push_back(manifest_path);
  }
  return result;
}

}  // namespace gazeval
