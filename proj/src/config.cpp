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

#include "gazeval/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gazeval/errors.hpp"

namespace gazeval {

using nlohmann::json;

namespace {

std::string canonical_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) {
    throw ConfigError(std::string(name) + " must be > 0");
  }
}

// Rejects keys beyond the expected set so config typos fail loudly
// instead of silently falling back to defaults.
void check_keys(const json& obj, const char* scope,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool known = false;
    for (const char* a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ConfigError(std::string("unknown config key '") + scope + "." +
                        key + "'");
    }
  }
}

double get_num(const json& obj, const char* scope, const char* key,
               double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) {
    throw ConfigError(std::string("config key '") + scope + "." + key +
                      "' must be a number");
  }
  return v.get<double>();
}

int get_int(const json& obj, const char* scope, const char* key,
            int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) {
    throw ConfigError(std::string("config key '") + scope + "." + key +
                      "' must be an integer");
  }
  return v.get<int>();
}

bool get_bool(const json& obj, const char* scope, const char* key,
              bool fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_boolean()) {
    throw ConfigError(std::string("config key '") + scope + "." + key +
                      "' must be a boolean");
  }
  return v.get<bool>();
}

std::string get_str(const json& obj, const char* scope, const char* key,
                    const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_string()) {
    throw ConfigError(std::string("config key '") + scope + "." + key +
                      "' must be a string");
  }
  return v.get<std::string>();
}

}  // namespace

void validate(const Config& config) {
  const ScreenGeometry& s = config.screen;
  require_positive(s.width_px, "screen.width_px");
  require_positive(s.height_px, "screen.height_px");
  require_positive(s.width_cm, "screen.width_cm");
  require_positive(s.height_cm, "screen.height_cm");
  require_positive(s.viewing_distance_cm, "screen.viewing_distance_cm");

  const FixationParams& f = config.fixation;
  require_positive(f.velocity_threshold_deg_s, "fixation.velocity_threshold_deg_s");
  require_positive(f.acceleration_threshold_deg_s2,
                   "fixation.acceleration_threshold_deg_s2");
  require_positive(f.min_duration_ms, "fixation.min_duration_ms");
  require_positive(f.merge_gap_ms, "fixation.merge_gap_ms");

  const SaliencyParams& sal = config.saliency;
  if (sal.grid_w <= 0 || sal.grid_h <= 0) {
    throw ConfigError("saliency.grid_w and saliency.grid_h must be > 0");
  }
  require_positive(sal.sigma_deg, "saliency.sigma_deg");
  if (!(sal.mask_threshold > 0.0 && sal.mask_threshold < 1.0)) {
    throw ConfigError("saliency.mask_threshold must lie in (0,1)");
  }

  const MetricParams& m = config.metrics;
  require_positive(m.kld_epsilon, "metrics.kld_epsilon");
  require_positive(m.ioc_disc_radius_deg, "metrics.ioc_disc_radius_deg");
  if (m.lev_grid_w < 1 || m.lev_grid_h < 1) {
    throw ConfigError("metrics.lev_grid_w and metrics.lev_grid_h must be >= 1");
  }
}

Config parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config root must be a JSON object");
  check_keys(root, "", {"screen", "fixation", "saliency", "metrics"});

  Config config;
  if (root.contains("screen")) {
    const json& s = root.at("screen");
    if (!s.is_object()) throw ConfigError("config key 'screen' must be an object");
    check_keys(s, "screen",
               {"width_px", "height_px", "width_cm", "height_cm",
                "viewing_distance_cm"});
    config.screen.width_px = get_num(s, "screen", "width_px", config.screen.width_px);
    config.screen.height_px = get_num(s, "screen", "height_px", config.screen.height_px);
    config.screen.width_cm = get_num(s, "screen", "width_cm", config.screen.width_cm);
    config.screen.height_cm = get_num(s, "screen", "height_cm", config.screen.height_cm);
    config.screen.viewing_distance_cm =
        get_num(s, "screen", "viewing_distance_cm", config.screen.viewing_distance_cm);
  }
  if (root.contains("fixation")) {
    const json& f = root.at("fixation");
    if (!f.is_object()) throw ConfigError("config key 'fixation' must be an object");
    check_keys(f, "fixation",
               {"velocity_threshold_deg_s", "acceleration_threshold_deg_s2",
                "min_duration_ms", "merge_gap_ms"});
    config.fixation.velocity_threshold_deg_s =
        get_num(f, "fixation", "velocity_threshold_deg_s",
                config.fixation.velocity_threshold_deg_s);
    config.fixation.acceleration_threshold_deg_s2 =
        get_num(f, "fixation", "acceleration_threshold_deg_s2",
                config.fixation.acceleration_threshold_deg_s2);
    config.fixation.min_duration_ms =
        get_num(f, "fixation", "min_duration_ms", config.fixation.min_duration_ms);
    config.fixation.merge_gap_ms =
        get_num(f, "fixation", "merge_gap_ms", config.fixation.merge_gap_ms);
  }
  if (root.contains("saliency")) {
    const json& s = root.at("saliency");
    if (!s.is_object()) throw ConfigError("config key 'saliency' must be an object");
    check_keys(s, "saliency",
               {"grid_w", "grid_h", "sigma_deg", "mask_threshold", "weighting"});
    config.saliency.grid_w = get_int(s, "saliency", "grid_w", config.saliency.grid_w);
    config.saliency.grid_h = get_int(s, "saliency", "grid_h", config.saliency.grid_h);
    config.saliency.sigma_deg =
        get_num(s, "saliency", "sigma_deg", config.saliency.sigma_deg);
    config.saliency.mask_threshold =
        get_num(s, "saliency", "mask_threshold", config.saliency.mask_threshold);
    const std::string w = get_str(s, "saliency", "weighting", "duration");
    if (w == "duration") {
      config.saliency.weighting = DepositWeighting::Duration;
    } else if (w == "count") {
      config.saliency.weighting = DepositWeighting::Count;
    } else {
      throw ConfigError("saliency.weighting must be 'duration' or 'count'");
    }
  }
  if (root.contains("metrics")) {
    const json& m = root.at("metrics");
    if (!m.is_object()) throw ConfigError("config key 'metrics' must be an object");
    check_keys(m, "metrics",
               {"kld_epsilon", "ioc_disc_radius_deg", "lev_grid_w", "lev_grid_h",
                "collapse_repeats", "ioc_mask_mode"});
    config.metrics.kld_epsilon =
        get_num(m, "metrics", "kld_epsilon", config.metrics.kld_epsilon);
    config.metrics.ioc_disc_radius_deg =
        get_num(m, "metrics", "ioc_disc_radius_deg", config.metrics.ioc_disc_radius_deg);
    config.metrics.lev_grid_w =
        get_int(m, "metrics", "lev_grid_w", config.metrics.lev_grid_w);
    config.metrics.lev_grid_h =
        get_int(m, "metrics", "lev_grid_h", config.metrics.lev_grid_h);
    config.metrics.collapse_repeats =
        get_bool(m, "metrics", "collapse_repeats", config.metrics.collapse_repeats);
    const std::string mode = get_str(m, "metrics", "ioc_mask_mode", "disc");
    if (mode == "disc") {
      config.metrics.ioc_mask_mode = IocMaskMode::Disc;
    } else if (mode == "gaussian") {
      config.metrics.ioc_mask_mode = IocMaskMode::GaussianThreshold;
    } else {
      throw ConfigError("metrics.ioc_mask_mode must be 'disc' or 'gaussian'");
    }
  }

  validate(config);
  return config;
}

Config load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open config file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_to_json(const Config& config) {
  json root;
  root["screen"] = {{"width_px", config.screen.width_px},
                    {"height_px", config.screen.height_px},
                    {"width_cm", config.screen.width_cm},
                    {"height_cm", config.screen.height_cm},
                    {"viewing_distance_cm", config.screen.viewing_distance_cm}};
  root["fixation"] = {
      {"velocity_threshold_deg_s", config.fixation.velocity_threshold_deg_s},
      {"acceleration_threshold_deg_s2", config.fixation.acceleration_threshold_deg_s2},
      {"min_duration_ms", config.fixation.min_duration_ms},
      {"merge_gap_ms", config.fixation.merge_gap_ms}};
  root["saliency"] = {
      {"grid_w", config.saliency.grid_w},
      {"grid_h", config.saliency.grid_h},
      {"sigma_deg", config.saliency.sigma_deg},
      {"mask_threshold", config.saliency.mask_threshold},
      {"weighting",
       config.saliency.weighting == DepositWeighting::Duration ? "duration" : "count"}};
  root["metrics"] = {
      {"kld_epsilon", config.metrics.kld_epsilon},
      {"ioc_disc_radius_deg", config.metrics.ioc_disc_radius_deg},
      {"lev_grid_w", config.metrics.lev_grid_w},
      {"lev_grid_h", config.metrics.lev_grid_h},
      {"collapse_repeats", config.metrics.collapse_repeats},
      {"ioc_mask_mode",
       config.metrics.ioc_mask_mode == IocMaskMode::Disc ? "disc" : "gaussian"}};
  return root.dump(2);
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string params_hash(const Config& config) {
  // Canonical form: fixed key order, %.17g floats. Stable across runs and
  // platforms with IEEE doubles.
  std::ostringstream s;
  s << "screen.width_px=" << canonical_double(config.screen.width_px)
    << ";screen.height_px=" << canonical_double(config.screen.height_px)
    << ";screen.width_cm=" << canonical_double(config.screen.width_cm)
    << ";screen.height_cm=" << canonical_double(config.screen.height_cm)
    << ";screen.viewing_distance_cm="
    << canonical_double(config.screen.viewing_distance_cm)
    << ";fixation.velocity_threshold_deg_s="
    << canonical_double(config.fixation.velocity_threshold_deg_s)
    << ";fixation.acceleration_threshold_deg_s2="
    << canonical_double(config.fixation.acceleration_threshold_deg_s2)
    << ";fixation.min_duration_ms="
    << canonical_double(config.fixation.min_duration_ms)
    << ";fixation.merge_gap_ms=" << canonical_double(config.fixation.merge_gap_ms)
    << ";saliency.grid_w=" << config.saliency.grid_w
    << ";saliency.grid_h=" << config.saliency.grid_h
    << ";saliency.sigma_deg=" << canonical_double(config.saliency.sigma_deg)
    << ";saliency.mask_threshold="
    << canonical_double(config.saliency.mask_threshold)
    << ";saliency.weighting="
    << (config.saliency.weighting == DepositWeighting::Duration ? "duration"
                                                                : "count")
    << ";metrics.kld_epsilon=" << canonical_double(config.metrics.kld_epsilon)
    << ";metrics.ioc_disc_radius_deg="
    << canonical_double(config.metrics.ioc_disc_radius_deg)
    << ";metrics.lev_grid_w=" << config.metrics.lev_grid_w
    << ";metrics.lev_grid_h=" << config.metrics.lev_grid_h
    << ";metrics.collapse_repeats=" << (config.metrics.collapse_repeats ? 1 : 0)
    << ";metrics.ioc_mask_mode="
    << (config.metrics.ioc_mask_mode == IocMaskMode::Disc ? "disc" : "gaussian");

  const std::uint64_t h = fnv1a64(s.str());
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace gazeval
