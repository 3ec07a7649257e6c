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

#ifndef GAZEVAL_CONFIG_HPP
#define GAZEVAL_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <string>

#include "gazeval/types.hpp"

namespace gazeval {

// Velocity/acceleration fixation classifier settings. Thresholds are in
// degrees of visual angle; durations in milliseconds.
struct FixationParams {
  double velocity_threshold_deg_s = 30.0;
  double acceleration_threshold_deg_s2 = 8000.0;
  double min_duration_ms = 50.0;
  double merge_gap_ms = 75.0;
};

enum class DepositWeighting { Duration, Count };

struct SaliencyParams {
  int grid_w = 512;
  int grid_h = 512;
  double sigma_deg = 1.0;
  double mask_threshold = 0.1;  // fraction of map maximum, in (0,1)
  DepositWeighting weighting = DepositWeighting::Duration;
};

enum class IocMaskMode { Disc, GaussianThreshold };

struct MetricParams {
  double kld_epsilon = 1e-12;
  double ioc_disc_radius_deg = 1.0;
  int lev_grid_w = 5;
  int lev_grid_h = 5;
  bool collapse_repeats = true;
  IocMaskMode ioc_mask_mode = IocMaskMode::Disc;
};

// Effective toolkit configuration. Every output artifact carries
// params_hash(config) so mismatched comparisons are detectable.
struct Config {
  ScreenGeometry screen;
  FixationParams fixation;
  SaliencyParams saliency;
  MetricParams metrics;
};

// Throws ConfigError when any field violates its invariant.
void validate(const Config& config);

// Strict-schema JSON load: unknown keys are errors, missing keys keep
// defaults. Throws IoError (unreadable file) or ConfigError (bad content).
Config load_config_file(const std::filesystem::path& path);

// Parses a config from JSON text (same rules as load_config_file).
Config parse_config(const std::string& json_text);

std::string config_to_json(const Config& config);

// Stable 64-bit FNV-1a digest of the canonical config serialization,
// rendered as 16 lowercase hex chars.
std::string params_hash(const Config& config);

std::uint64_t fnv1a64(const std::string& data);

}  // namespace gazeval

#endif  // GAZEVAL_CONFIG_HPP
