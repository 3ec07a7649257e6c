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

#ifndef GAZEVAL_SIMULATE_HPP_
#define GAZEVAL_SIMULATE_HPP_

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gazeval/config.hpp"
#include "gazeval/types.hpp"

namespace gazeval {

// SplitMix64: counter-based 64-bit generator (Steele, Lea & Flood 2014).
// Chosen for the fixtures because it is trivial to reimplement identically
// in any language: state += 0x9E3779B97F4A7C15, then two xor-shift-multiply
// mixing rounds per draw.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1): top 53 bits scaled by 2^-53.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; the log argument is drawn from (0, 1].
  double gaussian() {
    const double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793 * u2);
  }

 private:
  std::uint64_t state_;
};

// Independent per-stream seed derived from the master seed; streams with
// different ids are decorrelated by an extra mixing round.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

// Gaussian blob the simulated fixation cluster centers are drawn from.
// Center coordinates are fractions of the screen; spread is the standard
// deviation in degrees of visual angle.
struct AttentionComponent {
  double center_x = 0.5;
  double center_y = 0.5;
  double weight = 1.0;
  double spread_deg = 3.0;
};

struct SimConfig {
  std::uint64_t seed = 42;
  int n_readers = 4;
  int n_stimuli = 8;
  double sample_rate_hz = 500.0;
  std::vector<AttentionComponent> attention_model;  // empty = one centered blob
  int min_fixations_per_trial = 4;
  int max_fixations_per_trial = 9;
  double min_fixation_duration_ms = 120.0;
  double max_fixation_duration_ms = 400.0;
  double vtt_correct_rate = 0.8;
  double diagnosis_agreement_rate = 0.65;
  std::vector<std::string> pathology_pool;  // empty = built-in 4-label pool
  double jitter_deg = 0.01;
};

// Throws ConfigError when any field violates its invariant. The sample
// period 1000 / sample_rate_hz must be a whole number of milliseconds
// because gaze CSV timestamps are integers.
void validate(const SimConfig& config);

SimConfig parse_sim_config(const std::string& json_text);
SimConfig load_sim_config_file(const std::filesystem::path& path);

// One synthetic trial: the raw samples plus the ground-truth fixation list.
//
// Clusters jitter uniformly within a disc of jitter_deg around their center,
// so every in-cluster sample stays far below the velocity threshold.
// Saccades between clusters step through a tapered chord profile
// (0.01°, 0.02°, 0.4°, main jump, then mirrored) whose entry and exit
// samples are velocity-quiet but acceleration-loud; every saccade sample
// therefore classifies as saccade and every cluster sample as fixation, and
// the detector recovers cluster count and durations exactly. Consecutive
// cluster centers are kept at least 1 degree apart.
struct SimulatedTrial {
  SampleStream stream;
  std::vector<FixationEvent> truth;  // onset/duration per cluster
  std::string csv;                   // serialized gaze CSV
};

SimulatedTrial simulate_trial(int n_fixations, SplitMix64& rng,
                              const SimConfig& sim, const Config& config);

// Writes the full fixture tree under out_dir:
//   catalog.json
//   sessions/<reader>.json        one manifest per reader
//   gaze/<reader>_<stimulus>_<task>.csv
//   truth/<reader>_<stimulus>_<task>.jsonl
// Every trial draws from a seed derived from (master seed, trial index), so
// output is byte-identical for a given config regardless of generation
// order. Returns the written file paths.
struct SimResult {
  int n_trials = 0;
  std::vector<std::filesystem::path> files;
};

SimResult simulate_gaze(const SimConfig& sim, const Config& config,
                        const std::filesystem::path& out_dir);

}  // namespace gazeval

#endif  // GAZEVAL_SIMULATE_HPP_
