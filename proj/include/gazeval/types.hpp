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

#ifndef GAZEVAL_TYPES_HPP
#define GAZEVAL_TYPES_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gazeval {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline bool operator==(const Vec2& a, const Vec2& b) {
  return a.x == b.x && a.y == b.y;
}

// One binocular tracker sample. An absent eye means the tracker flagged it
// invalid for that sample (blink, lost pupil).
struct GazeSample {
  std::int64_t t_ms = 0;
  std::optional<Vec2> left;
  std::optional<Vec2> right;

  bool both_invalid() const { return !left && !right; }
};

// Ordered gaze samples for one trial, timestamps strictly increasing.
struct SampleStream {
  std::vector<GazeSample> samples;
  // Valid coordinates that fell outside the screen and were clamped in.
  int clamped_count = 0;
  // Samples retained with both eyes invalid.
  int both_invalid_count = 0;
};

// Physical display setup. Pixel pitch (cm/px) may differ per axis.
struct ScreenGeometry {
  double width_px = 1920.0;
  double height_px = 1080.0;
  double width_cm = 51.84;
  double height_cm = 29.16;
  double viewing_distance_cm = 80.0;

  double pitch_x_cm() const { return width_cm / width_px; }
  double pitch_y_cm() const { return height_cm / height_px; }
};

enum class Authenticity { Real, Synthetic };

enum class Task { Diagnosis, VTT };

enum class ExperienceBand { Y0_9, Y10_19, Y20Plus };

struct StimulusRecord {
  std::string stimulus_id;
  Authenticity authenticity = Authenticity::Real;
  std::set<std::string> pathology_labels;  // empty = normal
};

struct ReaderProfile {
  std::string reader_id;
  std::set<std::string> specialties;
  ExperienceBand years_band = ExperienceBand::Y0_9;
};

// One reader x one stimulus x one task. Exactly one of the two answer
// variants is set, matching the task.
struct TrialRecord {
  std::string reader_id;
  std::string stimulus_id;
  Task task = Task::Diagnosis;
  std::string gaze_file;
  double duration_s = 0.0;
  std::optional<std::set<std::string>> finding_labels;    // Diagnosis
  std::optional<Authenticity> authenticity_vote;          // VTT
};

struct FixationEvent {
  Vec2 centroid;        // screen pixels
  double onset_ms = 0.0;
  double duration_ms = 0.0;
};

// Detected fixations for one trial, ordered by onset, non-overlapping.
struct Scanpath {
  std::string stimulus_id;
  std::string reader_id;
  Task task = Task::Diagnosis;
  std::vector<FixationEvent> fixations;
};

const char* to_string(Authenticity a);
const char* to_string(Task t);
const char* to_string(ExperienceBand b);
std::optional<Authenticity> authenticity_from_string(const std::string& s);
std::optional<Task> task_from_string(const std::string& s);
std::optional<ExperienceBand> experience_band_from_string(const std::string& s);

}  // namespace gazeval

#endif  // GAZEVAL_TYPES_HPP
