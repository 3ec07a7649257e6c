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

#ifndef GAZEVAL_FIXATION_HPP
#define GAZEVAL_FIXATION_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "gazeval/config.hpp"
#include "gazeval/types.hpp"

namespace gazeval {

// Angle in degrees subtended at the eye by two screen points, via the
// arctangent of the chord distance in cm over the viewing distance. The gaze
// axis is assumed normal to the screen center.
double visual_angle(const Vec2& p1, const Vec2& p2, const ScreenGeometry& geometry);

// Velocity/acceleration fixation detector.
//
// Cyclopean points are classified sample by sample: angular velocity by
// central difference over the nearest valid neighbors (one-sided at the
// ends), angular acceleration by central difference of those velocities. A
// sample is fixation-class iff velocity < velocity_threshold and
// |acceleration| < acceleration_threshold.
//
// Maximal runs of fixation-class samples become fixations. A run tolerates
// interior stretches of invalid samples up to merge_gap_ms (blink gaps);
// saccade-class samples always split runs. Runs shorter than min_duration_ms
// are dropped. Centroids are duration-weighted means of member points.
//
// Throws ParseError when fewer than two valid cyclopean points exist.
std::vector<FixationEvent> detect_fixations(const SampleStream& stream,
                                            const FixationParams& params,
                                            const ScreenGeometry& geometry);

enum class FixationSelector { First, Last, Longest, Shortest };

// First/Last by onset order; Longest/Shortest by duration with ties broken
// by earlier onset. Throws ParseError on an empty scanpath.
const FixationEvent& select_fixation(const Scanpath& scanpath,
                                     FixationSelector selector);

const char* to_string(FixationSelector s);

// Fixation JSON Lines: a header object
// {"stimulus_id", "reader_id", "task", "params_hash"} followed by one
// {"x","y","onset_ms","duration_ms"} object per fixation.
std::string scanpath_to_jsonl(const Scanpath& scanpath, const std::string& hash);

struct LoadedScanpath {
  Scanpath scanpath;
  std::string params_hash;
};

LoadedScanpath parse_scanpath_jsonl(const std::string& text);
LoadedScanpath load_scanpath_jsonl(const std::filesystem::path& path);

}  // namespace gazeval

#endif  // GAZEVAL_FIXATION_HPP
