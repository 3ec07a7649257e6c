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

#ifndef GAZEVAL_INGEST_HPP
#define GAZEVAL_INGEST_HPP

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "gazeval/types.hpp"

namespace gazeval {

// Parsed session manifest: one reader plus their trials.
struct SessionManifest {
  ReaderProfile reader;
  std::vector<TrialRecord> trials;
};

// Reads a gaze CSV (header `t_ms,lx,ly,rx,ry,lvalid,rvalid`). Rows with both
// eyes invalid are retained; finite out-of-screen coordinates are clamped to
// the screen and counted in clamped_count. Throws ParseError on malformed
// rows (with line number), non-monotone timestamps, a bad header, or an
// empty file.
SampleStream parse_gaze_stream(std::istream& in, const ScreenGeometry& geometry);
SampleStream parse_gaze_stream_file(const std::filesystem::path& path,
                                    const ScreenGeometry& geometry);

// Single gaze point for one sample: mean of both eyes when both are valid,
// the valid eye when only one is, absent when neither.
std::optional<Vec2> cyclopean(const GazeSample& sample);

// Strict-schema JSON manifest parse. Throws ParseError on schema violations,
// answer/task mismatches, or duplicate (stimulus, task) entries.
SessionManifest parse_session_manifest(const std::string& json_text);
SessionManifest load_session_manifest(const std::filesystem::path& path);
std::string session_manifest_to_json(const SessionManifest& manifest);

// Stimulus catalog: JSON array of {stimulus_id, authenticity, pathology_labels}.
std::vector<StimulusRecord> parse_stimulus_catalog(const std::string& json_text);
std::vector<StimulusRecord> load_stimulus_catalog(const std::filesystem::path& path);
std::string stimulus_catalog_to_json(const std::vector<StimulusRecord>& catalog);

}  // namespace gazeval

#endif  // GAZEVAL_INGEST_HPP
