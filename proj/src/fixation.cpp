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

#include "gazeval/fixation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "gazeval/errors.hpp"
#include "gazeval/ingest.hpp"

namespace gazeval {

using nlohmann::json;

double visual_angle(const Vec2& p1, const Vec2& p2, const ScreenGeometry& geometry) {
  const double dx_cm = (p1.x - p2.x) * geometry.pitch_x_cm();
  const double dy_cm = (p1.y - p2.y) * geometry.pitch_y_cm();
  const double chord_cm = std::hypot(dx_cm, dy_cm);
  return std::atan(chord_cm / geometry.viewing_distance_cm) * 180.0 /
         std::numbers::pi;
}

namespace {

struct ValidPoint {
  std::size_t index;  // into stream.samples
  double t_ms;
  Vec2 p;
};

// Angular velocity in deg/s between two valid points.
double speed_between(const ValidPoint& a, const ValidPoint& b,
                     const ScreenGeometry& geom) {
  const double dt_s = (b.t_ms - a.t_ms) / 1000.0;
  return visual_angle(a.p, b.p, geom) / dt_s;
}

}  // namespace

std::vector<FixationEvent> detect_fixations(const SampleStream& stream,
                                            const FixationParams& params,
                                            const ScreenGeometry& geometry) {
  std::vector<ValidPoint> pts;
  pts.reserve(stream.samples.size());
  for (std::size_t i = 0; i < stream.samples.size(); ++i) {
    if (auto p = cyclopean(stream.samples[i])) {
      pts.push_back({i, static_cast<double>(stream.samples[i].t_ms), *p});
    }
  }
  if (stream.samples.empty() || pts.empty()) {
    throw ParseError("fixation detection: all samples invalid");
  }
  if (pts.size() < 2) {
    throw ParseError("fixation detection: stream too short (need >= 2 valid points)");
  }

  const std::size_t n = pts.size();

  // Velocity: central difference over valid neighbors, one-sided at the ends.
  std::vector<double> vel(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t lo = (k == 0) ? k : k - 1;
    const std::size_t hi = (k == n - 1) ? k : k + 1;
    vel[k] = speed_between(pts[lo], pts[hi], geometry);
  }

  // Acceleration: central difference of velocities, same stencil.
  std::vector<double> acc(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t lo = (k == 0) ? k : k - 1;
    const std::size_t hi = (k == n - 1) ? k : k + 1;
    const double dt_s = (pts[hi].t_ms - pts[lo].t_ms) / 1000.0;
    acc[k] = (vel[hi] - vel[lo]) / dt_s;
  }

  std::vector<char> is_fix(n);
  for (std::size_t k = 0; k < n; ++k) {
    is_fix[k] = vel[k] < params.velocity_threshold_deg_s &&
                std::abs(acc[k]) < params.acceleration_threshold_deg_s2;
  }

  // Build runs over the valid subsequence. Consecutive fixation-class points
  // stay in one run while the time gap between them is at most merge_gap_ms;
  // longer invalid stretches and any saccade-class point end the run.
  std::vector<FixationEvent> out;
  std::size_t run_begin = n;  // n = no open run
  std::size_t run_end = 0;

  auto flush = [&](std::size_t begin, std::size_t end) {
    const double onset = pts[begin].t_ms;
    const double duration = pts[end].t_ms - pts[begin].t_ms;
    if (duration < params.min_duration_ms) return;

    // Each member point owns the span of run time nearest to it.
    double wsum = 0.0, cx = 0.0, cy = 0.0;
    for (std::size_t k = begin; k <= end; ++k) {
      const double left = (k == begin) ? pts[k].t_ms
                                       : (pts[k - 1].t_ms + pts[k].t_ms) / 2.0;
      const double right = (k == end) ? pts[k].t_ms
                                      : (pts[k].t_ms + pts[k + 1].t_ms) / 2.0;
      const double w = right - left;
      wsum += w;
      cx += w * pts[k].p.x;
      cy += w * pts[k].p.y;
    }
    out.push_back({Vec2{cx / wsum, cy / wsum}, onset, duration});
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (!is_fix[k]) {
      if (run_begin < n) flush(run_begin, run_end);
      run_begin = n;
      continue;
    }
    if (run_begin == n) {
      run_begin = run_end = k;
      continue;
    }
    if (pts[k].t_ms - pts[run_end].t_ms <= params.merge_gap_ms) {
      run_end = k;
    } else {
      flush(run_begin, run_end);
      run_begin = run_end = k;
    }
  }
  if (run_begin < n) flush(run_begin, run_end);
  return out;
}

const FixationEvent& select_fixation(const Scanpath& scanpath,
                                     FixationSelector selector) {
  const auto& fx = scanpath.fixations;
  if (fx.empty()) {
    throw ParseError("select_fixation: empty scanpath");
  }
  switch (selector) {
    case FixationSelector::First:
      return fx.front();
    case FixationSelector::Last:
      return fx.back();
    case FixationSelector::Longest:
      return *std::max_element(fx.begin(), fx.end(),
                               [](const FixationEvent& a, const FixationEvent& b) {
                                 return a.duration_ms < b.duration_ms;
                               });
    case FixationSelector::Shortest:
      return *std::min_element(fx.begin(), fx.end(),
                               [](const FixationEvent& a, const FixationEvent& b) {
                                 return a.duration_ms < b.duration_ms;
                               });
  }
  throw ParseError("select_fixation: bad selector");
}

const char* to_string(FixationSelector s) {
  switch (s) {
    case FixationSelector::First: return "First";
    case FixationSelector::Last: return "Last";
    case FixationSelector::Longest: return "Longest";
    case FixationSelector::Shortest: return "Shortest";
  }
  return "First";
}

std::string scanpath_to_jsonl(const Scanpath& scanpath, const std::string& hash) {
  std::ostringstream out;
  json header = {{"stimulus_id", scanpath.stimulus_id},
                 {"reader_id", scanpath.reader_id},
                 {"task", to_string(scanpath.task)},
                 {"params_hash", hash}};
  out << header.dump() << "\n";
  for (const FixationEvent& f : scanpath.fixations) {
    json row = {{"x", f.centroid.x},
                {"y", f.centroid.y},
                {"onset_ms", f.onset_ms},
                {"duration_ms", f.duration_ms}};
    out << row.dump() << "\n";
  }
  return out.str();
}

LoadedScanpath parse_scanpath_jsonl(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  LoadedScanpath loaded;
  bool have_header = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError("fixation jsonl line " + std::to_string(line_no) + ": " +
                       e.what());
    }
    if (!obj.is_object()) {
      throw ParseError("fixation jsonl line " + std::to_string(line_no) +
                       ": expected an object");
    }
    if (!have_header) {
      for (const char* key : {"stimulus_id", "reader_id", "task", "params_hash"}) {
        if (!obj.contains(key) || !obj.at(key).is_string()) {
          throw ParseError(std::string("fixation jsonl header: missing field '") +
                           key + "'");
        }
      }
      loaded.scanpath.stimulus_id = obj.at("stimulus_id").get<std::string>();
      loaded.scanpath.reader_id = obj.at("reader_id").get<std::string>();
      const auto task = task_from_string(obj.at("task").get<std::string>());
      if (!task) {
        throw ParseError("fixation jsonl header: task must be 'Diagnosis' or 'VTT'");
      }
      loaded.scanpath.task = *task;
      loaded.params_hash = obj.at("params_hash").get<std::string>();
      have_header = true;
      continue;
    }
    FixationEvent f;
    for (const char* key : {"x", "y", "onset_ms", "duration_ms"}) {
      if (!obj.contains(key) || !obj.at(key).is_number()) {
        throw ParseError("fixation jsonl line " + std::to_string(line_no) +
                         ": missing numeric field '" + key + "'");
      }
    }
    f.centroid.x = obj.at("x").get<double>();
    f.centroid.y = obj.at("y").get<double>();
    f.onset_ms = obj.at("onset_ms").get<double>();
    f.duration_ms = obj.at("duration_ms").get<double>();
    loaded.scanpath.fixations.push_back(f);
  }
  if (!have_header) {
    throw ParseError("fixation jsonl: empty file (missing header line)");
  }
  return loaded;
}

LoadedScanpath load_scanpath_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open fixation file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_scanpath_jsonl(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace gazeval
