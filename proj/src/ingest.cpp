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

#include "gazeval/ingest.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "gazeval/errors.hpp"

namespace gazeval {

using nlohmann::json;

namespace {

constexpr const char* kGazeHeader = "t_ms,lx,ly,rx,ry,lvalid,rvalid";

std::vector<std::string> split_csv(const std::string& line) {
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
  return fields;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

ParseError row_error(int line_no, const std::string& what) {
  return ParseError("gaze csv line " + std::to_string(line_no) + ": " + what);
}

std::int64_t parse_i64(const std::string& s, int line_no, const char* field) {
  if (s.empty()) throw row_error(line_no, std::string(field) + " is empty");
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (errno != 0 || end != s.c_str() + s.size()) {
    throw row_error(line_no, std::string(field) + " is not an integer: '" + s + "'");
  }
  return v;
}

double parse_double(const std::string& s, int line_no, const char* field) {
  if (s.empty()) throw row_error(line_no, std::string(field) + " is empty");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (errno != 0 || end != s.c_str() + s.size()) {
    throw row_error(line_no, std::string(field) + " is not a number: '" + s + "'");
  }
  return v;
}

int parse_flag(const std::string& s, int line_no, const char* field) {
  if (s == "0") return 0;
  if (s == "1") return 1;
  throw row_error(line_no, std::string(field) + " must be 0 or 1, got '" + s + "'");
}

// Largest representable coordinate still inside [0, limit).
double clamp_coord(double v, double limit, int* clamped) {
  if (v < 0.0) {
    ++*clamped;
    return 0.0;
  }
  if (v >= limit) {
    ++*clamped;
    return std::nextafter(limit, 0.0);
  }
  return v;
}

std::optional<Vec2> parse_eye(const std::string& xs, const std::string& ys,
                              int flag, int line_no, const char* eye,
                              const ScreenGeometry& geom, int* clamped) {
  if (flag == 0) return std::nullopt;
  const double x = parse_double(xs, line_no, eye);
  const double y = parse_double(ys, line_no, eye);
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw row_error(line_no, std::string(eye) + " coordinate is not finite");
  }
  return Vec2{clamp_coord(x, geom.width_px, clamped),
              clamp_coord(y, geom.height_px, clamped)};
}

const json& require_field(const json& obj, const char* key, const char* scope) {
  if (!obj.contains(key)) {
    throw ParseError(std::string(scope) + ": missing required field '" + key + "'");
  }
  return obj.at(key);
}

void reject_unknown(const json& obj, const char* scope,
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
      throw ParseError(std::string(scope) + ": unknown field '" + key + "'");
    }
  }
}

std::set<std::string> parse_string_set(const json& arr, const char* scope) {
  if (!arr.is_array()) {
    throw ParseError(std::string(scope) + " must be an array of strings");
  }
  std::set<std::string> out;
  for (const json& e : arr) {
    if (!e.is_string()) {
      throw ParseError(std::string(scope) + " must contain only strings");
    }
    out.insert(e.get<std::string>());
  }
  return out;
}

}  // namespace

SampleStream parse_gaze_stream(std::istream& in, const ScreenGeometry& geometry) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("gaze csv: empty file");
  }
  if (strip_cr(line) != kGazeHeader) {
    throw ParseError(std::string("gaze csv: bad header, expected '") + kGazeHeader +
                     "'");
  }

  SampleStream stream;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 7) {
      throw row_error(line_no, "expected 7 fields, got " +
                                   std::to_string(fields.size()));
    }
    GazeSample sample;
    sample.t_ms = parse_i64(fields[0], line_no, "t_ms");
    const int lvalid = parse_flag(fields[5], line_no, "lvalid");
    const int rvalid = parse_flag(fields[6], line_no, "rvalid");
    sample.left = parse_eye(fields[1], fields[2], lvalid, line_no, "left eye",
                            geometry, &stream.clamped_count);
    sample.right = parse_eye(fields[3], fields[4], rvalid, line_no, "right eye",
                             geometry, &stream.clamped_count);

    if (!stream.samples.empty() && sample.t_ms <= stream.samples.back().t_ms) {
      throw row_error(line_no,
                      "timestamp " + std::to_string(sample.t_ms) +
                          " does not increase past " +
                          std::to_string(stream.samples.back().t_ms));
    }
    if (sample.both_invalid()) ++stream.both_invalid_count;
    stream.samples.push_back(sample);
  }
  if (stream.samples.empty()) {
    throw ParseError("gaze csv: no data rows");
  }
  return stream;
}

SampleStream parse_gaze_stream_file(const std::filesystem::path& path,
                                    const ScreenGeometry& geometry) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open gaze file: " + path.string());
  }
  try {
    return parse_gaze_stream(in, geometry);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::optional<Vec2> cyclopean(const GazeSample& sample) {
  if (sample.left && sample.right) {
    return Vec2{(sample.left->x + sample.right->x) / 2.0,
                (sample.left->y + sample.right->y) / 2.0};
  }
  if (sample.left) return sample.left;
  if (sample.right) return sample.right;
  return std::nullopt;
}

SessionManifest parse_session_manifest(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("manifest root must be an object");
  reject_unknown(root, "manifest", {"reader", "trials"});

  const json& reader = require_field(root, "reader", "manifest");
  if (!reader.is_object()) throw ParseError("manifest.reader must be an object");
  reject_unknown(reader, "manifest.reader", {"id", "specialties", "years_band"});

  SessionManifest manifest;
  const json& id = require_field(reader, "id", "manifest.reader");
  if (!id.is_string() || id.get<std::string>().empty()) {
    throw ParseError("manifest.reader.id must be a non-empty string");
  }
  manifest.reader.reader_id = id.get<std::string>();
  manifest.reader.specialties = parse_string_set(
      require_field(reader, "specialties", "manifest.reader"),
      "manifest.reader.specialties");
  const json& band = require_field(reader, "years_band", "manifest.reader");
  if (!band.is_string()) {
    throw ParseError("manifest.reader.years_band must be a string");
  }
  const auto parsed_band = experience_band_from_string(band.get<std::string>());
  if (!parsed_band) {
    throw ParseError("manifest.reader.years_band must be one of '0-9', '10-19', '20+'");
  }
  manifest.reader.years_band = *parsed_band;

  const json& trials = require_field(root, "trials", "manifest");
  if (!trials.is_array()) throw ParseError("manifest.trials must be an array");

  std::set<std::pair<std::string, Task>> seen;
  for (std::size_t i = 0; i < trials.size(); ++i) {
    const json& t = trials[i];
    const std::string scope = "manifest.trials[" + std::to_string(i) + "]";
    if (!t.is_object()) throw ParseError(scope + " must be an object");
    reject_unknown(t, scope.c_str(),
                   {"stimulus_id", "task", "gaze_file", "duration_s", "answer"});

    TrialRecord trial;
    trial.reader_id = manifest.reader.reader_id;
    const json& sid = require_field(t, "stimulus_id", scope.c_str());
    if (!sid.is_string() || sid.get<std::string>().empty()) {
      throw ParseError(scope + ".stimulus_id must be a non-empty string");
    }
    trial.stimulus_id = sid.get<std::string>();

    const json& task = require_field(t, "task", scope.c_str());
    if (!task.is_string()) throw ParseError(scope + ".task must be a string");
    const auto parsed_task = task_from_string(task.get<std::string>());
    if (!parsed_task) {
      throw ParseError(scope + ".task must be 'Diagnosis' or 'VTT'");
    }
    trial.task = *parsed_task;

    const json& gaze = require_field(t, "gaze_file", scope.c_str());
    if (!gaze.is_string()) throw ParseError(scope + ".gaze_file must be a string");
    trial.gaze_file = gaze.get<std::string>();

    const json& dur = require_field(t, "duration_s", scope.c_str());
    if (!dur.is_number()) throw ParseError(scope + ".duration_s must be a number");
    trial.duration_s = dur.get<double>();
    if (!(trial.duration_s >= 0.0)) {
      throw ParseError(scope + ".duration_s must be >= 0");
    }

    // The answer variant is inferred from its JSON type: an array of labels
    // belongs to the Diagnosis task, a Real/Synthetic string to the VTT task.
    const json& answer = require_field(t, "answer", scope.c_str());
    if (answer.is_array()) {
      if (trial.task != Task::Diagnosis) {
        throw ParseError(scope + ": answer variant mismatch "
                         "(finding labels given for a VTT trial)");
      }
      trial.finding_labels = parse_string_set(answer, (scope + ".answer").c_str());
    } else if (answer.is_string()) {
      if (trial.task != Task::VTT) {
        throw ParseError(scope + ": answer variant mismatch "
                         "(authenticity vote given for a Diagnosis trial)");
      }
      const auto vote = authenticity_from_string(answer.get<std::string>());
      if (!vote) {
        throw ParseError(scope + ".answer must be 'Real' or 'Synthetic'");
      }
      trial.authenticity_vote = *vote;
    } else {
      throw ParseError(scope + ".answer must be an array of labels or a string vote");
    }

    if (!seen.insert({trial.stimulus_id, trial.task}).second) {
      throw ParseError(scope + ": duplicate trial for stimulus '" +
                       trial.stimulus_id + "', task " + to_string(trial.task));
    }
    manifest.trials.push_back(std::move(trial));
  }
  return manifest;
}

SessionManifest load_session_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open session manifest: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_session_manifest(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string session_manifest_to_json(const SessionManifest& manifest) {
  json root;
  root["reader"] = {
      {"id", manifest.reader.reader_id},
      {"specialties", manifest.reader.specialties},
      {"years_band", to_string(manifest.reader.years_band)}};
  json trials = json::array();
  for (const TrialRecord& t : manifest.trials) {
    json jt = {{"stimulus_id", t.stimulus_id},
               {"task", to_string(t.task)},
               {"gaze_file", t.gaze_file},
               {"duration_s", t.duration_s}};
    if (t.task == Task::Diagnosis) {
      jt["answer"] = t.finding_labels.value_or(std::set<std::string>{});
    } else {
      jt["answer"] = to_string(t.authenticity_vote.value_or(Authenticity::Real));
    }
    trials.push_back(std::move(jt));
  }
  root["trials"] = std::move(trials);
  return root.dump(2);
}

std::vector<StimulusRecord> parse_stimulus_catalog(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("catalog is not valid JSON: ") + e.what());
  }
  if (!root.is_array()) throw ParseError("catalog root must be an array");

  std::vector<StimulusRecord> catalog;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < root.size(); ++i) {
    const json& e = root[i];
    const std::string scope = "catalog[" + std::to_string(i) + "]";
    if (!e.is_object()) throw ParseError(scope + " must be an object");
    reject_unknown(e, scope.c_str(),
                   {"stimulus_id", "authenticity", "pathology_labels"});

    StimulusRecord rec;
    const json& sid = require_field(e, "stimulus_id", scope.c_str());
    if (!sid.is_string() || sid.get<std::string>().empty()) {
      throw ParseError(scope + ".stimulus_id must be a non-empty string");
    }
    rec.stimulus_id = sid.get<std::string>();
    if (!seen.insert(rec.stimulus_id).second) {
      throw ParseError(scope + ": duplicate stimulus_id '" + rec.stimulus_id + "'");
    }

    const json& auth = require_field(e, "authenticity", scope.c_str());
    if (!auth.is_string()) throw ParseError(scope + ".authenticity must be a string");
    const auto parsed = authenticity_from_string(auth.get<std::string>());
    if (!parsed) {
      throw ParseError(scope + ".authenticity must be 'Real' or 'Synthetic'");
    }
    rec.authenticity = *parsed;
    rec.pathology_labels = parse_string_set(
        require_field(e, "pathology_labels", scope.c_str()),
        (scope + ".pathology_labels").c_str());
    catalog.push_back(std::move(rec));
  }
  return catalog;
}

std::vector<StimulusRecord> load_stimulus_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open stimulus catalog: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_stimulus_catalog(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string stimulus_catalog_to_json(const std::vector<StimulusRecord>& catalog) {
  json root = json::array();
  for (const StimulusRecord& rec : catalog) {
    root.push_back({{"stimulus_id", rec.stimulus_id},
                    {"authenticity", to_string(rec.authenticity)},
                    {"pathology_labels", rec.pathology_labels}});
  }
  return root.dump(2);
}

}  // namespace gazeval
