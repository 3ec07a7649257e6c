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

#include "gazeval/types.hpp"

namespace gazeval {

const char* to_string(Authenticity a) {
  return a == Authenticity::Real ? "Real" : "Synthetic";
}

const char* to_string(Task t) {
  return t == Task::Diagnosis ? "Diagnosis" : "VTT";
}

const char* to_string(ExperienceBand b) {
  switch (b) {
    case ExperienceBand::Y0_9: return "0-9";
    case ExperienceBand::Y10_19: return "10-19";
    case ExperienceBand::Y20Plus: return "20+";
  }
  return "0-9";
}

std::optional<Authenticity> authenticity_from_string(const std::string& s) {
  if (s == "Real") return Authenticity::Real;
  if (s == "Synthetic") return Authenticity::Synthetic;
  return std::nullopt;
}

std::optional<Task> task_from_string(const std::string& s) {
  if (s == "Diagnosis") return Task::Diagnosis;
  if (s == "VTT") return Task::VTT;
  return std::nullopt;
}

std::optional<ExperienceBand> experience_band_from_string(const std::string& s) {
  if (s == "0-9") return ExperienceBand::Y0_9;
  if (s == "10-19") return ExperienceBand::Y10_19;
  if (s == "20+") return ExperienceBand::Y20Plus;
  return std::nullopt;
}

}  // namespace gazeval
