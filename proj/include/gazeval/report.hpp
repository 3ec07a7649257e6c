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

#ifndef GAZEVAL_REPORT_HPP_
#define GAZEVAL_REPORT_HPP_

#include <filesystem>
#include <vector>

#include "gazeval/config.hpp"

namespace gazeval {

struct ReportOptions {
  std::filesystem::path sessions_dir;  // directory of session manifests (*.json)
  std::filesystem::path catalog_file;
  std::filesystem::path gaze_dir;      // gaze_file paths resolve against this
  std::filesystem::path out_dir;
  bool skip_bad_trials = false;        // downgrade trial failures to warnings
  int jobs = 1;                        // worker threads for per-trial analysis
};

struct ReportResult {
  int n_trials = 0;
  int skipped_trials = 0;
  std::vector<std::filesystem::path> files;
};

// Full pipeline: fixations, attention maps, masks, metrics, study scoring.
// Writes table1.csv through table4.csv, ttests.csv, and report.json into
// out_dir. Output is deterministic: identical inputs and config give
// byte-identical files, independent of the worker count.
ReportResult run_report(const ReportOptions& options, const Config& config);

}  // namespace gazeval

#endif  // GAZEVAL_REPORT_HPP_
