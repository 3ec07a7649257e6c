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

#ifndef GAZEVAL_STUDY_HPP_
#define GAZEVAL_STUDY_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gazeval/types.hpp"

namespace gazeval {

// Confusion-matrix scores for the real-vs-synthetic task. Positive class is
// Synthetic. Rates whose denominator class is absent stay unset.
struct VttScore {
  std::string reader_id;
  int tp = 0;
  int tn = 0;
  int fp = 0;
  int fn = 0;
  double accuracy = 0.0;
  std::optional<double> sensitivity;  // TP / (TP + FN)
  std::optional<double> specificity;  // TN / (TN + FP)
};

// Per-reader diagnostic agreement rates split by stimulus class. A class the
// reader never saw stays unset.
struct AgreementRates {
  std::optional<double> real;
  std::optional<double> synthetic;
  double all = 0.0;
  int n_real = 0;
  int n_synthetic = 0;
};

enum class VoteOutcome { Correct, Incorrect };

struct PathologyAccuracy {
  double accuracy = 0.0;  // across all trials in the group
  int n_trials = 0;
  std::map<std::string, double> per_reader;
};

// 1 when the reader's findings overlap the gold pathology set. Empty gold set
// (normal image) agrees only with an empty findings set.
int diagnostic_agreement(const TrialRecord& trial, const StimulusRecord& gold);

// Agreement rates per reader over Diagnosis trials, split Real/Synthetic/All.
std::map<std::string, AgreementRates> agreement_rates(
    const std::vector<TrialRecord>& trials,
    const std::vector<StimulusRecord>& catalog);

// Confusion counts and rates per reader over real-vs-synthetic trials.
std::map<std::string, VttScore> vtt_score(
    const std::vector<TrialRecord>& trials,
    const std::vector<StimulusRecord>& catalog);

// Plurality vote over all readers' votes for one stimulus; an exact tie
// counts as incorrect.
VoteOutcome majority_vote(const std::vector<TrialRecord>& trials,
                          const StimulusRecord& gold);

// Real-vs-synthetic accuracy on synthetic stimuli, grouped by gold pathology
// label. A stimulus with k labels contributes to k groups; an empty label set
// contributes to "Normal". Accuracy averages over trials; a per-reader
// breakdown is reported alongside.
std::map<std::string, PathologyAccuracy> per_pathology_vtt(
    const std::vector<TrialRecord>& trials,
    const std::vector<StimulusRecord>& catalog);

}  // namespace gazeval

#endif  // GAZEVAL_STUDY_HPP_
