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

#include "gazeval/study.hpp"

#include <algorithm>
#include <stdexcept>

namespace gazeval {

namespace {

std::map<std::string, const StimulusRecord*> catalog_index(
    const std::vector<StimulusRecord>& catalog) {
  std::map<std::string, const StimulusRecord*> index;
  for (const StimulusRecord& s : catalog) index[s.stimulus_id] = &s;
  return index;
}

const StimulusRecord& lookup(
    const std::map<std::string, const StimulusRecord*>& index,
    const std::string& stimulus_id) {
  const auto it = index.find(stimulus_id);
  if (it == index.end()) {
    throw std::invalid_argument("unknown stimulus '" + stimulus_id + "'");
  }
  return *it->second;
}

Authenticity vote_of(const TrialRecord& trial) {
  if (trial.task != Task::VTT || !trial.authenticity_vote) {
    throw std::invalid_argument("trial is not a scored real-vs-synthetic trial");
  }
  return *trial.authenticity_vote;
}

}  // namespace

int diagnostic_agreement(const TrialRecord& trial, const StimulusRecord& gold) {
  if (trial.task != Task::Diagnosis || !trial.finding_labels) {
    throw std::invalid_argument("diagnostic_agreement: trial is not a Diagnosis trial");
  }
  const std::set<std::string>& findings = *trial.finding_labels;
  if (gold.pathology_labels.empty()) {
    return findings.empty() ? 1 : 0;
  }
  for (const std::string& label : findings) {
    if (gold.pathology_labels.count(label)) return 1;
  }
  return 0;
}

std::map<std::string, AgreementRates> agreement_rates(
    const std::vector<TrialRecord>& trials,
    const std::vector<StimulusRecord>& catalog) {
  const auto index = catalog_index(catalog);

  struct Tally {
    int real_agree = 0, real_total = 0;
    int synth_agree = 0, synth_total = 0;
  };
  std::map<std::string, Tally> per_reader;

  for (const TrialRecord& trial : trials) {
    const StimulusRecord& gold = lookup(index, trial.stimulus_id);
    const int agree = diagnostic_agreement(trial, gold);
    Tally& t = per_reader[trial.reader_id];
    if (gold.authenticity == Authenticity::Real) {
      t.real_agree += agree;
      ++t.real_total;
    } else {
      t.synth_agree += agree;
      ++t.synth_total;
    }
  }

  std::map<std::string, AgreementRates> rates;
  for (const auto& [reader, t] : per_reader) {
    AgreementRates r;
    r.n_real = t.real_total;
    r.n_synthetic = t.synth_total;
    if (t.real_total > 0) r.real = static_cast<double>(t.real_agree) / t.real_total;
    if (t.synth_total > 0) {
      r.synthetic = static_cast<double>(t.synth_agree) / t.synth_total;
    }
    r.all = static_cast<double>(t.real_agree + t.synth_agree) /
            (t.real_total + t.synth_total);
    rates[reader] = r;
  }
  return rates;
}

std::map<std::string, VttScore> vtt_score(
    const std::vector<TrialRecord>& trials,
    const std::vector<StimulusRecord>& catalog) {
  const auto index = catalog_index(catalog);

  std::map<std::string, VttScore> scores;
  for (const TrialRecord& trial : trials) {
    const StimulusRecord& gold = lookup(index, trial.stimulus_id);
    const Authenticity vote = vote_of(trial);
    VttScore& s = scores[trial.reader_id];
    s.reader_id = trial.reader_id;
    if (gold.authenticity == Authenticity::Synthetic) {
      vote == Authenticity::Synthetic ? ++s.tp : ++s.fn;
    } else {
      vote == Authenticity::Real ? ++s.tn : ++s.fp;
    }
  }

  for (auto& [reader, s] : scores) {
    const int total = s.tp + s.tn + s.fp + s.fn;
    s.accuracy = static_cast<double>(s.tp + s.tn) / total;
    if (s.tp + s.fn > 0) {
      s.sensitivity = static_cast<double>(s.tp) / (s.tp + s.fn);
    }
    if (s.tn + s.fp > 0) {
      s.specificity = static_cast<double>(s.tn) / (s.tn + s.fp);
    }
  }
  return scores;
}

VoteOutcome majority_vote(const std::vector<TrialRecord>& trials,
                          const StimulusRecord& gold) {
  if (trials.empty()) {
    throw std::invalid_argument("majority_vote: no trials for stimulus");
  }
  int real_votes = 0, synth_votes = 0;
  for (const TrialRecord& trial : trials) {
    if (trial.stimulus_id != gold.stimulus_id) {
      throw std::invalid_argument("majority_vote: trial for a different stimulus");
    }
    vote_of(trial) == Authenticity::Real ? ++real_votes : ++synth_votes;
  }
  if (real_votes == synth_votes) return VoteOutcome::Incorrect;
  const Authenticity majority =
      real_votes > synth_votes ? Authenticity::Real : Authenticity::Synthetic;
  return majority == gold.authenticity ? VoteOutcome::Correct
                                       : VoteOutcome::Incorrect;
}

std::map<std::string, PathologyAccuracy> per_pathology_vtt(
    const std::vector<TrialRecord>& trials,
    const std::vector<StimulusRecord>& catalog) {
  const auto index = catalog_index(catalog);

  struct Tally {
    int correct = 0, total = 0;
    std::map<std::string, std::pair<int, int>> per_reader;  // correct, total
  };
  std::map<std::string, Tally> groups;

  for (const TrialRecord& trial : trials) {
    const StimulusRecord& gold = lookup(index, trial.stimulus_id);
    if (gold.authenticity != Authenticity::Synthetic) continue;
    const int correct = vote_of(trial) == Authenticity::Synthetic ? 1 : 0;

    std::vector<std::string> labels(gold.pathology_labels.begin(),
                                    gold.pathology_labels.end());
    if (labels.empty()) labels.push_back("Normal");
    for (const std::string& label : labels) {
      Tally& g = groups[label];
      g.correct += correct;
      ++g.total;
      auto& [rc, rt] = g.per_reader[trial.reader_id];
      rc += correct;
      ++rt;
    }
  }

  std::map<std::string, PathologyAccuracy> table;
  for (const auto& [label, g] : groups) {
    PathologyAccuracy row;
    row.accuracy = static_cast<double>(g.correct) / g.total;
    row.n_trials = g.total;
    for (const auto& [reader, counts] : g.per_reader) {
      row.per_reader[reader] =
          static_cast<double>(counts.first) / counts.second;
    }
    table[label] = row;
  }
  return table;
}

}  // namespace gazeval
