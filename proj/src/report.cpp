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

#include "gazeval/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <json.hpp>

#include "gazeval/errors.hpp"
#include "gazeval/fixation.hpp"
#include "gazeval/ingest.hpp"
#include "gazeval/metrics.hpp"
#include "gazeval/saliency.hpp"
#include "gazeval/stats.hpp"
#include "gazeval/study.hpp"

namespace gazeval {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string fmt(std::optional<double> v) { return v ? fmt(*v) : std::string(); }

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path.string());
  out << content;
  if (!out) throw IoError("write failed: " + path.string());
}

struct TrialAnalysis {
  TrialRecord trial;
  Authenticity authenticity = Authenticity::Real;
  Scanpath scanpath;
  double entropy_bits = 0.0;
  double coverage_frac = 0.0;
  GazeMask mask;
};

std::string trial_name(const TrialRecord& t) {
  return t.reader_id + "/" + t.stimulus_id + "/" + to_string(t.task);
}

// Per-trial pipeline stage: gaze stream -> fixations -> map/mask quantities.
TrialAnalysis analyze_trial(const TrialRecord& trial, Authenticity authenticity,
                            const std::filesystem::path& gaze_dir,
                            const Config& config) {
  TrialAnalysis a;
  a.trial = trial;
  a.authenticity = authenticity;

  std::filesystem::path gaze_path(trial.gaze_file);
  if (gaze_path.is_relative()) gaze_path = gaze_dir / gaze_path;
  const SampleStream stream = parse_gaze_stream_file(gaze_path, config.screen);

  a.scanpath = Scanpath{trial.stimulus_id, trial.reader_id, trial.task,
                        detect_fixations(stream, config.fixation, config.screen)};

  const AttentionMap raw =
      attention_map(a.scanpath.fixations, config.saliency, config.screen);
  const AttentionMap dist = normalize(raw, Normalization::SumOne);
  a.entropy_bits = dist.degenerate() ? 0.0 : entropy(dist);
  a.mask = gaze_mask(raw, config.saliency);
  a.coverage_frac = coverage(a.mask);
  return a;
}

struct MeanStd {
  double mean = 0.0;
  double std_dev = 0.0;
  int n = 0;
};

std::optional<MeanStd> mean_std(const std::vector<double>& values) {
  if (values.empty()) return std::nullopt;
  const SummaryStats s = summary_stats(values);
  return MeanStd{s.mean, s.std_dev, s.n};
}

json mean_std_json(const std::optional<MeanStd>& m) {
  if (!m) return nullptr;
  return json{{"mean", m->mean}, {"std", m->std_dev}, {"n", m->n}};
}

constexpr Task kTasks[] = {Task::Diagnosis, Task::VTT};
constexpr Authenticity kTypes[] = {Authenticity::Real, Authenticity::Synthetic};
constexpr FixationSelector kSelectors[] = {
    FixationSelector::First, FixationSelector::Last, FixationSelector::Longest,
    FixationSelector::Shortest};
constexpr IocMethod kIocMethods[] = {IocMethod::Fixation, IocMethod::DTW,
                                     IocMethod::Levenshtein};

}  // namespace

ReportResult run_report(const ReportOptions& options, const Config& config) {
  validate(config);
  const std::string hash = params_hash(config);

  const std::vector<StimulusRecord> catalog =
      load_stimulus_catalog(options.catalog_file);
  std::map<std::string, const StimulusRecord*> stimulus_index;
  for (const StimulusRecord& s : catalog) stimulus_index[s.stimulus_id] = &s;

  // Session manifests, in sorted filename order for determinism.
  std::vector<std::filesystem::path> manifest_paths;
  {
    std::error_code ec;
    std::filesystem::directory_iterator it(options.sessions_dir, ec);
    if (ec) {
      throw IoError("cannot read sessions directory: " +
                    options.sessions_dir.string());
    }
    for (const auto& entry : it) {
      if (entry.path().extension() == ".json") {
        manifest_paths.push_back(entry.path());
      }
    }
  }
  std::sort(manifest_paths.begin(), manifest_paths.end());

  std::vector<ReaderProfile> readers;
  std::vector<TrialRecord> trials;
  for (const auto& path : manifest_paths) {
    SessionManifest manifest = load_session_manifest(path);
    for (const ReaderProfile& seen : readers) {
      if (seen.reader_id == manifest.reader.reader_id) {
        throw ParseError("duplicate reader '" + manifest.reader.reader_id +
                         "' across session manifests");
      }
    }
    readers.push_back(manifest.reader);
    trials.insert(trials.end(), manifest.trials.begin(), manifest.trials.end());
  }
  if (trials.empty()) throw ParseError("no trials");

  for (const TrialRecord& trial : trials) {
    if (!stimulus_index.count(trial.stimulus_id)) {
      throw ParseError("trial " + trial_name(trial) +
                       ": stimulus not in catalog");
    }
  }
  std::sort(trials.begin(), trials.end(),
            [](const TrialRecord& a, const TrialRecord& b) {
              return std::tie(a.reader_id, a.stimulus_id, a.task) <
                     std::tie(b.reader_id, b.stimulus_id, b.task);
            });

  // Per-trial analysis, parallel over trial indices; the merge is
  // index-ordered so the worker count never changes results.
  std::vector<std::optional<TrialAnalysis>> slots(trials.size());
  std::vector<std::string> failures(trials.size());
  {
    std::atomic<std::size_t> cursor{0};
    const int jobs = std::max(1, options.jobs);
    auto worker = [&] {
      for (std::size_t i = cursor.fetch_add(1); i < trials.size();
           i = cursor.fetch_add(1)) {
        try {
          slots[i] = analyze_trial(
              trials[i], stimulus_index.at(trials[i].stimulus_id)->authenticity,
              options.gaze_dir, config);
        } catch (const std::exception& e) {
          failures[i] = e.what();
        }
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (std::thread& t : pool) t.join();
    }
  }

  ReportResult result;
  std::vector<TrialAnalysis> analyses;
  for (std::size_t i = 0; i < trials.size(); ++i) {
    if (!failures[i].empty()) {
      if (!options.skip_bad_trials) {
        throw ParseError("trial " + trial_name(trials[i]) + ": " + failures[i]);
      }
      std::cerr << "warning: skipping trial " << trial_name(trials[i]) << ": "
                << failures[i] << "\n";
      ++result.skipped_trials;
      continue;
    }
    analyses.push_back(std::move(*slots[i]));
  }
  if (analyses.empty()) throw ParseError("no trials");
  result.n_trials = static_cast<int>(analyses.size());

  std::vector<TrialRecord> diagnosis_trials, vtt_trials;
  for (const TrialAnalysis& a : analyses) {
    (a.trial.task == Task::Diagnosis ? diagnosis_trials : vtt_trials)
        .push_back(a.trial);
  }
  const auto agreement = diagnosis_trials.empty()
                             ? std::map<std::string, AgreementRates>{}
                             : agreement_rates(diagnosis_trials, catalog);
  const auto vtt = vtt_trials.empty() ? std::map<std::string, VttScore>{}
                                      : vtt_score(vtt_trials, catalog);

  // table1: per (task, type), time duration and coverage pooled over trials;
  // task scores are mean/std across readers within the type.
  std::string table1 =
      "task,type,n_trials,time_duration_mean,time_duration_std,"
      "vtt_accuracy_mean,vtt_accuracy_std,diagnostic_agreement_mean,"
      "diagnostic_agreement_std,gaze_coverage_mean,gaze_coverage_std,"
      "params_hash\n";
  json table1_json = json::array();
  for (Task task : kTasks) {
    for (Authenticity type : kTypes) {
      std::vector<double> durations, coverages;
      std::map<std::string, std::pair<int, int>> per_reader;  // hits, total
      for (const TrialAnalysis& a : analyses) {
        if (a.trial.task != task || a.authenticity != type) continue;
        durations.push_back(a.trial.duration_s);
        coverages.push_back(a.coverage_frac);
        auto& [hits, total] = per_reader[a.trial.reader_id];
        if (task == Task::VTT) {
          const bool truth_synth = type == Authenticity::Synthetic;
          const bool vote_synth =
              *a.trial.authenticity_vote == Authenticity::Synthetic;
          hits += truth_synth == vote_synth;
        } else {
          hits += diagnostic_agreement(a.trial,
                                       *stimulus_index.at(a.trial.stimulus_id));
        }
        ++total;
      }
      std::vector<double> reader_rates;
      for (const auto& [reader, counts] : per_reader) {
        reader_rates.push_back(static_cast<double>(counts.first) /
                               counts.second);
      }
      const auto duration = mean_std(durations);
      const auto cover = mean_std(coverages);
      const auto rate = mean_std(reader_rates);
      const bool is_vtt = task == Task::VTT;

      table1 += std::string(to_string(task)) + "," + to_string(type) + "," +
                std::to_string(durations.size()) + "," +
                fmt(duration ? std::optional(duration->mean) : std::nullopt) +
                "," +
                fmt(duration ? std::optional(duration->std_dev) : std::nullopt) +
                "," +
                (is_vtt ? fmt(rate ? std::optional(rate->mean) : std::nullopt)
                        : std::string()) +
                "," +
                (is_vtt ? fmt(rate ? std::optional(rate->std_dev) : std::nullopt)
                        : std::string()) +
                "," +
                (is_vtt ? std::string()
                        : fmt(rate ? std::optional(rate->mean) : std::nullopt)) +
                "," +
                (is_vtt
                     ? std::string()
                     : fmt(rate ? std::optional(rate->std_dev) : std::nullopt)) +
                "," + fmt(cover ? std::optional(cover->mean) : std::nullopt) +
                "," +
                fmt(cover ? std::optional(cover->std_dev) : std::nullopt) + "," +
                hash + "\n";

      table1_json.push_back(
          {{"task", to_string(task)},
           {"type", to_string(type)},
           {"n_trials", durations.size()},
           {"time_duration", mean_std_json(duration)},
           {is_vtt ? "vtt_accuracy" : "diagnostic_agreement",
            mean_std_json(rate)},
           {"gaze_coverage", mean_std_json(cover)}});
    }
  }

  // table2: real-cohort vs synthetic-cohort bias maps per task and selector.
  std::string table2 = "task,selector,cc,kld,sim,params_hash\n";
  json table2_json = json::array();
  for (Task task : kTasks) {
    std::vector<Scanpath> real_paths, synth_paths;
    for (const TrialAnalysis& a : analyses) {
      if (a.trial.task != task) continue;
      (a.authenticity == Authenticity::Real ? real_paths : synth_paths)
          .push_back(a.scanpath);
    }
    for (FixationSelector selector : kSelectors) {
      std::optional<double> cc_value, kld_value, sim_value;
      if (!real_paths.empty() && !synth_paths.empty()) {
        const BiasMapResult real =
            bias_map(real_paths, selector, config.saliency, config.screen);
        const BiasMapResult synth =
            bias_map(synth_paths, selector, config.saliency, config.screen);
        if (!real.map.degenerate() && !synth.map.degenerate()) {
          cc_value = cc(real.map, synth.map);
          kld_value = kld(real.map, synth.map, config.metrics);
          sim_value = sim(real.map, synth.map);
        }
      }
      table2 += std::string(to_string(task)) + "," + to_string(selector) + "," +
                fmt(cc_value) + "," + fmt(kld_value) + "," + fmt(sim_value) +
                "," + hash + "\n";
      table2_json.push_back({{"task", to_string(task)},
                             {"selector", to_string(selector)},
                             {"cc", cc_value ? json(*cc_value) : json()},
                             {"kld", kld_value ? json(*kld_value) : json()},
                             {"sim", sim_value ? json(*sim_value) : json()}});
    }
  }

  // table3: summary stats of per-observer IOC scores pooled over stimuli.
  std::map<std::string, std::vector<const Scanpath*>> by_stimulus_task
      [2];  // [task index][stimulus] -> scanpaths
  for (const TrialAnalysis& a : analyses) {
    by_stimulus_task[a.trial.task == Task::VTT ? 1 : 0][a.trial.stimulus_id]
        .push_back(&a.scanpath);
  }
  int ioc_skipped_stimuli = 0;
  std::string table3 =
      "task,method,type,n_scores,mean,min,max,median,std_dev,q25,q75,"
      "params_hash\n";
  json table3_json = json::array();
  for (int task_idx = 0; task_idx < 2; ++task_idx) {
    const Task task = kTasks[task_idx];
    // scores[method][type]
    std::map<IocMethod, std::map<Authenticity, std::vector<double>>> pooled;
    for (const auto& [stimulus_id, paths] : by_stimulus_task[task_idx]) {
      if (paths.size() < 2) {
        ++ioc_skipped_stimuli;
        continue;
      }
      std::vector<Scanpath> group;
      group.reserve(paths.size());
      for (const Scanpath* p : paths) group.push_back(*p);
      const Authenticity type = stimulus_index.at(stimulus_id)->authenticity;
      for (IocMethod method : kIocMethods) {
        const IocResult scores =
            method == IocMethod::Fixation
                ? ioc_fixation(group, config.metrics, config.saliency,
                               config.screen)
                : ioc_scanpath(group, method, config.metrics, config.screen);
        for (const auto& [reader, score] : scores.per_observer_scores) {
          pooled[method][type].push_back(score);
        }
      }
    }
    for (IocMethod method : kIocMethods) {
      for (Authenticity type : kTypes) {
        const std::vector<double>& values = pooled[method][type];
        table3 += std::string(to_string(task)) + "," + to_string(method) + "," +
                  to_string(type) + "," + std::to_string(values.size());
        json row = {{"task", to_string(task)},
                    {"method", to_string(method)},
                    {"type", to_string(type)},
                    {"n_scores", values.size()}};
        if (values.empty()) {
          table3 += ",,,,,,,";
        } else {
          const SummaryStats s = summary_stats(values);
          table3 += "," + fmt(s.mean) + "," + fmt(s.min) + "," + fmt(s.max) +
                    "," + fmt(s.median) + "," + fmt(s.std_dev) + "," +
                    fmt(s.q25) + "," + fmt(s.q75);
          row["mean"] = s.mean;
          row["min"] = s.min;
          row["max"] = s.max;
          row["median"] = s.median;
          row["std_dev"] = s.std_dev;
          row["q25"] = s.q25;
          row["q75"] = s.q75;
        }
        table3 += "," + hash + "\n";
        table3_json.push_back(row);
      }
    }
  }

  // table4: per-pathology accuracy on synthetic stimuli.
  const auto pathology =
      vtt_trials.empty() ? std::map<std::string, PathologyAccuracy>{}
                         : per_pathology_vtt(vtt_trials, catalog);
  std::string table4 = "pathology,n_trials,accuracy,params_hash\n";
  json table4_json = json::array();
  for (const auto& [label, acc] : pathology) {
    table4 += label + "," + std::to_string(acc.n_trials) + "," +
              fmt(acc.accuracy) + "," + hash + "\n";
    table4_json.push_back({{"pathology", label},
                           {"n_trials", acc.n_trials},
                           {"accuracy", acc.accuracy}});
  }

  // Paired t-tests: per-reader Real mean vs Synthetic mean of each measure.
  std::string ttests =
      "measure,task,t_statistic,degrees_of_freedom,p_value,n_pairs,"
      "params_hash\n";
  json ttests_json = json::array();
  auto add_ttest = [&](const std::string& measure, Task task,
                       const std::map<std::string, std::pair<std::optional<double>,
                                                             std::optional<double>>>&
                           per_reader) {
    std::vector<double> real_values, synth_values;
    for (const auto& [reader, pair] : per_reader) {
      if (pair.first && pair.second) {
        real_values.push_back(*pair.first);
        synth_values.push_back(*pair.second);
      }
    }
    std::string row = measure + "," + to_string(task) + ",";
    json jrow = {{"measure", measure}, {"task", to_string(task)}};
    if (real_values.size() >= 2) {
      try {
        const TTestResult t = paired_t_test(real_values, synth_values);
        row += fmt(t.t_statistic) + "," + fmt(t.degrees_of_freedom) + "," +
               fmt(t.p_value) + "," + std::to_string(t.n_pairs);
        jrow["t_statistic"] = t.t_statistic;
        jrow["degrees_of_freedom"] = t.degrees_of_freedom;
        jrow["p_value"] = t.p_value;
        jrow["n_pairs"] = t.n_pairs;
      } catch (const std::invalid_argument&) {
        row += ",,," + std::to_string(real_values.size());
        jrow["n_pairs"] = real_values.size();
        jrow["degenerate"] = true;
      }
    } else {
      row += ",,," + std::to_string(real_values.size());
      jrow["n_pairs"] = real_values.size();
    }
    ttests += row + "," + hash + "\n";
    ttests_json.push_back(jrow);
  };

  using ReaderPair =
      std::map<std::string, std::pair<std::optional<double>, std::optional<double>>>;
  for (Task task : kTasks) {
    ReaderPair duration_pairs, coverage_pairs, entropy_pairs;
    std::map<std::string, std::map<Authenticity, std::vector<double>>> buckets
        [3];  // duration, coverage, entropy
    for (const TrialAnalysis& a : analyses) {
      if (a.trial.task != task) continue;
      buckets[0][a.trial.reader_id][a.authenticity].push_back(a.trial.duration_s);
      buckets[1][a.trial.reader_id][a.authenticity].push_back(a.coverage_frac);
      buckets[2][a.trial.reader_id][a.authenticity].push_back(a.entropy_bits);
    }
    ReaderPair* pairs[3] = {&duration_pairs, &coverage_pairs, &entropy_pairs};
    for (int b = 0; b < 3; ++b) {
      for (const auto& [reader, by_type] : buckets[b]) {
        std::optional<double> real_mean, synth_mean;
        if (const auto it = by_type.find(Authenticity::Real);
            it != by_type.end()) {
          real_mean = mean_std(it->second)->mean;
        }
        if (const auto it = by_type.find(Authenticity::Synthetic);
            it != by_type.end()) {
          synth_mean = mean_std(it->second)->mean;
        }
        (*pairs[b])[reader] = {real_mean, synth_mean};
      }
    }
    add_ttest("time_duration", task, duration_pairs);
    add_ttest("gaze_coverage", task, coverage_pairs);
    add_ttest("attention_entropy", task, entropy_pairs);
  }
  {
    ReaderPair agreement_pairs;
    for (const auto& [reader, rates] : agreement) {
      agreement_pairs[reader] = {rates.real, rates.synthetic};
    }
    add_ttest("diagnostic_agreement", Task::Diagnosis, agreement_pairs);
  }
  {
    ReaderPair accuracy_pairs;
    for (const auto& [reader, score] : vtt) {
      accuracy_pairs[reader] = {score.specificity, score.sensitivity};
    }
    add_ttest("vtt_accuracy", Task::VTT, accuracy_pairs);
  }

  // Shared attention: IoU of one reader's Diagnosis and VTT masks per image.
  std::map<std::pair<std::string, std::string>, const TrialAnalysis*> mask_index
      [2];
  for (const TrialAnalysis& a : analyses) {
    mask_index[a.trial.task == Task::VTT ? 1 : 0]
              [{a.trial.reader_id, a.trial.stimulus_id}] = &a;
  }
  json shared_values = json::array();
  std::vector<double> shared_scores;
  for (const auto& [key, diag] : mask_index[0]) {
    const auto it = mask_index[1].find(key);
    if (it == mask_index[1].end()) continue;
    const double value = shared_attention(diag->mask, it->second->mask);
    shared_scores.push_back(value);
    shared_values.push_back({{"reader_id", key.first},
                             {"stimulus_id", key.second},
                             {"iou", value}});
  }

  // Majority voting per stimulus over the real-vs-synthetic votes.
  json voting_json;
  {
    std::map<std::string, std::vector<TrialRecord>> votes_by_stimulus;
    for (const TrialRecord& t : vtt_trials) {
      votes_by_stimulus[t.stimulus_id].push_back(t);
    }
    int correct = 0;
    json per_stimulus = json::array();
    for (const auto& [stimulus_id, votes] : votes_by_stimulus) {
      const VoteOutcome outcome =
          majority_vote(votes, *stimulus_index.at(stimulus_id));
      correct += outcome == VoteOutcome::Correct;
      per_stimulus.push_back(
          {{"stimulus_id", stimulus_id},
           {"outcome",
            outcome == VoteOutcome::Correct ? "correct" : "incorrect"}});
    }
    voting_json = {{"n_stimuli", votes_by_stimulus.size()},
                   {"accuracy", votes_by_stimulus.empty()
                                    ? json()
                                    : json(static_cast<double>(correct) /
                                           votes_by_stimulus.size())},
                   {"per_stimulus", per_stimulus}};
  }

  json vtt_json = json::array();
  for (const auto& [reader, s] : vtt) {
    vtt_json.push_back(
        {{"reader_id", reader},
         {"tp", s.tp},
         {"tn", s.tn},
         {"fp", s.fp},
         {"fn", s.fn},
         {"accuracy", s.accuracy},
         {"sensitivity", s.sensitivity ? json(*s.sensitivity) : json()},
         {"specificity", s.specificity ? json(*s.specificity) : json()}});
  }
  json agreement_json = json::array();
  for (const auto& [reader, r] : agreement) {
    agreement_json.push_back({{"reader_id", reader},
                              {"real", r.real ? json(*r.real) : json()},
                              {"synthetic",
                               r.synthetic ? json(*r.synthetic) : json()},
                              {"all", r.all},
                              {"n_real", r.n_real},
                              {"n_synthetic", r.n_synthetic}});
  }
  json pathology_readers = json::object();
  for (const auto& [label, acc] : pathology) {
    json readers_json = json::object();
    for (const auto& [reader, value] : acc.per_reader) {
      readers_json[reader] = value;
    }
    pathology_readers[label] = readers_json;
  }

  std::size_t total_fixations = 0;
  for (const TrialAnalysis& a : analyses) {
    total_fixations += a.scanpath.fixations.size();
  }

  json report = {
      {"params_hash", hash},
      {"config", json::parse(config_to_json(config))},
      {"metadata",
       {{"entropy_log_base", 2},
        {"kld_log_base", "natural"},
        {"kld_epsilon", config.metrics.kld_epsilon},
        {"skipped_trials", result.skipped_trials},
        {"ioc_skipped_stimuli", ioc_skipped_stimuli}}},
      {"counts",
       {{"readers", readers.size()},
        {"stimuli", catalog.size()},
        {"trials", analyses.size()},
        {"fixations", total_fixations}}},
      {"table1", table1_json},
      {"table2", table2_json},
      {"table3", table3_json},
      {"table4", table4_json},
      {"ttests", ttests_json},
      {"shared_attention",
       {{"values", shared_values},
        {"summary",
         shared_scores.empty()
             ? json()
             : json{{"mean", summary_stats(shared_scores).mean},
                    {"std", summary_stats(shared_scores).std_dev},
                    {"n", shared_scores.size()}}}}},
      {"voting", voting_json},
      {"vtt_scores", vtt_json},
      {"agreement_rates", agreement_json},
      {"per_pathology_per_reader", pathology_readers}};

  std::error_code ec;
  std::filesystem::create_directories(options.out_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory: " +
                  options.out_dir.string());
  }
  const struct {
    const char* name;
    const std::string* content;
  } outputs[] = {{"table1.csv", &table1}, {"table2.csv", &table2},
                 {"table3.csv", &table3}, {"table4.csv", &table4},
                 {"ttests.csv", &ttests}};
  for (const auto& out : outputs) {
    const auto path = options.out_dir / out.name;
    write_file(path, *out.content);
    result.files.push_back(path);
  }
  const auto report_path = options.out_dir / "report.json";
  write_file(report_path, report.dump(2) + "\n");
  result.files.push_back(report_path);
  return result;
}

}  // namespace gazeval
