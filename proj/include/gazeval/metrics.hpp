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

#ifndef GAZEVAL_METRICS_HPP
#define GAZEVAL_METRICS_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gazeval/config.hpp"
#include "gazeval/saliency.hpp"
#include "gazeval/types.hpp"

namespace gazeval {

// Intersection over union of two equal-sized masks. Two empty masks agree
// vacuously: 1.0.
double iou(const GazeMask& a, const GazeMask& b);

// IoU of one reader's masks from the two tasks on the same image.
double shared_attention(const GazeMask& diagnosis_mask, const GazeMask& vtt_mask);

// Pearson correlation over flattened cells; nullopt when either map is
// constant (correlation undefined).
std::optional<double> cc(const AttentionMap& a, const AttentionMap& b);

// KL divergence sum p*ln(p/(q+eps)) over cells with p > 0. Natural log;
// epsilon added to q only. Both maps must be SumOne.
double kld(const AttentionMap& p, const AttentionMap& q, const MetricParams& params);

// Histogram intersection sum min(a_i, b_i) of two SumOne maps.
double sim(const AttentionMap& a, const AttentionMap& b);

enum class IocMethod { Fixation, DTW, Levenshtein };

const char* to_string(IocMethod m);

struct IocResult {
  std::map<std::string, double> per_observer_scores;  // reader_id -> [0,1]
  IocMethod method = IocMethod::Fixation;
  int skipped_observers = 0;  // observers with zero fixations
};

// Leave-one-out fixation congruency: each observer's fixation centroids are
// scored against a mask built from everyone else's fixations (union of discs
// of ioc_disc_radius_deg by default; thresholded Gaussian map when
// configured). Requires at least two scanpaths.
IocResult ioc_fixation(const std::vector<Scanpath>& scanpaths,
                       const MetricParams& params,
                       const SaliencyParams& saliency_params,
                       const ScreenGeometry& geometry);

// Dynamic time warping over fixation centroids in [0,1]^2 coordinates.
//
// The alignment minimizes total Euclidean cost (ties broken toward the
// shorter warping path); similarity is 1 - cost / (path_length * sqrt(2)),
// clamped to [0,1].
double dtw_similarity(const Scanpath& a, const Scanpath& b,
                      const ScreenGeometry& geometry);

struct DtwAlignment {
  double cost = 0.0;
  int path_length = 0;
};

// Exposed for direct alignment checks; points must already be normalized.
DtwAlignment dtw_alignment(std::span<const Vec2> a, std::span<const Vec2> b);

// Fixation centroids quantized to lev_grid cell labels, consecutive repeats
// merged when collapse_repeats is set.
std::vector<int> scanpath_labels(const Scanpath& scanpath,
                                 const MetricParams& params,
                                 const ScreenGeometry& geometry);

// Unit-cost insert/delete/substitute edit distance.
int levenshtein_distance(std::span<const int> a, std::span<const int> b);

// 1 - distance / max(|a|, |b|) over quantized label strings.
double levenshtein_similarity(const Scanpath& a, const Scanpath& b,
                              const MetricParams& params,
                              const ScreenGeometry& geometry);

// Mean pairwise scanpath similarity of each observer against all others.
IocResult ioc_scanpath(const std::vector<Scanpath>& scanpaths, IocMethod method,
                       const MetricParams& params, const ScreenGeometry& geometry);

}  // namespace gazeval

#endif  // GAZEVAL_METRICS_HPP
