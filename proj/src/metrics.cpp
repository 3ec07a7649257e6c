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

#include "gazeval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gazeval/fixation.hpp"

namespace gazeval {

namespace {

void require_same_dims(int wa, int ha, int wb, int hb, const char* what) {
  if (wa != wb || ha != hb) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
}

void require_sum_one(const AttentionMap& m, const char* what) {
  if (m.normalization() != Normalization::SumOne) {
    throw std::invalid_argument(std::string(what) + ": map must be sum-normalized");
  }
}

}  // namespace

double iou(const GazeMask& a, const GazeMask& b) {
  require_same_dims(a.width, a.height, b.width, b.height, "iou");
  std::size_t inter = 0, uni = 0;
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    const bool av = a.cells[i] != 0;
    const bool bv = b.cells[i] != 0;
    inter += av && bv;
    uni += av || bv;
  }
  if (uni == 0) return 1.0;  // two empty masks agree vacuously
  return static_cast<double>(inter) / static_cast<double>(uni);
}

double shared_attention(const GazeMask& diagnosis_mask, const GazeMask& vtt_mask) {
  return iou(diagnosis_mask, vtt_mask);
}

std::optional<double> cc(const AttentionMap& a, const AttentionMap& b) {
  require_same_dims(a.width(), a.height(), b.width(), b.height(), "cc");
  const std::size_t n = a.size();
  if (n == 0) return std::nullopt;

  double mean_a = 0.0, mean_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_a += a.cells()[i];
    mean_b += b.cells()[i];
  }
  mean_a /= static_cast<double>(n);
  mean_b /= static_cast<double>(n);

  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = a.cells()[i] - mean_a;
    const double db = b.cells()[i] - mean_b;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) return std::nullopt;  // constant map
  return sab / std::sqrt(saa * sbb);
}

double kld(const AttentionMap& p, const AttentionMap& q, const MetricParams& params) {
  require_same_dims(p.width(), p.height(), q.width(), q.height(), "kld");
  require_sum_one(p, "kld");
  require_sum_one(q, "kld");
  const double eps = params.kld_epsilon;
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p.cells()[i];
    if (pi > 0.0) {
      d += pi * std::log(pi / (q.cells()[i] + eps));
    }
  }
  return d;
}

double sim(const AttentionMap& a, const AttentionMap& b) {
  require_same_dims(a.width(), a.height(), b.width(), b.height(), "sim");
  require_sum_one(a, "sim");
  require_sum_one(b, "sim");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += std::min(a.cells()[i], b.cells()[i]);
  }
  return s;
}

const char* to_string(IocMethod m) {
  switch (m) {
    case IocMethod::Fixation: return "Fixation";
    case IocMethod::DTW: return "DTW";
    case IocMethod::Levenshtein: return "Levenshtein";
  }
  return "Fixation";
}

namespace {

void require_observers(const std::vector<Scanpath>& scanpaths) {
  if (scanpaths.size() < 2) {
    throw std::invalid_argument("ioc: fewer than 2 observers");
  }
  for (std::size_t i = 0; i < scanpaths.size(); ++i) {
    for (std::size_t j = i + 1; j < scanpaths.size(); ++j) {
      if (scanpaths[i].reader_id == scanpaths[j].reader_id) {
        throw std::invalid_argument("ioc: duplicate reader_id '" +
                                    scanpaths[i].reader_id + "'");
      }
    }
  }
}

bool inside_disc_mask(const Vec2& point, const std::vector<Scanpath>& scanpaths,
                      std::size_t skip, double radius_deg,
                      const ScreenGeometry& geom) {
  for (std::size_t j = 0; j < scanpaths.size(); ++j) {
    if (j == skip) continue;
    for (const FixationEvent& f : scanpaths[j].fixations) {
      if (visual_angle(point, f.centroid, geom) <= radius_deg) return true;
    }
  }
  return false;
}

}  // namespace

IocResult ioc_fixation(const std::vector<Scanpath>& scanpaths,
                       const MetricParams& params,
                       const SaliencyParams& saliency_params,
                       const ScreenGeometry& geometry) {
  require_observers(scanpaths);
  IocResult result;
  result.method = IocMethod::Fixation;

  for (std::size_t o = 0; o < scanpaths.size(); ++o) {
    const Scanpath& own = scanpaths[o];
    if (own.fixations.empty()) {
      ++result.skipped_observers;
      continue;
    }

    int inside = 0;
    if (params.ioc_mask_mode == IocMaskMode::Disc) {
      for (const FixationEvent& f : own.fixations) {
        if (inside_disc_mask(f.centroid, scanpaths, o,
                             params.ioc_disc_radius_deg, geometry)) {
          ++inside;
        }
      }
    } else {
      // Thresholded Gaussian variant: mask from everyone else's map.
      std::vector<FixationEvent> others;
      for (std::size_t j = 0; j < scanpaths.size(); ++j) {
        if (j == o) continue;
        others.insert(others.end(), scanpaths[j].fixations.begin(),
                      scanpaths[j].fixations.end());
      }
      const GazeMask mask =
          gaze_mask(attention_map(others, saliency_params, geometry),
                    saliency_params);
      for (const FixationEvent& f : own.fixations) {
        const int gx = std::clamp(
            static_cast<int>(f.centroid.x * mask.width / geometry.width_px), 0,
            mask.width - 1);
        const int gy = std::clamp(
            static_cast<int>(f.centroid.y * mask.height / geometry.height_px), 0,
            mask.height - 1);
        if (mask.at(gx, gy)) ++inside;
      }
    }
    result.per_observer_scores[own.reader_id] =
        static_cast<double>(inside) / static_cast<double>(own.fixations.size());
  }
  return result;
}

DtwAlignment dtw_alignment(std::span<const Vec2> a, std::span<const Vec2> b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("dtw: empty sequence");
  }
  const std::size_t n = a.size();
  const std::size_t m = b.size();

  auto local = [&](std::size_t i, std::size_t j) {
    return std::hypot(a[i].x - b[j].x, a[i].y - b[j].y);
  };

  // DP over (cost, length) pairs, lexicographic: minimal total cost first,
  // then the shorter warping path among cost ties.
  struct Cell {
    double cost = std::numeric_limits<double>::infinity();
    int len = 0;
  };
  std::vector<Cell> prev(m), cur(m);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double c = local(i, j);
      Cell best;
      if (i == 0 && j == 0) {
        best = {c, 1};
      } else {
        auto consider = [&](const Cell& from) {
          if (from.len == 0) return;  // unreachable
          const Cell cand{from.cost + c, from.len + 1};
          if (cand.cost < best.cost ||
              (cand.cost == best.cost && cand.len < best.len)) {
            best = cand;
          }
        };
        if (i > 0) consider(prev[j]);
        if (j > 0) consider(cur[j - 1]);
        if (i > 0 && j > 0) consider(prev[j - 1]);
      }
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  const Cell& final = prev[m - 1];
  return {final.cost, final.len};
}

double dtw_similarity(const Scanpath& a, const Scanpath& b,
                      const ScreenGeometry& geometry) {
  if (a.fixations.empty() || b.fixations.empty()) {
    throw std::invalid_argument("dtw_similarity: empty scanpath");
  }
  auto normalized = [&](const Scanpath& sp) {
    std::vector<Vec2> pts;
    pts.reserve(sp.fixations.size());
    for (const FixationEvent& f : sp.fixations) {
      pts.push_back({f.centroid.x / geometry.width_px,
                     f.centroid.y / geometry.height_px});
    }
    return pts;
  };
  const std::vector<Vec2> pa = normalized(a);
  const std::vector<Vec2> pb = normalized(b);
  const DtwAlignment align = dtw_alignment(pa, pb);
  const double normalized_cost =
      align.cost / (static_cast<double>(align.path_length) * std::numbers::sqrt2);
  return std::clamp(1.0 - normalized_cost, 0.0, 1.0);
}

std::vector<int> scanpath_labels(const Scanpath& scanpath,
                                 const MetricParams& params,
                                 const ScreenGeometry& geometry) {
  std::vector<int> labels;
  labels.reserve(scanpath.fixations.size());
  for (const FixationEvent& f : scanpath.fixations) {
    const int col = std::clamp(
        static_cast<int>(f.centroid.x * params.lev_grid_w / geometry.width_px), 0,
        params.lev_grid_w - 1);
    const int row = std::clamp(
        static_cast<int>(f.centroid.y * params.lev_grid_h / geometry.height_px), 0,
        params.lev_grid_h - 1);
    const int label = row * params.lev_grid_w + col;
    if (params.collapse_repeats && !labels.empty() && labels.back() == label) {
      continue;
    }
    labels.push_back(label);
  }
  return labels;
}

int levenshtein_distance(std::span<const int> a, std::span<const int> b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<int> row(m + 1);
  for (std::size_t j = 0; j <= m; ++j) row[j] = static_cast<int>(j);

  for (std::size_t i = 1; i <= n; ++i) {
    int diag = row[0];  // row[j-1] from the previous iteration
    row[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const int up = row[j];
      const int sub = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, sub});
      diag = up;
    }
  }
  return row[m];
}

double levenshtein_similarity(const Scanpath& a, const Scanpath& b,
                              const MetricParams& params,
                              const ScreenGeometry& geometry) {
  if (a.fixations.empty() || b.fixations.empty()) {
    throw std::invalid_argument("levenshtein_similarity: empty scanpath");
  }
  const std::vector<int> sa = scanpath_labels(a, params, geometry);
  const std::vector<int> sb = scanpath_labels(b, params, geometry);
  const int d = levenshtein_distance(sa, sb);
  const double longest = static_cast<double>(std::max(sa.size(), sb.size()));
  return 1.0 - static_cast<double>(d) / longest;
}

IocResult ioc_scanpath(const std::vector<Scanpath>& scanpaths, IocMethod method,
                       const MetricParams& params, const ScreenGeometry& geometry) {
  if (method == IocMethod::Fixation) {
    throw std::invalid_argument("ioc_scanpath: method must be DTW or Levenshtein");
  }
  require_observers(scanpaths);

  IocResult result;
  result.method = method;

  auto pairwise = [&](const Scanpath& x, const Scanpath& y) {
    return method == IocMethod::DTW
               ? dtw_similarity(x, y, geometry)
               : levenshtein_similarity(x, y, params, geometry);
  };

  for (std::size_t o = 0; o < scanpaths.size(); ++o) {
    if (scanpaths[o].fixations.empty()) {
      ++result.skipped_observers;
      continue;
    }
    double total = 0.0;
    int count = 0;
    for (std::size_t j = 0; j < scanpaths.size(); ++j) {
      if (j == o || scanpaths[j].fixations.empty()) continue;
      total += pairwise(scanpaths[o], scanpaths[j]);
      ++count;
    }
    if (count == 0) {
      ++result.skipped_observers;
      continue;
    }
    result.per_observer_scores[scanpaths[o].reader_id] = total / count;
  }
  return result;
}

}  // namespace gazeval
