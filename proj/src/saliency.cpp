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

#include "gazeval/saliency.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "gazeval/errors.hpp"

namespace gazeval {

double AttentionMap::max_cell() const {
  double m = 0.0;
  for (double v : cells_) m = std::max(m, v);
  return m;
}

double AttentionMap::sum_cells() const {
  double s = 0.0;
  for (double v : cells_) s += v;
  return s;
}

namespace {

// Physical size on screen of one degree of visual angle, in cm.
double deg_to_cm(double deg, const ScreenGeometry& geom) {
  return geom.viewing_distance_cm * std::tan(deg * std::numbers::pi / 180.0);
}

struct GridSigma {
  double x;
  double y;
};

// sigma_deg -> cm -> screen px -> grid cells, per axis.
GridSigma sigma_in_cells(const SaliencyParams& params, const ScreenGeometry& geom) {
  const double cm = deg_to_cm(params.sigma_deg, geom);
  const double px_x = cm / geom.pitch_x_cm();
  const double px_y = cm / geom.pitch_y_cm();
  return {px_x * params.grid_w / geom.width_px,
          px_y * params.grid_h / geom.height_px};
}

void deposit(AttentionMap& map, const Vec2& centroid_px, double weight,
             const GridSigma& sigma, const ScreenGeometry& geom) {
  const double gx = centroid_px.x * map.width() / geom.width_px;
  const double gy = centroid_px.y * map.height() / geom.height_px;

  // 4-sigma truncation; kernel evaluated at cell centers (i+0.5, j+0.5).
  const int x0 = std::max(0, static_cast<int>(std::floor(gx - 4.0 * sigma.x)));
  const int x1 = std::min(map.width() - 1,
                          static_cast<int>(std::ceil(gx + 4.0 * sigma.x)));
  const int y0 = std::max(0, static_cast<int>(std::floor(gy - 4.0 * sigma.y)));
  const int y1 = std::min(map.height() - 1,
                          static_cast<int>(std::ceil(gy + 4.0 * sigma.y)));

  for (int y = y0; y <= y1; ++y) {
    const double dy = (y + 0.5 - gy) / sigma.y;
    for (int x = x0; x <= x1; ++x) {
      const double dx = (x + 0.5 - gx) / sigma.x;
      map.at(x, y) += weight * std::exp(-0.5 * (dx * dx + dy * dy));
    }
  }
}

}  // namespace

AttentionMap attention_map(const std::vector<FixationEvent>& fixations,
                           const SaliencyParams& params,
                           const ScreenGeometry& geometry) {
  AttentionMap map(params.grid_w, params.grid_h);
  const GridSigma sigma = sigma_in_cells(params, geometry);
  for (const FixationEvent& f : fixations) {
    const double weight = params.weighting == DepositWeighting::Duration
                              ? f.duration_ms
                              : 1.0;
    deposit(map, f.centroid, weight, sigma, geometry);
  }
  return map;
}

AttentionMap normalize(AttentionMap map, Normalization mode) {
  if (mode == Normalization::Raw) return map;
  const double divisor =
      mode == Normalization::MaxOne ? map.max_cell() : map.sum_cells();
  if (divisor <= 0.0) {
    map.set_degenerate(true);
    return map;
  }
  for (double& v : map.cells()) v /= divisor;
  map.set_normalization(mode);
  return map;
}

GazeMask gaze_mask(const AttentionMap& map, const SaliencyParams& params) {
  GazeMask mask;
  mask.width = map.width();
  mask.height = map.height();
  mask.cells.assign(map.size(), 0);
  const double max = map.max_cell();
  if (max <= 0.0) return mask;
  const double cut = params.mask_threshold * max;
  const auto& cells = map.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    mask.cells[i] = cells[i] >= cut ? 1 : 0;
  }
  return mask;
}

double coverage(const GazeMask& mask) {
  if (mask.cells.empty()) return 0.0;
  std::size_t on = 0;
  for (std::uint8_t c : mask.cells) on += c;
  return static_cast<double>(on) / static_cast<double>(mask.cells.size());
}

double entropy(const AttentionMap& map) {
  if (map.normalization() != Normalization::SumOne) {
    throw std::invalid_argument("entropy: map must be sum-normalized");
  }
  double h = 0.0;
  for (double p : map.cells()) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

BiasMapResult bias_map(const std::vector<Scanpath>& scanpaths,
                       FixationSelector selector, const SaliencyParams& params,
                       const ScreenGeometry& geometry) {
  BiasMapResult result;
  std::vector<FixationEvent> selected;
  selected.reserve(scanpaths.size());
  for (const Scanpath& sp : scanpaths) {
    if (sp.fixations.empty()) {
      ++result.skipped_scanpaths;
      continue;
    }
    selected.push_back(select_fixation(sp, selector));
  }
  result.map = normalize(attention_map(selected, params, geometry),
                         Normalization::SumOne);
  return result;
}

std::string map_to_pgm(const AttentionMap& map) {
  std::ostringstream out;
  out << "P2\n" << map.width() << " " << map.height() << "\n65535\n";
  const double max = map.max_cell();
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) {
      const long v = max > 0.0
                         ? std::lround(map.at(x, y) / max * 65535.0)
                         : 0;
      out << v << (x + 1 == map.width() ? "" : " ");
    }
    out << "\n";
  }
  return out.str();
}

std::string mask_to_pgm(const GazeMask& mask) {
  std::ostringstream out;
  out << "P2\n" << mask.width << " " << mask.height << "\n1\n";
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      out << (mask.at(x, y) ? 1 : 0) << (x + 1 == mask.width ? "" : " ");
    }
    out << "\n";
  }
  return out.str();
}

AttentionMap parse_map_pgm(const std::string& text) {
  std::istringstream in(text);
  std::string magic;
  in >> magic;
  if (magic != "P2") {
    throw ParseError("pgm: expected plain-text P2 format");
  }
  long w = 0, h = 0, maxval = 0;
  in >> w >> h >> maxval;
  if (!in || w <= 0 || h <= 0 || maxval <= 0) {
    throw ParseError("pgm: bad dimensions or maxval");
  }
  AttentionMap map(static_cast<int>(w), static_cast<int>(h));
  for (long i = 0; i < w * h; ++i) {
    long v = 0;
    if (!(in >> v)) {
      throw ParseError("pgm: truncated pixel data");
    }
    if (v < 0 || v > maxval) {
      throw ParseError("pgm: pixel value out of range");
    }
    map.cells()[static_cast<std::size_t>(i)] =
        static_cast<double>(v) / static_cast<double>(maxval);
  }
  return map;
}

AttentionMap load_map_pgm(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open map file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_map_pgm(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string map_sidecar_json(const AttentionMap& map, const std::string& hash,
                             const std::string& source) {
  const char* norm = "raw";
  if (map.normalization() == Normalization::MaxOne) norm = "max_one";
  if (map.normalization() == Normalization::SumOne) norm = "sum_one";
  nlohmann::json sidecar = {{"normalization", norm},
                            {"params_hash", hash},
                            {"source", source},
                            {"degenerate", map.degenerate()}};
  return sidecar.dump(2);
}

}  // namespace gazeval
