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

#ifndef GAZEVAL_SALIENCY_HPP
#define GAZEVAL_SALIENCY_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gazeval/config.hpp"
#include "gazeval/fixation.hpp"
#include "gazeval/types.hpp"

namespace gazeval {

enum class Normalization { Raw, MaxOne, SumOne };

// Non-negative grid of visual attention. Cells are row-major.
class AttentionMap {
 public:
  AttentionMap() = default;
  AttentionMap(int width, int height)
      : width_(width), height_(height),
        cells_(static_cast<std::size_t>(width) * height, 0.0) {}

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return cells_.size(); }

  double& at(int x, int y) { return cells_[static_cast<std::size_t>(y) * width_ + x]; }
  double at(int x, int y) const {
    return cells_[static_cast<std::size_t>(y) * width_ + x];
  }

  const std::vector<double>& cells() const { return cells_; }
  std::vector<double>& cells() { return cells_; }

  Normalization normalization() const { return norm_; }
  void set_normalization(Normalization n) { norm_ = n; }

  // Set when a normalization request hit an all-zero map.
  bool degenerate() const { return degenerate_; }
  void set_degenerate(bool d) { degenerate_ = d; }

  double max_cell() const;
  double sum_cells() const;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> cells_;
  Normalization norm_ = Normalization::Raw;
  bool degenerate_ = false;
};

struct GazeMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> cells;  // row-major, 0/1

  bool at(int x, int y) const {
    return cells[static_cast<std::size_t>(y) * width + x] != 0;
  }
};

// Deposits one isotropic (in visual angle) Gaussian per fixation, centered
// at its centroid mapped into grid coordinates, sigma = sigma_deg converted
// to grid cells through the screen geometry, amplitude scaled by duration_ms
// (or 1 per fixation under count weighting). Empty input gives a zero map.
AttentionMap attention_map(const std::vector<FixationEvent>& fixations,
                           const SaliencyParams& params,
                           const ScreenGeometry& geometry);

// MaxOne divides by the max cell, SumOne by the cell sum. An all-zero map is
// returned unchanged and flagged degenerate.
AttentionMap normalize(AttentionMap map, Normalization mode);

// Cell true iff map cell >= mask_threshold * max(map). All-zero map gives an
// all-false mask.
GazeMask gaze_mask(const AttentionMap& map, const SaliencyParams& params);

// Fraction of mask cells that are true.
double coverage(const GazeMask& mask);

// Shannon entropy in bits over nonzero cells. Requires a SumOne map.
double entropy(const AttentionMap& map);

struct BiasMapResult {
  AttentionMap map;           // SumOne
  int skipped_scanpaths = 0;  // empty scanpaths skipped with a warning count
};

// Aggregates the selected fixation of every scanpath (duration-weighted)
// into one sum-normalized map.
BiasMapResult bias_map(const std::vector<Scanpath>& scanpaths,
                       FixationSelector selector,
                       const SaliencyParams& params,
                       const ScreenGeometry& geometry);

// Plain-text PGM (P2), 16-bit, cells scaled by the map maximum.
std::string map_to_pgm(const AttentionMap& map);
std::string mask_to_pgm(const GazeMask& mask);
AttentionMap parse_map_pgm(const std::string& text);
AttentionMap load_map_pgm(const std::filesystem::path& path);

// JSON sidecar describing an exported map: {normalization, params_hash, source}.
std::string map_sidecar_json(const AttentionMap& map, const std::string& hash,
                             const std::string& source);

}  // namespace gazeval

#endif  // GAZEVAL_SALIENCY_HPP
