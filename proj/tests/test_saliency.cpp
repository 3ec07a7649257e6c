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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gazeval/config.hpp"
#include "gazeval/errors.hpp"
#include "gazeval/saliency.hpp"
#include "gazeval/simulate.hpp"
#include "gazeval/types.hpp"

namespace {

using namespace gazeval;

SaliencyParams small_grid() {
  SaliencyParams p;
  p.grid_w = 64;
  p.grid_h = 64;
  return p;
}

AttentionMap make_map(int w, int h, std::vector<double> cells) {
  AttentionMap m(w, h);
  m.cells() = std::move(cells);
  return m;
}

Scanpath one_fixation_path(std::string reader, Vec2 centroid, double duration) {
  Scanpath sp;
  sp.reader_id = std::move(reader);
  sp.stimulus_id = "stim_01";
  sp.fixations.push_back({centroid, 0.0, duration});
  return sp;
}

}  // namespace

TEST_CASE("empty fixation list gives a zero map") {
  const auto map = attention_map({}, small_grid(), ScreenGeometry{});
  CHECK(map.width() == 64);
  CHECK(map.height() == 64);
  CHECK(map.max_cell() == 0.0);
  CHECK(map.sum_cells() == 0.0);
  CHECK(map.normalization() == Normalization::Raw);
}

TEST_CASE("deposit peaks at the fixation centroid") {
  const ScreenGeometry geom;
  const auto params = small_grid();
  const std::vector<FixationEvent> fx{{{960.0, 540.0}, 0.0, 200.0}};
  const auto map = attention_map(fx, params, geom);
  CHECK(map.max_cell() > 0.0);

  // Screen center lands on grid coordinate (32, 32); the peak cell center
  // must be one of its immediate neighbors.
  const auto& cells = map.cells();
  const auto it = std::max_element(cells.begin(), cells.end());
  const int idx = static_cast<int>(it - cells.begin());
  const int px = idx % map.width();
  const int py = idx / map.width();
  CHECK(std::abs(px + 0.5 - 32.0) <= 1.0);
  CHECK(std::abs(py + 0.5 - 32.0) <= 1.0);
}

TEST_CASE("deposits are additive across fixations") {
  const ScreenGeometry geom;
  const auto params = small_grid();
  const FixationEvent f1{{500.0, 300.0}, 0.0, 150.0};
  const FixationEvent f2{{1400.0, 800.0}, 200.0, 250.0};
  const auto both = attention_map({f1, f2}, params, geom);
  const auto only1 = attention_map({f1}, params, geom);
  const auto only2 = attention_map({f2}, params, geom);
  for (std::size_t i = 0; i < both.size(); ++i) {
    CHECK(both.cells()[i] ==
          doctest::Approx(only1.cells()[i] + only2.cells()[i]).epsilon(1e-12));
  }
}

TEST_CASE("duration weighting scales the deposit") {
  const ScreenGeometry geom;
  auto params = small_grid();
  const FixationEvent short_fx{{900.0, 500.0}, 0.0, 100.0};
  const FixationEvent long_fx{{900.0, 500.0}, 0.0, 300.0};

  const auto a = attention_map({short_fx}, params, geom);
  const auto b = attention_map({long_fx}, params, geom);
  CHECK(b.max_cell() == doctest::Approx(3.0 * a.max_cell()).epsilon(1e-12));

  // Count weighting ignores duration entirely.
  params.weighting = DepositWeighting::Count;
  const auto ca = attention_map({short_fx}, params, geom);
  const auto cb = attention_map({long_fx}, params, geom);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    CHECK(ca.cells()[i] == cb.cells()[i]);
  }
}

TEST_CASE("normalize modes") {
  const auto max_one = normalize(make_map(2, 1, {2.0, 4.0}), Normalization::MaxOne);
  CHECK(max_one.cells()[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(max_one.cells()[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(max_one.normalization() == Normalization::MaxOne);

  const auto sum_one = normalize(make_map(2, 1, {2.0, 4.0}), Normalization::SumOne);
  CHECK(sum_one.cells()[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(sum_one.cells()[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(sum_one.sum_cells() == doctest::Approx(1.0).epsilon(1e-15));

  const auto raw = normalize(make_map(2, 1, {2.0, 4.0}), Normalization::Raw);
  CHECK(raw.cells()[1] == 4.0);
  CHECK(raw.normalization() == Normalization::Raw);
}

TEST_CASE("normalizing an all-zero map flags it degenerate") {
  const auto z = normalize(make_map(2, 2, {0.0, 0.0, 0.0, 0.0}),
                           Normalization::SumOne);
  CHECK(z.degenerate());
  // The failed request leaves the tag unchanged.
  CHECK(z.normalization() == Normalization::Raw);
  CHECK(z.sum_cells() == 0.0);
}

TEST_CASE("gaze mask thresholds against the map maximum") {
  SaliencyParams params;  // mask_threshold 0.1
  const auto map = make_map(3, 1, {0.05, 0.5, 1.0});
  const auto mask = gaze_mask(map, params);
  CHECK_FALSE(mask.at(0, 0));
  CHECK(mask.at(1, 0));
  CHECK(mask.at(2, 0));

  const auto zero_mask = gaze_mask(make_map(3, 1, {0.0, 0.0, 0.0}), params);
  CHECK(coverage(zero_mask) == 0.0);
}

TEST_CASE("gaze mask is scale invariant") {
  SaliencyParams params;
  auto map = make_map(4, 1, {0.02, 0.3, 0.7, 1.0});
  const auto base = gaze_mask(map, params);
  for (auto& v : map.cells()) v *= 37.5;
  const auto scaled = gaze_mask(map, params);
  CHECK(base.cells == scaled.cells);
}

TEST_CASE("coverage counts mask cells") {
  SaliencyParams params;
  const auto mask = gaze_mask(make_map(3, 1, {0.05, 0.5, 1.0}), params);
  CHECK(coverage(mask) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(coverage(GazeMask{}) == 0.0);
}

TEST_CASE("coverage never grows with a stricter threshold") {
  const ScreenGeometry geom;
  SaliencyParams params = small_grid();
  const std::vector<FixationEvent> fx{{{300.0, 300.0}, 0.0, 200.0},
                                      {{1500.0, 700.0}, 300.0, 350.0}};
  const auto map = attention_map(fx, params, geom);
  double prev = 1.1;
  for (double threshold : {0.05, 0.1, 0.25, 0.5, 0.9}) {
    params.mask_threshold = threshold;
    const double c = coverage(gaze_mask(map, params));
    CHECK(c <= prev);
    prev = c;
  }
}

TEST_CASE("entropy fixed values") {
  auto uniform = make_map(2, 2, {0.25, 0.25, 0.25, 0.25});
  uniform.set_normalization(Normalization::SumOne);
  CHECK(entropy(uniform) == doctest::Approx(2.0).epsilon(1e-12));

  auto point = make_map(2, 2, {1.0, 0.0, 0.0, 0.0});
  point.set_normalization(Normalization::SumOne);
  CHECK(entropy(point) == 0.0);

  auto mixed = make_map(2, 2, {0.5, 0.25, 0.25, 0.0});
  mixed.set_normalization(Normalization::SumOne);
  CHECK(entropy(mixed) == doctest::Approx(1.5).epsilon(1e-12));

  const auto raw = make_map(2, 2, {0.25, 0.25, 0.25, 0.25});
  CHECK_THROWS_AS(entropy(raw), std::invalid_argument);
}

TEST_CASE("entropy is bounded by the uniform map") {
  const ScreenGeometry geom;
  const auto params = small_grid();
  SplitMix64 rng(31);
  const double bound = std::log2(64.0 * 64.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<FixationEvent> fx;
    const int k = 2 + static_cast<int>(rng.uniform() * 6.0);
    for (int i = 0; i < k; ++i) {
      fx.push_back({{rng.uniform(0.0, geom.width_px),
                     rng.uniform(0.0, geom.height_px)},
                    i * 300.0, rng.uniform(100.0, 400.0)});
    }
    const auto map = normalize(attention_map(fx, params, geom),
                               Normalization::SumOne);
    const double h = entropy(map);
    CHECK(h > 0.0);
    CHECK(h < bound);
  }
}

TEST_CASE("bias map aggregates one selected fixation per scanpath") {
  const ScreenGeometry geom;
  const auto params = small_grid();

  std::vector<Scanpath> paths;
  paths.push_back(one_fixation_path("r1", {400.0, 400.0}, 200.0));
  paths.push_back(one_fixation_path("r2", {1500.0, 700.0}, 300.0));
  paths.push_back(Scanpath{});  // no fixations: skipped, not fatal

  const auto result = bias_map(paths, FixationSelector::First, params, geom);
  CHECK(result.skipped_scanpaths == 1);
  CHECK(result.map.normalization() == Normalization::SumOne);
  CHECK(result.map.sum_cells() == doctest::Approx(1.0).epsilon(1e-9));

  // Equivalent to depositing the two selected fixations directly.
  const std::vector<FixationEvent> direct{paths[0].fixations[0],
                                          paths[1].fixations[0]};
  const auto expected =
      normalize(attention_map(direct, params, geom), Normalization::SumOne);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(result.map.cells()[i] ==
          doctest::Approx(expected.cells()[i]).epsilon(1e-12));
  }
}

TEST_CASE("bias map is permutation invariant") {
  const ScreenGeometry geom;
  const auto params = small_grid();
  std::vector<Scanpath> paths;
  paths.push_back(one_fixation_path("r1", {300.0, 300.0}, 150.0));
  paths.push_back(one_fixation_path("r2", {900.0, 500.0}, 250.0));
  paths.push_back(one_fixation_path("r3", {1600.0, 900.0}, 350.0));

  std::vector<Scanpath> reversed(paths.rbegin(), paths.rend());
  const auto a = bias_map(paths, FixationSelector::First, params, geom);
  const auto b = bias_map(reversed, FixationSelector::First, params, geom);
  for (std::size_t i = 0; i < a.map.size(); ++i) {
    CHECK(a.map.cells()[i] == doctest::Approx(b.map.cells()[i]).epsilon(1e-12));
  }
}

TEST_CASE("bias map selector picks different fixations") {
  const ScreenGeometry geom;
  const auto params = small_grid();
  Scanpath sp;
  sp.reader_id = "r1";
  sp.fixations = {{{200.0, 200.0}, 0.0, 300.0}, {{1700.0, 900.0}, 400.0, 100.0}};

  const auto first = bias_map({sp}, FixationSelector::First, params, geom);
  const auto last = bias_map({sp}, FixationSelector::Last, params, geom);
  const auto longest = bias_map({sp}, FixationSelector::Longest, params, geom);

  auto argmax = [](const AttentionMap& m) {
    const auto& c = m.cells();
    return static_cast<int>(std::max_element(c.begin(), c.end()) - c.begin());
  };
  CHECK(argmax(first.map) != argmax(last.map));
  CHECK(argmax(first.map) == argmax(longest.map));

  // All scanpaths empty: the aggregate map is degenerate.
  const auto empty = bias_map({Scanpath{}}, FixationSelector::First, params, geom);
  CHECK(empty.skipped_scanpaths == 1);
  CHECK(empty.map.degenerate());
}

TEST_CASE("attention map pgm round trip") {
  const ScreenGeometry geom;
  const auto params = small_grid();
  const std::vector<FixationEvent> fx{{{700.0, 400.0}, 0.0, 220.0}};
  const auto map = attention_map(fx, params, geom);

  const auto parsed = parse_map_pgm(map_to_pgm(map));
  CHECK(parsed.width() == map.width());
  CHECK(parsed.height() == map.height());
  // PGM stores the map scaled by its maximum with 16-bit quantization.
  const double max = map.max_cell();
  for (std::size_t i = 0; i < map.size(); ++i) {
    CHECK(std::abs(parsed.cells()[i] - map.cells()[i] / max) <= 0.5 / 65535.0 + 1e-12);
  }
}

TEST_CASE("gaze mask pgm round trip") {
  SaliencyParams params;
  const auto mask = gaze_mask(make_map(3, 2, {0.05, 0.5, 1.0, 0.0, 0.2, 0.9}),
                              params);
  const auto parsed = parse_map_pgm(mask_to_pgm(mask));
  REQUIRE(parsed.size() == mask.cells.size());
  for (std::size_t i = 0; i < mask.cells.size(); ++i) {
    CHECK(parsed.cells()[i] == (mask.cells[i] ? 1.0 : 0.0));
  }
}

TEST_CASE("pgm parser rejects malformed input") {
  CHECK_THROWS_AS(parse_map_pgm("P5\n2 2\n255\n"), ParseError);
  CHECK_THROWS_AS(parse_map_pgm("P2\n2 2\n65535\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_map_pgm("P2\n0 2\n65535\n"), ParseError);
  CHECK_THROWS_AS(parse_map_pgm("P2\n2 1\n100\n50 200\n"), ParseError);
  CHECK_THROWS_AS(load_map_pgm("/nonexistent/map.pgm"), IoError);
}

TEST_CASE("map sidecar json carries normalization and hash") {
  auto map = make_map(2, 1, {0.5, 0.5});
  map.set_normalization(Normalization::SumOne);
  const auto sidecar = nlohmann::json::parse(
      map_sidecar_json(map, "0123456789abcdef", "fixations.jsonl"));
  CHECK(sidecar.at("normalization") == "sum_one");
  CHECK(sidecar.at("params_hash") == "0123456789abcdef");
  CHECK(sidecar.at("source") == "fixations.jsonl");
  CHECK(sidecar.at("degenerate") == false);
}
