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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gazeval/stats.hpp"

namespace {

using gazeval::paired_t_test;
using gazeval::regularized_incomplete_beta;
using gazeval::student_t_two_sided_p;
using gazeval::summary_stats;

}  // namespace

TEST_CASE("incomplete beta endpoints and symmetry") {
  CHECK(regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0);
  CHECK(regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0);
  // I_x(a, b) = 1 - I_{1-x}(b, a).
  for (double x : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const double lhs = regularized_incomplete_beta(2.5, 4.0, x);
    const double rhs = 1.0 - regularized_incomplete_beta(4.0, 2.5, 1.0 - x);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("incomplete beta closed forms") {
  // I_x(1, 1) = x and I_x(1, b) = 1 - (1-x)^b.
  for (double x : {0.2, 0.5, 0.8}) {
    CHECK(regularized_incomplete_beta(1.0, 1.0, x) ==
          doctest::Approx(x).epsilon(1e-12));
    CHECK(regularized_incomplete_beta(1.0, 3.0, x) ==
          doctest::Approx(1.0 - std::pow(1.0 - x, 3.0)).epsilon(1e-12));
  }
  CHECK(regularized_incomplete_beta(0.5, 0.5, 0.5) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("incomplete beta rejects bad domain") {
  CHECK_THROWS_AS(regularized_incomplete_beta(0.0, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(regularized_incomplete_beta(1.0, -1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(regularized_incomplete_beta(1.0, 1.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(regularized_incomplete_beta(1.0, 1.0, 1.1), std::invalid_argument);
}

TEST_CASE("two-sided p-value reference points") {
  // Fixed references, tolerance 1e-3 on each.
  CHECK(std::abs(student_t_two_sided_p(4.2426, 4.0) - 0.0132360297) < 1e-3);
  CHECK(std::abs(student_t_two_sided_p(2.262, 9.0) - 0.0500128455) < 1e-3);
  CHECK(std::abs(student_t_two_sided_p(1.96, 1000.0) - 0.0502731850) < 1e-3);
  // The implementation should be far tighter than the stated tolerance.
  CHECK(std::abs(student_t_two_sided_p(4.2426, 4.0) - 0.0132360297) < 1e-8);
  CHECK(std::abs(student_t_two_sided_p(2.262, 9.0) - 0.0500128455) < 1e-8);
  CHECK(std::abs(student_t_two_sided_p(1.96, 1000.0) - 0.0502731850) < 1e-8);
}

TEST_CASE("two-sided p-value properties") {
  CHECK(student_t_two_sided_p(0.0, 7.0) == 1.0);
  // Symmetric in the sign of t.
  CHECK(student_t_two_sided_p(-2.5, 11.0) ==
        doctest::Approx(student_t_two_sided_p(2.5, 11.0)).epsilon(1e-14));
  // Monotone decreasing in |t|.
  double prev = 1.0;
  for (double t = 0.5; t < 6.0; t += 0.5) {
    const double p = student_t_two_sided_p(t, 6.0);
    CHECK(p < prev);
    CHECK(p > 0.0);
    prev = p;
  }
  // df = 1 is the Cauchy distribution: p = 1 - (2/pi) atan(t).
  const double cauchy = 1.0 - 2.0 / 3.141592653589793 * std::atan(2.0);
  CHECK(student_t_two_sided_p(2.0, 1.0) == doctest::Approx(cauchy).epsilon(1e-10));
  CHECK_THROWS_AS(student_t_two_sided_p(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("paired t test on a fixed sample") {
  const std::vector<double> a{1.0, 2.0, 3.0, 4.0, 5.0};
  const std::vector<double> b{0.0, 0.0, 0.0, 0.0, 0.0};
  const auto r = paired_t_test(a, b);
  CHECK(r.n_pairs == 5);
  CHECK(r.degrees_of_freedom == 4.0);
  CHECK(r.t_statistic == doctest::Approx(4.242640687119285).epsilon(1e-14));
  CHECK(r.p_value == doctest::Approx(0.013235599563682695).epsilon(1e-10));
}

TEST_CASE("paired t test degenerate inputs") {
  const std::vector<double> same{2.0, 3.0, 5.0};
  const auto zero = paired_t_test(same, same);
  CHECK(zero.t_statistic == 0.0);
  CHECK(zero.p_value == 1.0);
  CHECK(zero.n_pairs == 3);

  // Constant nonzero difference has zero variance: the statistic is unbounded.
  const std::vector<double> shifted{3.0, 4.0, 6.0};
  CHECK_THROWS_AS(paired_t_test(shifted, same), std::invalid_argument);

  const std::vector<double> one{1.0};
  CHECK_THROWS_AS(paired_t_test(one, one), std::invalid_argument);
  const std::vector<double> two{1.0, 2.0};
  const std::vector<double> three{1.0, 2.0, 3.0};
  CHECK_THROWS_AS(paired_t_test(two, three), std::invalid_argument);
}

TEST_CASE("paired t test sign and shift behavior") {
  const std::vector<double> a{1.2, 0.8, 1.9, 1.4, 2.2, 0.5};
  const std::vector<double> b{0.9, 1.1, 1.2, 1.6, 1.7, 0.2};
  const auto fwd = paired_t_test(a, b);
  const auto rev = paired_t_test(b, a);
  // Swapping the samples flips t and keeps p.
  CHECK(fwd.t_statistic == doctest::Approx(-rev.t_statistic).epsilon(1e-14));
  CHECK(fwd.p_value == doctest::Approx(rev.p_value).epsilon(1e-14));

  // Adding the same constant to both samples changes nothing.
  std::vector<double> a_shift = a;
  std::vector<double> b_shift = b;
  for (auto& v : a_shift) v += 10.0;
  for (auto& v : b_shift) v += 10.0;
  const auto shifted = paired_t_test(a_shift, b_shift);
  CHECK(shifted.t_statistic == doctest::Approx(fwd.t_statistic).epsilon(1e-12));
  CHECK(shifted.p_value == doctest::Approx(fwd.p_value).epsilon(1e-12));
}

TEST_CASE("summary stats on a fixed sample") {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
  const auto s = summary_stats(v);
  CHECK(s.n == 4);
  CHECK(s.mean == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(s.min == 1.0);
  CHECK(s.max == 4.0);
  CHECK(s.median == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(s.q25 == doctest::Approx(1.75).epsilon(1e-15));
  CHECK(s.q75 == doctest::Approx(3.25).epsilon(1e-15));
  CHECK(s.std_dev == doctest::Approx(1.2909944487358056).epsilon(1e-14));
  CHECK_FALSE(s.degenerate);
}

TEST_CASE("summary stats edge cases") {
  const std::vector<double> one{7.5};
  const auto s1 = summary_stats(one);
  CHECK(s1.n == 1);
  CHECK(s1.mean == 7.5);
  CHECK(s1.median == 7.5);
  CHECK(s1.std_dev == 0.0);
  CHECK(s1.degenerate);

  // Order does not matter.
  const std::vector<double> sorted{1.0, 2.0, 3.0, 4.0, 5.0};
  const std::vector<double> shuffled{4.0, 1.0, 5.0, 3.0, 2.0};
  const auto a = summary_stats(sorted);
  const auto b = summary_stats(shuffled);
  CHECK(a.median == b.median);
  CHECK(a.q25 == b.q25);
  CHECK(a.q75 == b.q75);
  CHECK(a.std_dev == doctest::Approx(b.std_dev).epsilon(1e-15));

  const std::vector<double> empty;
  CHECK_THROWS_AS(summary_stats(empty), std::invalid_argument);
}
