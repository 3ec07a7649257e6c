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

#ifndef GAZEVAL_STATS_HPP_
#define GAZEVAL_STATS_HPP_

#include <span>

namespace gazeval {

struct TTestResult {
  double t_statistic;
  double degrees_of_freedom;
  double p_value;  // two-sided
  int n_pairs;
};

struct SummaryStats {
  double mean;
  double min;
  double max;
  double median;
  double std_dev;  // sample standard deviation (n-1); 0 when n == 1
  double q25;
  double q75;
  int n;
  bool degenerate;  // n == 1, std_dev not meaningful
};

// Regularized incomplete beta function I_x(a, b), a, b > 0, x in [0, 1].
// Continued fraction evaluation; relative error bounded by 1e-10 over the
// parameter ranges produced by t distributions with df >= 1.
double regularized_incomplete_beta(double a, double b, double x);

// Two-sided p-value of a Student t statistic with the given degrees of freedom.
double student_t_two_sided_p(double t, double df);

// Paired two-sided t test over per-pair differences a[i] - b[i].
// Requires matching lengths and at least 2 pairs. All differences zero yields
// t = 0, p = 1. Zero variance with nonzero mean difference is rejected
// (the statistic is unbounded there).
TTestResult paired_t_test(std::span<const double> a, std::span<const double> b);

// Mean, extrema, quartiles (linear interpolation at h = q*(n-1)), and sample
// standard deviation. Requires at least one value.
SummaryStats summary_stats(std::span<const double> values);

}  // namespace gazeval

#endif  // GAZEVAL_STATS_HPP_
