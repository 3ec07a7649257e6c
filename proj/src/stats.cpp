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

#include "gazeval/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace gazeval {

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 300;
  constexpr double kEpsilon = 1e-15;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;

  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;

  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;

    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEpsilon) return h;
  }
  throw std::runtime_error("incomplete beta: continued fraction did not converge");
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("incomplete beta: parameters must be positive");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("incomplete beta: x out of [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);

  // The continued fraction converges fast for x below the distribution bulk;
  // use the symmetry I_x(a,b) = 1 - I_{1-x}(b,a) on the other side.
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double df) {
  if (!(df > 0.0)) {
    throw std::invalid_argument("t test: degrees of freedom must be positive");
  }
  if (!std::isfinite(t)) {
    throw std::invalid_argument("t test: statistic is not finite");
  }
  if (t == 0.0) return 1.0;
  const double x = df / (df + t * t);
  return regularized_incomplete_beta(df / 2.0, 0.5, x);
}

TTestResult paired_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("paired t test: length mismatch");
  }
  const int n = static_cast<int>(a.size());
  if (n < 2) {
    throw std::invalid_argument("paired t test: need at least 2 pairs");
  }

  double mean_diff = 0.0;
  for (int i = 0; i < n; ++i) mean_diff += a[i] - b[i];
  mean_diff /= n;

  double ss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = (a[i] - b[i]) - mean_diff;
    ss += d * d;
  }
  const double sd = std::sqrt(ss / (n - 1));
  const double df = n - 1;

  if (sd == 0.0) {
    if (mean_diff == 0.0) return {0.0, df, 1.0, n};
    throw std::invalid_argument("paired t test: zero variance with nonzero mean");
  }

  const double t = mean_diff / (sd / std::sqrt(static_cast<double>(n)));
  return {t, df, student_t_two_sided_p(t, df), n};
}

namespace {

double quantile_sorted(const std::vector<double>& sorted, double q) {
  const double h = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

SummaryStats summary_stats(std::span<const double> values) {
  if (values.empty()) {
    throw std::invalid_argument("summary stats: empty input");
  }
  const int n = static_cast<int>(values.size());

  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;

  double sd = 0.0;
  if (n > 1) {
    double ss = 0.0;
    for (double v : values) {
      const double d = v - mean;
      ss += d * d;
    }
    sd = std::sqrt(ss / (n - 1));
  }

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  return {mean,
          sorted.front(),
          sorted.back(),
          quantile_sorted(sorted, 0.5),
          sd,
          quantile_sorted(sorted, 0.25),
          quantile_sorted(sorted, 0.75),
          n,
          n == 1};
}

}  // namespace gazeval
