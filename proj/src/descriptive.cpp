// Copyright 2026 The pcakit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pcakit/descriptive.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pcakit/errors.hpp"

namespace pcakit {

namespace {

constexpr double kNormalCutoff = 1.96;

void require_n(std::span<const double> xs, std::size_t least,
               const char* what) {
  if (xs.size() < least) {
    throw InsufficientDataError(std::string(what) + " needs at least " +
                                std::to_string(least) + " values, got " +
                                std::to_string(xs.size()));
  }
}

// Central moments m2, m3, m4 with 1/n normalization.
struct CentralMoments {
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
};

CentralMoments central_moments(std::span<const double> xs) {
  const double n = static_cast<double>(xs.size());
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= n;
  CentralMoments m;
  for (double x : xs) {
    const double d = x - mean;
    const double d2 = d * d;
    m.m2 += d2;
    m.m3 += d2 * d;
    m.m4 += d2 * d2;
  }
  m.m2 /= n;
  m.m3 /= n;
  m.m4 /= n;
  return m;
}

}  // namespace

std::pair<double, double> mean_sd(std::span<const double> xs) {
  require_n(xs, 2, "mean_sd");
  const double n = static_cast<double>(xs.size());
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= n;
  double ss = 0.0;
  for (double x : xs) {
    const double d = x - mean;
    ss += d * d;
  }
  return {mean, std::sqrt(ss / (n - 1.0))};
}

double standardized_skewness(std::span<const double> xs) {
  require_n(xs, 3, "standardized_skewness");
  const double n = static_cast<double>(xs.size());
  const CentralMoments m = central_moments(xs);
  if (m.m2 <= 0.0) {
    throw DegenerateColumnError(
        "standardized_skewness: zero variance column");
  }
  const double g1 = m.m3 / std::pow(m.m2, 1.5);
  const double big_g1 = g1 * std::sqrt(n * (n - 1.0)) / (n - 2.0);
  const double se =
      std::sqrt(6.0 * n * (n - 1.0) / ((n - 2.0) * (n + 1.0) * (n + 3.0)));
  return big_g1 / se;
}

double standardized_kurtosis(std::span<const double> xs) {
  require_n(xs, 4, "standardized_kurtosis");
  const double n = static_cast<double>(xs.size());
  const CentralMoments m = central_moments(xs);
  if (m.m2 <= 0.0) {
    throw DegenerateColumnError(
        "standardized_kurtosis: zero variance column");
  }
  const double g2 = m.m4 / (m.m2 * m.m2) - 3.0;
  const double big_g2 =
      ((n + 1.0) * g2 + 6.0) * (n - 1.0) / ((n - 2.0) * (n - 3.0));
  const double se_skew =
      std::sqrt(6.0 * n * (n - 1.0) / ((n - 2.0) * (n + 1.0) * (n + 3.0)));
  const double se =
      2.0 * se_skew * std::sqrt((n * n - 1.0) / ((n - 3.0) * (n + 5.0)));
  return big_g2 / se;
}

double quantile_type7(std::span<const double> xs, double p) {
  require_n(xs, 1, "quantile_type7");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ContractError("quantile_type7: p = " + std::to_string(p) +
                        " outside [0, 1]");
  }
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const std::size_t lo = static_cast<std::size_t>(h);
  const double frac = h - static_cast<double>(lo);
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

AnomalyCounts anomaly_counts(std::span<const double> xs) {
  require_n(xs, 4, "anomaly_counts");
  const auto [mean, sd] = mean_sd(xs);
  const double q1 = quantile_type7(xs, 0.25);
  const double q3 = quantile_type7(xs, 0.75);
  const double iqr = q3 - q1;
  if (iqr == 0.0 && sd == 0.0) {
    throw DegenerateColumnError("anomaly_counts: column has zero spread");
  }

  AnomalyCounts counts;
  const double inner_lo = q1 - 1.5 * iqr;
  const double inner_hi = q3 + 1.5 * iqr;
  const double outer_lo = q1 - 3.0 * iqr;
  const double outer_hi = q3 + 3.0 * iqr;
  for (double x : xs) {
    const bool past_inner = x < inner_lo || x > inner_hi;
    const bool past_outer = x < outer_lo || x > outer_hi;
    if (past_outer) {
      ++counts.extremal_values;
    } else if (past_inner) {
      ++counts.outliers;
    }
    if (std::abs(x - mean) > 3.0 * sd) ++counts.six_sigma_events;
  }
  return counts;
}

ColumnSummary summarize_column(const std::string& name,
                               std::span<const double> xs) {
  require_n(xs, 4, "summarize_column");
  ColumnSummary s;
  s.name = name;
  s.n = xs.size();
  const auto [mean, sd] = mean_sd(xs);
  s.mean = mean;
  s.sd = sd;
  s.std_skewness = standardized_skewness(xs);
  s.std_kurtosis = standardized_kurtosis(xs);
  s.approx_normal = std::abs(s.std_skewness) <= kNormalCutoff &&
                    std::abs(s.std_kurtosis) <= kNormalCutoff;
  const AnomalyCounts counts = anomaly_counts(xs);
  s.outliers = counts.outliers;
  s.extremal_values = counts.extremal_values;
  s.six_sigma_events = counts.six_sigma_events;
  s.five_number = FiveNumber{
      quantile_type7(xs, 0.0),  quantile_type7(xs, 0.25),
      quantile_type7(xs, 0.5),  quantile_type7(xs, 0.75),
      quantile_type7(xs, 1.0),
  };
  return s;
}

}  // namespace pcakit
