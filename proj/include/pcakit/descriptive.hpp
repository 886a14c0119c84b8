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

#ifndef PCAKIT_DESCRIPTIVE_HPP_
#define PCAKIT_DESCRIPTIVE_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>

namespace pcakit {

struct FiveNumber {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

struct AnomalyCounts {
  std::size_t outliers = 0;        // strictly outside 1.5 IQR, inside 3 IQR
  std::size_t extremal_values = 0;  // strictly outside 3 IQR
  std::size_t six_sigma_events = 0;  // |value - mean| > 3 sd
};

/// Per-column screening summary.
struct ColumnSummary {
  std::string name;
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;
  double std_skewness = 0.0;   // bias-adjusted skewness over its standard error
  double std_kurtosis = 0.0;   // bias-adjusted excess kurtosis over its standard error
  bool approx_normal = false;  // both standardized moments within +-1.96
  std::size_t outliers = 0;
  std::size_t extremal_values = 0;
  std::size_t six_sigma_events = 0;
  FiveNumber five_number;
};

/// Sample mean and sample standard deviation (n - 1 denominator). n >= 2.
std::pair<double, double> mean_sd(std::span<const double> xs);

/// Bias-adjusted sample skewness divided by its standard error. n >= 3 and
/// positive variance required.
double standardized_skewness(std::span<const double> xs);

/// Bias-adjusted sample excess kurtosis divided by its standard error.
/// n >= 4 and positive variance required.
double standardized_kurtosis(std::span<const double> xs);

/// Linear-interpolation quantile: h = (n - 1) p on the sorted sample.
/// p in [0, 1], n >= 1.
double quantile_type7(std::span<const double> xs, double p);

/// Tukey-fence and three-sigma screening. Outlier and extremal bands are
/// disjoint by construction; fences use strict inequalities. n >= 4; a column
/// with zero spread raises DegenerateColumnError.
AnomalyCounts anomaly_counts(std::span<const double> xs);

/// All of the above for one named column. n >= 4.
ColumnSummary summarize_column(const std::string& name,
                               std::span<const double> xs);

}  // namespace pcakit

#endif  // PCAKIT_DESCRIPTIVE_HPP_
