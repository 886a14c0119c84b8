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

#ifndef PCAKIT_REPORT_HPP_
#define PCAKIT_REPORT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pcakit/adequacy.hpp"
#include "pcakit/descriptive.hpp"
#include "pcakit/matrix.hpp"
#include "pcakit/pca.hpp"

namespace pcakit {

struct DatasetSection {
  std::string input;
  std::vector<std::string> columns;
  std::vector<std::string> filters;  // rendered predicates
  std::size_t n_raw = 0;
  std::size_t n_rows = 0;
};

struct PcaSection {
  Matrix correlation;
  double determinant = 0.0;
  double trace = 0.0;
  std::vector<double> eigenvalues;
  std::vector<double> proportion;
  std::vector<double> cumulative;
  std::vector<bool> kaiser;
  Matrix rotation;
  double rotation_determinant = 0.0;
  std::vector<double> lambda_inverse;
  Matrix loadings;
  std::vector<double> zrot_variances;
  ConsistencyReport residuals;
};

struct ReductionSection {
  std::string policy;  // "kaiser" or "fixed:<k>"
  std::size_t k = 0;
  double explained = 0.0;
  std::vector<double> lambda_red;
  std::vector<double> lambda_red_inverse;
  Matrix v_red;
  Matrix a_red;
  std::vector<double> f_red_variances;
};

/// Everything one run produced. Sections a stage did not compute stay empty
/// and are omitted from the serialized report.
struct AnalysisResult {
  DatasetSection dataset;
  std::optional<std::vector<ColumnSummary>> descriptive;
  std::optional<AdequacyReport> adequacy;
  std::optional<PcaSection> pca;
  std::optional<ReductionSection> reduction;
};

/// Deterministic JSON: fixed key order, reals at 17 significant digits,
/// 2-space indentation, trailing newline. Identical inputs give identical
/// bytes.
std::string write_report(const AnalysisResult& result);

}  // namespace pcakit

#endif  // PCAKIT_REPORT_HPP_
