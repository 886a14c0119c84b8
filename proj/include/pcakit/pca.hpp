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

#ifndef PCAKIT_PCA_HPP_
#define PCAKIT_PCA_HPP_

#include <vector>

#include "pcakit/eigen.hpp"
#include "pcakit/matrix.hpp"
#include "pcakit/standardize.hpp"

namespace pcakit {

/// Eigenanalysis of the sample correlation matrix.
struct PcaModel {
  Matrix r;                      // m x m sample correlation matrix
  std::vector<double> lambda;    // eigenvalues, descending
  Matrix v;                      // rotation: eigenvector columns, det +1
  Matrix loadings;               // a = v diag(sqrt(lambda))
  std::vector<double> proportion;   // lambda / sum(lambda)
  std::vector<double> cumulative;   // running sums of proportion, ends at 1
  std::vector<bool> kaiser;         // lambda > 1 per component
};

/// Component scores for one standardized sample.
struct ScoreSet {
  Matrix z_rot;  // z v, column i has variance lambda[i]
  Matrix f;      // z v diag(1 / sqrt(lambda)), unit-variance columns
};

/// Max-abs residuals of the five exact identities tying r, a, z and f
/// together. All are ~1e-12 on a healthy decomposition.
struct ConsistencyReport {
  double r_minus_aat = 0.0;        // r - a a^T
  double lambda_minus_ata = 0.0;   // diag(lambda) - a^T a
  double identity_minus_ftf = 0.0; // i - f^T f / (n - 1)
  double a_minus_ztf = 0.0;        // a - z^T f / (n - 1)
  double z_minus_fat = 0.0;        // z - f a^T
  double max() const;
};

/// Sample correlation matrix z^T z / (n - 1) of standardized data.
/// Unit diagonal, symmetric, entries clamped to [-1, 1].
Matrix correlation_matrix(const StandardizedData& z);

/// Eigenanalysis of correlation_matrix(z). The rotation matrix keeps
/// determinant +1 by negating the eigenvector of the smallest eigenvalue
/// when needed. The correlation matrix must be numerically invertible.
PcaModel fit(const StandardizedData& z);

/// Rotated and normalized scores of z under a fitted model with the same
/// number of columns.
ScoreSet scores(const PcaModel& model, const StandardizedData& z);

/// Residuals of the five identities for this model/data/score triple.
ConsistencyReport consistency_check(const PcaModel& model,
                                    const StandardizedData& z,
                                    const ScoreSet& s);

}  // namespace pcakit

#endif  // PCAKIT_PCA_HPP_
