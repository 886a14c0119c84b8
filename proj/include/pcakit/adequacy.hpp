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

#ifndef PCAKIT_ADEQUACY_HPP_
#define PCAKIT_ADEQUACY_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pcakit/matrix.hpp"

namespace pcakit {

/// Smallest double p-value worth distinguishing from zero; anything below
/// is flagged and displayed as "< 2.22e-16".
inline constexpr double kPUnderflowThreshold = 2.220446049250313e-16;

/// Survival function of the chi-square distribution: P(X > x) with df
/// degrees of freedom. x >= 0, df >= 1. Absolute accuracy 1e-12.
double chi_square_sf(double x, std::size_t df);

struct BartlettResult {
  double x2 = 0.0;
  std::size_t df = 0;
  double p = 1.0;
  bool p_underflow = false;
};

/// Sphericity test of a correlation matrix against the identity:
/// X2 = -(n - 1 - (2 m + 5) / 6) ln det(r), df = m (m - 1) / 2.
/// Requires a valid correlation matrix with positive determinant and n > m.
BartlettResult bartlett_sphericity(const Matrix& r, std::size_t n);

/// Negated scaled inverse: with c = r^-1, entry (i, j) is
/// -c_ij / sqrt(c_ii c_jj) off the diagonal and 1 on it. These are the
/// pairwise correlations with all other variables partialled out.
Matrix partial_correlations(const Matrix& r);

struct KmoResult {
  double kmo = 0.0;                                   // pooled measure
  std::vector<std::pair<std::string, double>> msa;    // per variable, input order
};

/// Sampling-adequacy measures: pooled KMO and per-variable MSA, each the
/// ratio of squared correlations to squared correlations plus squared
/// partial correlations, off-diagonal only. All off-diagonal correlations
/// zero makes the measure 0/0 and raises UndefinedMeasureError.
KmoResult kmo_msa(const Matrix& r, std::vector<std::string> names);

struct AdequacyReport {
  double bartlett_x2 = 0.0;
  std::size_t bartlett_df = 0;
  double bartlett_p = 1.0;
  bool bartlett_p_underflow = false;
  double kmo = 0.0;
  std::vector<std::pair<std::string, double>> msa;
};

/// Bartlett and KMO/MSA in one pass over the same correlation matrix.
AdequacyReport assess_adequacy(const Matrix& r, std::size_t n,
                               std::vector<std::string> names);

}  // namespace pcakit

#endif  // PCAKIT_ADEQUACY_HPP_
