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

#ifndef PCAKIT_REDUCTION_HPP_
#define PCAKIT_REDUCTION_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "pcakit/matrix.hpp"
#include "pcakit/pca.hpp"
#include "pcakit/standardize.hpp"

namespace pcakit {

/// How many components to keep.
struct KPolicy {
  enum class Kind { kaiser, fixed };
  Kind kind = Kind::kaiser;
  std::size_t k = 0;  // used by fixed only

  static KPolicy kaiser_rule() { return {Kind::kaiser, 0}; }
  static KPolicy fixed(std::size_t k) { return {Kind::fixed, k}; }
};

/// Leading-component slice of a fitted model plus the reduced scores of
/// one sample.
struct ReducedModel {
  std::size_t k = 0;
  Matrix v_red;                    // m x k, first k eigenvector columns
  std::vector<double> lambda_red;  // first k eigenvalues
  Matrix a_red;                    // v_red diag(sqrt(lambda_red))
  Matrix f_red;                    // n x k normalized scores
  double explained = 0.0;          // sum(lambda_red) / sum(lambda)
};

/// Points for an eigenvalue-versus-component plot with the lambda = 1
/// reference line.
struct ScreeData {
  std::vector<std::size_t> component;  // 1-based indices
  std::vector<double> eigenvalue;
  double kaiser_line = 1.0;
};

/// Component count under the policy. Kaiser keeps every eigenvalue above 1
/// but never fewer than one component; fixed(k) requires 1 <= k <= m.
/// lambda must be non-empty and sorted descending.
std::size_t select_components(std::span<const double> lambda,
                              const KPolicy& policy);

/// First k components of the model with scores for z. Verifies that
/// v_red^T r v_red reproduces diag(lambda_red) within 1e-9.
ReducedModel reduce(const PcaModel& model, const StandardizedData& z,
                    std::size_t k);

/// Rank-k approximation of the standardized data: f_red a_red^T.
Matrix reconstruct_z(const ReducedModel& red);

/// reconstruct_z mapped back to raw units through center and scale.
Matrix reconstruct_x(const ReducedModel& red, std::span<const double> center,
                     std::span<const double> scale);

/// Plot-ready eigenvalue sequence. lambda must be non-empty, descending.
ScreeData scree_data(std::span<const double> lambda);

}  // namespace pcakit

#endif  // PCAKIT_REDUCTION_HPP_
