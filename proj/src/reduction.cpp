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

#include "pcakit/reduction.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "pcakit/errors.hpp"

namespace pcakit {

namespace {

void require_descending(std::span<const double> lambda, const char* op) {
  if (lambda.empty()) {
    throw ContractError(std::string(op) + ": eigenvalue list is empty");
  }
  for (std::size_t j = 1; j < lambda.size(); ++j) {
    if (lambda[j] > lambda[j - 1]) {
      throw ContractError(std::string(op) +
                          ": eigenvalues are not sorted descending");
    }
  }
}

}  // namespace

std::size_t select_components(std::span<const double> lambda,
                              const KPolicy& policy) {
  require_descending(lambda, "select_components");
  if (policy.kind == KPolicy::Kind::fixed) {
    if (policy.k < 1 || policy.k > lambda.size()) {
      throw ContractError("select_components: fixed k = " +
                          std::to_string(policy.k) + " outside [1, " +
                          std::to_string(lambda.size()) + "]");
    }
    return policy.k;
  }
  std::size_t k = 0;
  for (double l : lambda) {
    if (l > 1.0) ++k;
  }
  return k == 0 ? 1 : k;
}

ReducedModel reduce(const PcaModel& model, const StandardizedData& z,
                    std::size_t k) {
  const std::size_t m = model.v.cols();
  if (k < 1 || k > m) {
    throw ContractError("reduce: k = " + std::to_string(k) + " outside [1, " +
                        std::to_string(m) + "]");
  }
  if (z.z.cols() != m) {
    throw ShapeError("reduce: data has " + std::to_string(z.z.cols()) +
                     " columns, model expects " + std::to_string(m));
  }

  ReducedModel red;
  red.k = k;
  red.v_red = take_columns(model.v, k);
  red.lambda_red.assign(model.lambda.begin(), model.lambda.begin() + k);

  // diag(lambda_red) must be recoverable from the correlation matrix.
  const Matrix check =
      matmul(transpose(red.v_red), matmul(model.r, red.v_red));
  const double residual =
      max_abs_diff(check, Matrix::diagonal(red.lambda_red));
  if (residual > 1e-9) {
    throw Error("reduce: v_red^T r v_red deviates from diag(lambda_red) by " +
                std::to_string(residual));
  }

  std::vector<double> sqrt_lambda(k);
  std::vector<double> inv_sqrt(k);
  for (std::size_t j = 0; j < k; ++j) {
    sqrt_lambda[j] = std::sqrt(red.lambda_red[j]);
    inv_sqrt[j] = 1.0 / sqrt_lambda[j];
  }
  red.a_red = scale_columns(red.v_red, sqrt_lambda);
  red.f_red = scale_columns(matmul(z.z, red.v_red), inv_sqrt);

  const double total =
      std::accumulate(model.lambda.begin(), model.lambda.end(), 0.0);
  const double kept =
      std::accumulate(red.lambda_red.begin(), red.lambda_red.end(), 0.0);
  red.explained = kept / total;
  return red;
}

Matrix reconstruct_z(const ReducedModel& red) {
  return matmul(red.f_red, transpose(red.a_red));
}

Matrix reconstruct_x(const ReducedModel& red, std::span<const double> center,
                     std::span<const double> scale) {
  return destandardize(reconstruct_z(red), center, scale);
}

ScreeData scree_data(std::span<const double> lambda) {
  require_descending(lambda, "scree_data");
  ScreeData out;
  out.component.resize(lambda.size());
  std::iota(out.component.begin(), out.component.end(), std::size_t{1});
  out.eigenvalue.assign(lambda.begin(), lambda.end());
  return out;
}

}  // namespace pcakit
