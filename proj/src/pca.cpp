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

#include "pcakit/pca.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pcakit/errors.hpp"

namespace pcakit {

namespace {

void require_scores_shape(const PcaModel& model, const StandardizedData& z) {
  if (z.z.cols() != model.v.rows()) {
    throw ShapeError("scores: data has " + std::to_string(z.z.cols()) +
                     " columns, model expects " +
                     std::to_string(model.v.rows()));
  }
}

}  // namespace

double ConsistencyReport::max() const {
  return std::max({r_minus_aat, lambda_minus_ata, identity_minus_ftf,
                   a_minus_ztf, z_minus_fat});
}

Matrix correlation_matrix(const StandardizedData& z) {
  const std::size_t n = z.z.rows();
  const std::size_t m = z.z.cols();
  if (n < 2) {
    throw InsufficientDataError(
        "correlation_matrix needs at least 2 rows, got " + std::to_string(n));
  }
  Matrix r(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    r(i, i) = 1.0;
    for (std::size_t j = i + 1; j < m; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        dot += z.z(k, i) * z.z(k, j);
      }
      double v = dot / (static_cast<double>(n) - 1.0);
      v = std::clamp(v, -1.0, 1.0);
      r(i, j) = v;
      r(j, i) = v;
    }
  }
  return r;
}

PcaModel fit(const StandardizedData& z) {
  PcaModel model;
  model.r = correlation_matrix(z);
  EigenDecomposition eig = eigen_symmetric(model.r);
  const std::size_t m = model.r.rows();

  if (eig.values.back() <= 1e-12 * std::max(1.0, eig.values.front())) {
    throw SingularityError(
        "fit: correlation matrix is numerically singular, smallest "
        "eigenvalue " +
        std::to_string(eig.values.back()));
  }

  model.lambda = std::move(eig.values);
  model.v = std::move(eig.vectors);
  if (determinant(model.v) < 0.0) {
    const std::size_t last = m - 1;  // column of the smallest eigenvalue
    for (std::size_t i = 0; i < m; ++i) {
      model.v(i, last) = -model.v(i, last);
    }
  }

  std::vector<double> sqrt_lambda(m);
  for (std::size_t j = 0; j < m; ++j) sqrt_lambda[j] = std::sqrt(model.lambda[j]);
  model.loadings = scale_columns(model.v, sqrt_lambda);

  double total = 0.0;
  for (double l : model.lambda) total += l;
  model.proportion.resize(m);
  model.cumulative.resize(m);
  model.kaiser.resize(m);
  double running = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    model.proportion[j] = model.lambda[j] / total;
    running += model.proportion[j];
    model.cumulative[j] = running;
    model.kaiser[j] = model.lambda[j] > 1.0;
  }
  return model;
}

ScoreSet scores(const PcaModel& model, const StandardizedData& z) {
  require_scores_shape(model, z);
  ScoreSet s;
  s.z_rot = matmul(z.z, model.v);
  std::vector<double> inv_sqrt(model.lambda.size());
  for (std::size_t j = 0; j < inv_sqrt.size(); ++j) {
    inv_sqrt[j] = 1.0 / std::sqrt(model.lambda[j]);
  }
  s.f = scale_columns(s.z_rot, inv_sqrt);
  return s;
}

ConsistencyReport consistency_check(const PcaModel& model,
                                    const StandardizedData& z,
                                    const ScoreSet& s) {
  require_scores_shape(model, z);
  const double n1 = static_cast<double>(z.z.rows()) - 1.0;
  const Matrix& a = model.loadings;
  const Matrix at = transpose(a);
  const Matrix ft = transpose(s.f);

  ConsistencyReport rep;
  rep.r_minus_aat = max_abs_diff(model.r, matmul(a, at));
  rep.lambda_minus_ata =
      max_abs_diff(Matrix::diagonal(model.lambda), matmul(at, a));

  Matrix ftf = matmul(ft, s.f);
  for (std::size_t i = 0; i < ftf.rows(); ++i) {
    for (std::size_t j = 0; j < ftf.cols(); ++j) {
      ftf(i, j) /= n1;
    }
  }
  rep.identity_minus_ftf =
      max_abs_diff(Matrix::identity(ftf.rows()), ftf);

  Matrix ztf = matmul(transpose(z.z), s.f);
  for (std::size_t i = 0; i < ztf.rows(); ++i) {
    for (std::size_t j = 0; j < ztf.cols(); ++j) {
      ztf(i, j) /= n1;
    }
  }
  rep.a_minus_ztf = max_abs_diff(a, ztf);
  rep.z_minus_fat = max_abs_diff(z.z, matmul(s.f, at));
  return rep;
}

}  // namespace pcakit
