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

#include "pcakit/standardize.hpp"

#include <string>
#include <utility>

#include "pcakit/descriptive.hpp"
#include "pcakit/errors.hpp"

namespace pcakit {

StandardizedData standardize(const Matrix& x, std::vector<std::string> names) {
  if (names.size() != x.cols()) {
    throw ShapeError("standardize: " + std::to_string(names.size()) +
                     " names for " + std::to_string(x.cols()) + " columns");
  }
  if (x.rows() < 2) {
    throw InsufficientDataError(
        "standardize needs at least 2 rows, got " + std::to_string(x.rows()));
  }

  StandardizedData out;
  out.z = Matrix(x.rows(), x.cols());
  out.center.resize(x.cols());
  out.scale.resize(x.cols());
  out.column_names = std::move(names);
  for (std::size_t j = 0; j < x.cols(); ++j) {
    const auto [mean, sd] = mean_sd(matrix_column(x, j));
    if (sd == 0.0) {
      throw DegenerateColumnError("standardize: column '" +
                                  out.column_names[j] + "' is constant");
    }
    out.center[j] = mean;
    out.scale[j] = sd;
    for (std::size_t i = 0; i < x.rows(); ++i) {
      out.z(i, j) = (x(i, j) - mean) / sd;
    }
  }
  return out;
}

Matrix destandardize(const Matrix& z_like, std::span<const double> center,
                     std::span<const double> scale) {
  if (center.size() != z_like.cols() || scale.size() != z_like.cols()) {
    throw ShapeError("destandardize: center/scale lengths " +
                     std::to_string(center.size()) + "/" +
                     std::to_string(scale.size()) + " do not match " +
                     std::to_string(z_like.cols()) + " columns");
  }
  Matrix out(z_like.rows(), z_like.cols());
  for (std::size_t i = 0; i < z_like.rows(); ++i) {
    for (std::size_t j = 0; j < z_like.cols(); ++j) {
      out(i, j) = z_like(i, j) * scale[j] + center[j];
    }
  }
  return out;
}

}  // namespace pcakit
