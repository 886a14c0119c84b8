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

#ifndef PCAKIT_STANDARDIZE_HPP_
#define PCAKIT_STANDARDIZE_HPP_

#include <span>
#include <string>
#include <vector>

#include "pcakit/matrix.hpp"

namespace pcakit {

/// Column-wise z-scores together with the affine map back to raw units.
struct StandardizedData {
  Matrix z;                    // n x m, each column mean 0 and sd 1
  std::vector<double> center;  // column means of the input
  std::vector<double> scale;   // column sds of the input (n - 1 form)
  std::vector<std::string> column_names;
};

/// Center and scale each column of x. names must have one label per column.
/// n >= 2; a constant column raises DegenerateColumnError naming it.
StandardizedData standardize(const Matrix& x,
                             std::vector<std::string> names);

/// Inverse affine map: entry (i, j) becomes z(i, j) * scale[j] + center[j].
Matrix destandardize(const Matrix& z_like, std::span<const double> center,
                     std::span<const double> scale);

}  // namespace pcakit

#endif  // PCAKIT_STANDARDIZE_HPP_
