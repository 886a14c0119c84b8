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

#ifndef PCAKIT_EIGEN_HPP_
#define PCAKIT_EIGEN_HPP_

#include <vector>

#include "pcakit/matrix.hpp"

namespace pcakit {

/// Eigenpairs of a symmetric matrix. values[j] pairs with vectors column j.
struct EigenDecomposition {
  std::vector<double> values;  // sorted descending
  Matrix vectors;              // orthonormal columns
};

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps run until the off-diagonal Frobenius norm falls to 1e-12 times the
/// Frobenius norm of s, up to 64 sweeps; past that ConvergenceError reports
/// the residual. Input must be symmetric within 1e-10 relative to its largest
/// entry, else ContractError. Each returned eigenvector is scaled so its
/// largest-magnitude entry is non-negative (ties broken by lowest row index).
EigenDecomposition eigen_symmetric(const Matrix& s);

}  // namespace pcakit

#endif  // PCAKIT_EIGEN_HPP_
