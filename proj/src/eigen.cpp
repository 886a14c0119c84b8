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

#include "pcakit/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>

#include "pcakit/errors.hpp"

namespace pcakit {

namespace {

constexpr int kMaxSweeps = 64;
constexpr double kRelativeOffTolerance = 1e-12;
constexpr double kSymmetryTolerance = 1e-10;

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) s += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(s);
}

// One Jacobi rotation in the (p, q) plane, applied to both the working
// matrix and the accumulated eigenvector matrix.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;

  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 1.0 / (2.0 * theta);  // avoids theta * theta overflowing
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  const std::size_t m = a.rows();
  for (std::size_t r = 0; r < m; ++r) {
    if (r == p || r == q) continue;
    const double arp = a(r, p);
    const double arq = a(r, q);
    a(r, p) = arp - s * (arq + tau * arp);
    a(p, r) = a(r, p);
    a(r, q) = arq + s * (arp - tau * arq);
    a(q, r) = a(r, q);
  }
  for (std::size_t r = 0; r < m; ++r) {
    const double vrp = v(r, p);
    const double vrq = v(r, q);
    v(r, p) = vrp - s * (vrq + tau * vrp);
    v(r, q) = vrq + s * (vrp - tau * vrq);
  }
}

void fix_column_signs(Matrix& vectors) {
  for (std::size_t j = 0; j < vectors.cols(); ++j) {
    std::size_t lead = 0;
    for (std::size_t i = 1; i < vectors.rows(); ++i) {
      if (std::abs(vectors(i, j)) > std::abs(vectors(lead, j))) lead = i;
    }
    if (vectors(lead, j) < 0.0) {
      for (std::size_t i = 0; i < vectors.rows(); ++i) {
        vectors(i, j) = -vectors(i, j);
      }
    }
  }
}

}  // namespace

EigenDecomposition eigen_symmetric(const Matrix& s) {
  if (!s.square()) {
    throw ShapeError("eigen_symmetric requires a square matrix, got " +
                     std::to_string(s.rows()) + "x" +
                     std::to_string(s.cols()));
  }
  const std::size_t m = s.rows();
  const double scale = std::max(1.0, max_abs(s));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (std::abs(s(i, j) - s(j, i)) > kSymmetryTolerance * scale) {
        throw ContractError(
            "eigen_symmetric: input is not symmetric at (" +
            std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }

  Matrix a = s;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double avg = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = avg;
      a(j, i) = avg;
    }
  }
  Matrix v = Matrix::identity(m);
  const double target = kRelativeOffTolerance * frobenius_norm(s);

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        rotate(a, v, p, q);
      }
    }
  }
  if (!converged && off_diagonal_norm(a) > target) {
    throw ConvergenceError(
        "eigen_symmetric: no convergence in " + std::to_string(kMaxSweeps) +
        " sweeps, off-diagonal residual " +
        std::to_string(off_diagonal_norm(a)));
  }

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&a](std::size_t x, std::size_t y) {
    return a(x, x) > a(y, y);
  });

  EigenDecomposition out;
  out.values.resize(m);
  out.vectors = Matrix(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    out.values[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < m; ++i) {
      out.vectors(i, j) = v(i, order[j]);
    }
  }
  fix_column_signs(out.vectors);
  return out;
}

}  // namespace pcakit
