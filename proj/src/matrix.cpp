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

#include "pcakit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "pcakit/errors.hpp"

namespace pcakit {

namespace {

std::string shape_of(const Matrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_square(const Matrix& a, const char* op) {
  if (!a.square()) {
    throw ShapeError(std::string(op) + " requires a square matrix, got " +
                     shape_of(a));
  }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(op) + ": shapes " + shape_of(a) + " and " +
                     shape_of(b) + " differ");
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw ShapeError("matrix data has " + std::to_string(data_.size()) +
                     " entries, expected " + std::to_string(rows_ * cols_) +
                     " for " + shape_of(*this));
  }
}

Matrix Matrix::identity(std::size_t m) {
  Matrix out(m, m);
  for (std::size_t i = 0; i < m; ++i) out(i, i) = 1.0;
  return out;
}

Matrix Matrix::diagonal(std::span<const double> d) {
  Matrix out(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = d[i];
  return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: inner dimensions " + shape_of(a) + " * " +
                     shape_of(b) + " do not agree");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(j, i) = a(i, j);
    }
  }
  return out;
}

double determinant(const Matrix& a) {
  require_square(a, "determinant");
  const std::size_t m = a.rows();
  Matrix u = a;
  double det = 1.0;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < m; ++i) {
      if (std::abs(u(i, k)) > std::abs(u(piv, k))) piv = i;
    }
    if (u(piv, k) == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = 0; j < m; ++j) std::swap(u(piv, j), u(k, j));
      det = -det;
    }
    det *= u(k, k);
    for (std::size_t i = k + 1; i < m; ++i) {
      const double f = u(i, k) / u(k, k);
      if (f == 0.0) continue;
      for (std::size_t j = k; j < m; ++j) u(i, j) -= f * u(k, j);
    }
  }
  return det;
}

Matrix invert(const Matrix& a) {
  require_square(a, "invert");
  const std::size_t m = a.rows();
  const double scale = max_abs(a);
  if (scale == 0.0) {
    throw SingularityError("invert: zero matrix, pivot column 0 is empty");
  }
  const double threshold = 1e-12 * scale;

  Matrix u = a;
  Matrix inv = Matrix::identity(m);
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < m; ++i) {
      if (std::abs(u(i, k)) > std::abs(u(piv, k))) piv = i;
    }
    if (std::abs(u(piv, k)) < threshold) {
      throw SingularityError("invert: pivot in column " + std::to_string(k) +
                             " below tolerance, matrix is singular");
    }
    if (piv != k) {
      for (std::size_t j = 0; j < m; ++j) {
        std::swap(u(piv, j), u(k, j));
        std::swap(inv(piv, j), inv(k, j));
      }
    }
    const double d = u(k, k);
    for (std::size_t j = 0; j < m; ++j) {
      u(k, j) /= d;
      inv(k, j) /= d;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == k) continue;
      const double f = u(i, k);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        u(i, j) -= f * u(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

double trace(const Matrix& a) {
  require_square(a, "trace");
  double t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (double v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
    }
  }
  return m;
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (double v : a.data()) s += v * v;
  return std::sqrt(s);
}

std::vector<double> matrix_column(const Matrix& a, std::size_t j) {
  if (j >= a.cols()) {
    throw ShapeError("matrix_column: column " + std::to_string(j) +
                     " out of range for " + shape_of(a));
  }
  std::vector<double> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = a(i, j);
  return out;
}

Matrix scale_columns(const Matrix& a, std::span<const double> factors) {
  if (factors.size() != a.cols()) {
    throw ShapeError("scale_columns: " + std::to_string(factors.size()) +
                     " factors for " + std::to_string(a.cols()) + " columns");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) *= factors[j];
    }
  }
  return out;
}

Matrix take_columns(const Matrix& a, std::size_t k) {
  if (k > a.cols()) {
    throw ShapeError("take_columns: k = " + std::to_string(k) +
                     " exceeds column count " + std::to_string(a.cols()));
  }
  Matrix out(a.rows(), k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      out(i, j) = a(i, j);
    }
  }
  return out;
}

}  // namespace pcakit
