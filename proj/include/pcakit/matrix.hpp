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

#ifndef PCAKIT_MATRIX_HPP_
#define PCAKIT_MATRIX_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace pcakit {

/// Dense row-major matrix of doubles. Value semantics throughout.
class Matrix {
 public:
  Matrix() = default;

  /// rows x cols, zero filled.
  Matrix(std::size_t rows, std::size_t cols);

  /// rows x cols from row-major data; data.size() must equal rows * cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static Matrix identity(std::size_t m);
  static Matrix diagonal(std::span<const double> d);

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  std::span<const double> data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// a * b. Inner dimensions must agree.
Matrix matmul(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

/// Determinant by Gaussian elimination with partial pivoting.
/// An exactly zero pivot column yields 0. Square input required.
double determinant(const Matrix& a);

/// Inverse by Gauss-Jordan elimination with partial pivoting.
/// A pivot below 1e-12 times the largest initial magnitude raises
/// SingularityError naming the pivot column. Square input required.
Matrix invert(const Matrix& a);

double trace(const Matrix& a);

/// Largest entry magnitude; 0 for an empty matrix.
double max_abs(const Matrix& a);

/// Largest entrywise |a - b|. Shapes must agree.
double max_abs_diff(const Matrix& a, const Matrix& b);

double frobenius_norm(const Matrix& a);

/// Column j as a vector.
std::vector<double> matrix_column(const Matrix& a, std::size_t j);

/// Copy of a with column j multiplied by factors[j].
Matrix scale_columns(const Matrix& a, std::span<const double> factors);

/// Copy of the first k columns of a.
Matrix take_columns(const Matrix& a, std::size_t k);

}  // namespace pcakit

#endif  // PCAKIT_MATRIX_HPP_
