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

#include <cmath>
#include <random>

#include <doctest.h>

#include "pcakit/errors.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"

using pcakit::Matrix;

namespace {

double check_abs(double got, double want) { return std::abs(got - want); }

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("construction rejects mismatched data length") {
  CHECK_THROWS_AS(Matrix(2, 2, {1.0, 2.0, 3.0}), pcakit::ShapeError);
}

TEST_CASE("matmul reproduces hand products") {
  const Matrix a{2, 3, {1, 2, 3, 4, 5, 6}};
  const Matrix b{3, 2, {7, 8, 9, 10, 11, 12}};
  const Matrix ab = pcakit::matmul(a, b);
  REQUIRE(ab.rows() == 2);
  REQUIRE(ab.cols() == 2);
  CHECK(ab(0, 0) == 58.0);
  CHECK(ab(0, 1) == 64.0);
  CHECK(ab(1, 0) == 139.0);
  CHECK(ab(1, 1) == 154.0);
}

TEST_CASE("matmul with the identity is a no-op") {
  const Matrix a{2, 2, {3.5, -1.25, 0.75, 2.0}};
  const Matrix left = pcakit::matmul(Matrix::identity(2), a);
  const Matrix right = pcakit::matmul(a, Matrix::identity(2));
  CHECK(pcakit::max_abs_diff(left, a) == 0.0);
  CHECK(pcakit::max_abs_diff(right, a) == 0.0);
}

TEST_CASE("matmul rejects mismatched inner dimensions") {
  const Matrix a{2, 3, {1, 2, 3, 4, 5, 6}};
  const Matrix b{2, 2, {1, 0, 0, 1}};
  CHECK_THROWS_AS(pcakit::matmul(a, b), pcakit::ShapeError);
}

TEST_CASE("rotating the reference correlation diagonalizes it") {
  const Matrix vt = pcakit::transpose(howell::kRotation);
  const Matrix d =
      pcakit::matmul(vt, pcakit::matmul(howell::kCorrelation,
                                        howell::kRotation));
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(check_abs(d(j, j), howell::kEigenvalues[j]) <= 1e-6);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j) CHECK(std::abs(d(i, j)) <= 1e-6);
    }
  }
}

TEST_CASE("transpose flips indices and is an involution") {
  const Matrix a{2, 3, {1, 2, 3, 4, 5, 6}};
  const Matrix t = pcakit::transpose(a);
  REQUIRE(t.rows() == 3);
  REQUIRE(t.cols() == 2);
  CHECK(t(0, 1) == 4.0);
  CHECK(t(2, 0) == 3.0);
  CHECK(pcakit::max_abs_diff(pcakit::transpose(t), a) == 0.0);
}

TEST_CASE("determinant of simple matrices") {
  CHECK(pcakit::determinant(Matrix::identity(4)) == 1.0);
  CHECK(pcakit::determinant(Matrix{2, 2, {2, 1, 1, 2}}) == 3.0);
  CHECK(pcakit::determinant(Matrix{2, 2, {1, 2, 2, 4}}) == 0.0);
}

TEST_CASE("determinant of the reference correlation matrix") {
  CHECK(check_abs(pcakit::determinant(howell::kCorrelation),
                  howell::kDeterminant) <= 1e-6);
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> entry(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 2 + trial % 3;  // 2..4
    Matrix a(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        a(i, j) = entry(rng);
      }
    }
    const double want = oracle::det_cofactor(oracle::to_rows(a));
    const double got = pcakit::determinant(a);
    CAPTURE(trial);
    CHECK(check_abs(got, want) <= 1e-9 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("determinant changes sign under a row swap") {
  const Matrix a{3, 3, {4, 1, 0, 2, 5, 1, 0, 3, 6}};
  Matrix swapped = a;
  for (std::size_t j = 0; j < 3; ++j) {
    std::swap(swapped(0, j), swapped(1, j));
  }
  CHECK(check_abs(pcakit::determinant(a), -pcakit::determinant(swapped)) <=
        1e-12);
}

TEST_CASE("determinant requires a square matrix") {
  CHECK_THROWS_AS(pcakit::determinant(Matrix(2, 3)), pcakit::ShapeError);
}

TEST_CASE("invert recovers simple inverses") {
  const std::vector<double> d = {2.0, 4.0, 8.0};
  const Matrix inv = pcakit::invert(Matrix::diagonal(d));
  CHECK(inv(0, 0) == 0.5);
  CHECK(inv(1, 1) == 0.25);
  CHECK(inv(2, 2) == 0.125);
  CHECK(pcakit::max_abs_diff(pcakit::invert(Matrix::identity(3)),
                             Matrix::identity(3)) == 0.0);
}

TEST_CASE("invert matches the reference inverse") {
  const Matrix inv = pcakit::invert(howell::kCorrelation);
  CHECK(pcakit::max_abs_diff(inv, howell::kInverse) <= 1e-6);
}

TEST_CASE("a matrix times its inverse is the identity") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 2 + trial % 5;  // 2..6
    Matrix a(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        a(i, j) = entry(rng);
      }
    }
    a = pcakit::matmul(pcakit::transpose(a), a);  // well-conditioned enough
    for (std::size_t i = 0; i < m; ++i) a(i, i) += 1.0;
    const Matrix inv = pcakit::invert(a);
    CAPTURE(trial);
    CHECK(pcakit::max_abs_diff(pcakit::matmul(a, inv),
                               Matrix::identity(m)) <= 1e-9);
    CHECK(pcakit::max_abs_diff(pcakit::invert(inv), a) <= 1e-8);
  }
}

TEST_CASE("invert reports the failing pivot column") {
  // rank 2: both leading pivots succeed, the third collapses
  const Matrix singular{3, 3, {1, 2, 3, 2, 4, 6, 1, 0, 1}};
  CHECK_THROWS_WITH_AS(pcakit::invert(singular),
                       doctest::Contains("column 2"),
                       pcakit::SingularityError);
  CHECK_THROWS_AS(pcakit::invert(Matrix(3, 3)), pcakit::SingularityError);
  CHECK_THROWS_AS(pcakit::invert(Matrix(2, 3)), pcakit::ShapeError);
}

TEST_CASE("column helpers slice and scale") {
  const Matrix a{2, 3, {1, 2, 3, 4, 5, 6}};
  const auto col = pcakit::matrix_column(a, 1);
  REQUIRE(col.size() == 2);
  CHECK(col[0] == 2.0);
  CHECK(col[1] == 5.0);
  CHECK_THROWS_AS(pcakit::matrix_column(a, 3), pcakit::ShapeError);

  const std::vector<double> f = {2.0, 0.5, -1.0};
  const Matrix scaled = pcakit::scale_columns(a, f);
  CHECK(scaled(0, 0) == 2.0);
  CHECK(scaled(1, 1) == 2.5);
  CHECK(scaled(0, 2) == -3.0);

  const Matrix first_two = pcakit::take_columns(a, 2);
  REQUIRE(first_two.cols() == 2);
  CHECK(first_two(1, 1) == 5.0);
  CHECK_THROWS_AS(pcakit::take_columns(a, 4), pcakit::ShapeError);
}

TEST_CASE("trace sums the diagonal") {
  CHECK(pcakit::trace(howell::kCorrelation) == 3.0);
  CHECK_THROWS_AS(pcakit::trace(Matrix(2, 3)), pcakit::ShapeError);
}

}  // TEST_SUITE("matrix")
