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

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "pcakit/errors.hpp"
#include "pcakit/standardize.hpp"
#include "reference_values.hpp"
#include "support.hpp"

using pcakit::Matrix;
using pcakit::StandardizedData;

namespace {

std::vector<double> col_of(const Matrix& m, std::size_t j) {
  std::vector<double> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = m(i, j);
  return out;
}

void negate_column(Matrix& m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = -m(i, j);
}

StandardizedData reference_sample(std::uint64_t seed = 20260817) {
  return support::standardized_with_correlation(howell::kCorrelation,
                                                howell::kRows, seed);
}

}  // namespace

TEST_SUITE("pca") {

TEST_CASE("correlation matrix of a constructed sample is exact") {
  const StandardizedData z = reference_sample();
  const Matrix r = pcakit::correlation_matrix(z);
  CHECK(pcakit::max_abs_diff(r, howell::kCorrelation) <= 1e-12);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(r(i, i) == 1.0);
  }
}

TEST_CASE("correlation matrix of one column is the 1 x 1 identity") {
  std::mt19937_64 rng(7);
  const Matrix x = support::random_data(rng, 30, 1);
  const StandardizedData z = pcakit::standardize(x, {"only"});
  const Matrix r = pcakit::correlation_matrix(z);
  REQUIRE(r.rows() == 1);
  CHECK(r(0, 0) == 1.0);
}

TEST_CASE("correlation of a duplicated column clamps to one") {
  std::mt19937_64 rng(11);
  const Matrix x = support::random_data(rng, 25, 1);
  const StandardizedData one = pcakit::standardize(x, {"a"});
  Matrix dup(25, 2);
  for (std::size_t i = 0; i < 25; ++i) {
    dup(i, 0) = one.z(i, 0);
    dup(i, 1) = one.z(i, 0);
  }
  const Matrix r =
      pcakit::correlation_matrix(support::wrap_standardized(dup));
  CHECK(r(0, 1) == 1.0);
  CHECK(r(1, 0) == 1.0);
}

TEST_CASE("correlation matrix needs two rows") {
  Matrix z{1, 2, {0.0, 0.0}};
  CHECK_THROWS_AS(
      pcakit::correlation_matrix(support::wrap_standardized(z)),
      pcakit::InsufficientDataError);
}

TEST_CASE("fitted eigensystem matches the reference analysis") {
  const StandardizedData z = reference_sample();
  const pcakit::PcaModel model = pcakit::fit(z);

  REQUIRE(model.lambda.size() == 3);
  for (std::size_t j = 0; j < 3; ++j) {
    CAPTURE(j);
    CHECK(std::abs(model.lambda[j] - howell::kEigenvalues[j]) <= 1e-6);
    CHECK(std::abs(model.proportion[j] - howell::kProportion[j]) <= 1e-4);
    CHECK(std::abs(model.cumulative[j] - howell::kCumulative[j]) <= 1e-4);
  }
  CHECK(model.cumulative.back() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(model.kaiser == std::vector<bool>{true, false, false});

  for (std::size_t j = 0; j < 3; ++j) {
    CAPTURE(j);
    CHECK(support::column_diff_up_to_sign(
              model.v, j, col_of(howell::kRotation, j)) <= 1e-6);
    CHECK(support::column_diff_up_to_sign(
              model.loadings, j, col_of(howell::kLoadings, j)) <= 1e-6);
  }
}

TEST_CASE("rotation is orthonormal with determinant plus one") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 12 + static_cast<std::size_t>(rng() % 60);
    const std::size_t m = 2 + static_cast<std::size_t>(rng() % 5);
    const Matrix x = support::random_data(rng, n, m);
    std::vector<std::string> names;
    for (std::size_t j = 0; j < m; ++j) names.push_back("c" + std::to_string(j));
    const pcakit::PcaModel model =
        pcakit::fit(pcakit::standardize(x, names));

    CAPTURE(trial);
    const Matrix vtv = pcakit::matmul(pcakit::transpose(model.v), model.v);
    CHECK(pcakit::max_abs_diff(vtv, Matrix::identity(m)) <= 1e-10);
    CHECK(std::abs(pcakit::determinant(model.v) - 1.0) <= 1e-10);

    // loadings are the rotation scaled by sqrt eigenvalues
    Matrix scaled = model.v;
    for (std::size_t j = 0; j < m; ++j) {
      const double s = std::sqrt(model.lambda[j]);
      for (std::size_t i = 0; i < m; ++i) scaled(i, j) *= s;
    }
    CHECK(pcakit::max_abs_diff(scaled, model.loadings) <= 1e-12);

    // eigenvalues tile the trace; shares accumulate to one
    double total = 0.0;
    for (double l : model.lambda) total += l;
    CHECK(std::abs(total - static_cast<double>(m)) <= 1e-9);
    CHECK(std::abs(model.cumulative.back() - 1.0) <= 1e-12);
  }
}

TEST_CASE("a spherical correlation leaves everything in place") {
  const StandardizedData z =
      support::standardized_with_correlation(Matrix::identity(3), 40, 5);
  const pcakit::PcaModel model = pcakit::fit(z);
  for (double l : model.lambda) {
    CHECK(std::abs(l - 1.0) <= 1e-9);
  }
  CHECK(model.kaiser == std::vector<bool>{false, false, false});
  CHECK(pcakit::max_abs_diff(model.v, Matrix::identity(3)) <= 1e-9);

  const pcakit::ScoreSet s = pcakit::scores(model, z);
  CHECK(pcakit::max_abs_diff(s.f, z.z) <= 1e-9);
}

TEST_CASE("fit rejects a numerically singular correlation") {
  std::mt19937_64 rng(17);
  const Matrix x = support::random_data(rng, 20, 1);
  const StandardizedData one = pcakit::standardize(x, {"a"});
  Matrix dup(20, 2);
  for (std::size_t i = 0; i < 20; ++i) {
    dup(i, 0) = one.z(i, 0);
    dup(i, 1) = one.z(i, 0);
  }
  CHECK_THROWS_AS(pcakit::fit(support::wrap_standardized(dup)),
                  pcakit::SingularityError);
}

TEST_CASE("rotated scores carry the eigenvalue variances") {
  const StandardizedData z = reference_sample();
  const pcakit::PcaModel model = pcakit::fit(z);
  const pcakit::ScoreSet s = pcakit::scores(model, z);

  REQUIRE(s.z_rot.cols() == 3);
  for (std::size_t j = 0; j < 3; ++j) {
    CAPTURE(j);
    const double var = support::column_variance(s.z_rot, j);
    CHECK(std::abs(var - model.lambda[j]) <= 1e-9);
    CHECK(std::abs(std::sqrt(var) - howell::kZrotSds[j]) <= 1e-6);
    CHECK(std::abs(support::column_variance(s.f, j) - 1.0) <= 1e-9);
  }
}

TEST_CASE("known standardized rows project onto the reference scores") {
  const pcakit::PcaModel model = pcakit::fit(reference_sample());
  const pcakit::ScoreSet s =
      pcakit::scores(model, support::wrap_standardized(howell::kZHead));
  REQUIRE(s.f.rows() == 6);
  for (std::size_t j = 0; j < 3; ++j) {
    CAPTURE(j);
    CHECK(support::column_diff_up_to_sign(
              s.f, j, col_of(howell::kFHead, j)) <= 1e-5);
  }
}

TEST_CASE("scores demand matching column counts") {
  const pcakit::PcaModel model = pcakit::fit(reference_sample());
  Matrix narrow{4, 2, {1, 0, 0, 1, -1, 0, 0, -1}};
  CHECK_THROWS_AS(
      pcakit::scores(model, support::wrap_standardized(narrow)),
      pcakit::ShapeError);
}

TEST_CASE("the five consistency identities hold to 1e-9") {
  const StandardizedData z = reference_sample();
  const pcakit::PcaModel model = pcakit::fit(z);
  const pcakit::ScoreSet s = pcakit::scores(model, z);
  const pcakit::ConsistencyReport rep =
      pcakit::consistency_check(model, z, s);
  CHECK(rep.r_minus_aat <= 1e-9);
  CHECK(rep.lambda_minus_ata <= 1e-9);
  CHECK(rep.identity_minus_ftf <= 1e-9);
  CHECK(rep.a_minus_ztf <= 1e-9);
  CHECK(rep.z_minus_fat <= 1e-9);
  CHECK(rep.max() <= 1e-9);
}

TEST_CASE("consistency identities hold on varied random samples") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 10 + static_cast<std::size_t>(rng() % 150);
    const std::size_t m =
        2 + static_cast<std::size_t>(rng() % std::min<std::size_t>(7, n - 3));
    const Matrix x = support::random_data(rng, n, m);
    std::vector<std::string> names;
    for (std::size_t j = 0; j < m; ++j) names.push_back("c" + std::to_string(j));
    const StandardizedData z = pcakit::standardize(x, names);
    const pcakit::PcaModel model = pcakit::fit(z);
    const pcakit::ScoreSet s = pcakit::scores(model, z);
    CAPTURE(trial);
    CAPTURE(n);
    CAPTURE(m);
    CHECK(pcakit::consistency_check(model, z, s).max() <= 1e-9);
  }
}

TEST_CASE("a corrupted loading matrix is flagged") {
  const StandardizedData z = reference_sample();
  pcakit::PcaModel model = pcakit::fit(z);
  const pcakit::ScoreSet s = pcakit::scores(model, z);
  model.loadings(0, 0) += 0.1;
  const pcakit::ConsistencyReport rep =
      pcakit::consistency_check(model, z, s);
  CHECK(rep.r_minus_aat >= 0.01);
  CHECK(rep.max() >= 0.01);
}

TEST_CASE("residuals are invariant under a component sign flip") {
  const StandardizedData z = reference_sample();
  pcakit::PcaModel model = pcakit::fit(z);
  pcakit::ScoreSet s = pcakit::scores(model, z);
  const pcakit::ConsistencyReport before =
      pcakit::consistency_check(model, z, s);

  // negating one eigenvector flips its loadings and scores with it
  const std::size_t j = 1;
  negate_column(model.v, j);
  negate_column(model.loadings, j);
  negate_column(s.z_rot, j);
  negate_column(s.f, j);
  const pcakit::ConsistencyReport after =
      pcakit::consistency_check(model, z, s);

  CHECK(std::abs(before.r_minus_aat - after.r_minus_aat) <= 1e-12);
  CHECK(std::abs(before.lambda_minus_ata - after.lambda_minus_ata) <= 1e-12);
  CHECK(std::abs(before.identity_minus_ftf - after.identity_minus_ftf) <=
        1e-12);
  CHECK(std::abs(before.a_minus_ztf - after.a_minus_ztf) <= 1e-12);
  CHECK(std::abs(before.z_minus_fat - after.z_minus_fat) <= 1e-12);
}

}  // TEST_SUITE("pca")
