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

#ifndef PCAKIT_TESTS_SUPPORT_HPP_
#define PCAKIT_TESTS_SUPPORT_HPP_

// Shared test machinery: seeded data generators and a constructor for
// standardized samples whose correlation matrix equals a given target
// exactly. Linear algebra here (Cholesky, Gram-Schmidt) is written for the
// tests alone.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcakit/matrix.hpp"
#include "pcakit/standardize.hpp"

namespace support {

// Random full-rank data: independent normals per column plus a shared
// per-row factor with random column weights, so correlations vary by seed.
inline pcakit::Matrix random_data(std::mt19937_64& rng, std::size_t n,
                                  std::size_t m) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> weight(-1.0, 1.0);
  std::vector<double> w(m);
  for (auto& v : w) v = weight(rng);
  pcakit::Matrix x(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    const double common = normal(rng);
    for (std::size_t j = 0; j < m; ++j) {
      x(i, j) = normal(rng) + w[j] * common;
    }
  }
  return x;
}

inline pcakit::Matrix random_symmetric(std::mt19937_64& rng, std::size_t m,
                                       double magnitude = 2.0) {
  std::uniform_real_distribution<double> entry(-magnitude, magnitude);
  pcakit::Matrix s(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const double v = entry(rng);
      s(i, j) = v;
      s(j, i) = v;
    }
  }
  return s;
}

// Lower-triangular L with L L^T = a. Test-local Cholesky.
inline pcakit::Matrix cholesky_lower(const pcakit::Matrix& a) {
  const std::size_t m = a.rows();
  pcakit::Matrix l(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double sum = a(i, j);
      for (std::size_t k = 0; k < j; ++k) sum -= l(i, k) * l(j, k);
      if (i == j) {
        if (sum <= 0.0) {
          throw std::runtime_error(
              "cholesky_lower: matrix is not positive definite");
        }
        l(i, i) = std::sqrt(sum);
      } else {
        l(i, j) = sum / l(j, j);
      }
    }
  }
  return l;
}

// Standardized sample (mean-0, sd-1 columns) whose sample correlation
// matrix equals target to machine precision: orthonormalize centered
// random columns, rescale, then mix by the Cholesky factor of the target.
inline pcakit::StandardizedData standardized_with_correlation(
    const pcakit::Matrix& target, std::size_t n, std::uint64_t seed) {
  const std::size_t m = target.rows();
  if (n <= m + 1) {
    throw std::runtime_error("standardized_with_correlation: n too small");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  pcakit::Matrix w(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      w(i, j) = normal(rng);
    }
  }
  // center columns
  for (std::size_t j = 0; j < m; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += w(i, j);
    mean /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) w(i, j) -= mean;
  }
  // modified Gram-Schmidt, two passes for orthogonality near round-off
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += w(i, k) * w(i, j);
        for (std::size_t i = 0; i < n; ++i) w(i, j) -= dot * w(i, k);
      }
      double norm = 0.0;
      for (std::size_t i = 0; i < n; ++i) norm += w(i, j) * w(i, j);
      norm = std::sqrt(norm);
      if (norm == 0.0) {
        throw std::runtime_error(
            "standardized_with_correlation: rank-deficient draw");
      }
      for (std::size_t i = 0; i < n; ++i) w(i, j) /= norm;
    }
  }

  const pcakit::Matrix l = cholesky_lower(target);
  const double root = std::sqrt(static_cast<double>(n) - 1.0);
  pcakit::StandardizedData out;
  out.z = pcakit::Matrix(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k <= j; ++k) sum += w(i, k) * l(j, k);
      out.z(i, j) = root * sum;
    }
  }
  out.center.assign(m, 0.0);
  out.scale.assign(m, 1.0);
  out.column_names.reserve(m);
  for (std::size_t j = 1; j <= m; ++j) {
    out.column_names.push_back("v" + std::to_string(j));
  }
  return out;
}

// Standardized wrapper around an explicit score block, for feeding known
// rows through model projections.
inline pcakit::StandardizedData wrap_standardized(pcakit::Matrix z) {
  pcakit::StandardizedData out;
  const std::size_t m = z.cols();
  out.z = std::move(z);
  out.center.assign(m, 0.0);
  out.scale.assign(m, 1.0);
  for (std::size_t j = 1; j <= m; ++j) {
    out.column_names.push_back("v" + std::to_string(j));
  }
  return out;
}

inline double column_variance(const pcakit::Matrix& m, std::size_t j) {
  const std::size_t n = m.rows();
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) mean += m(i, j);
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ss += (m(i, j) - mean) * (m(i, j) - mean);
  }
  return ss / (static_cast<double>(n) - 1.0);
}

// Largest |a - b| over a column compared against reference values with an
// optional sign flip, for quantities defined only up to orientation.
inline double column_diff_up_to_sign(const pcakit::Matrix& got,
                                     std::size_t col,
                                     const std::vector<double>& want) {
  double plus = 0.0;
  double minus = 0.0;
  for (std::size_t i = 0; i < want.size(); ++i) {
    plus = std::max(plus, std::abs(got(i, col) - want[i]));
    minus = std::max(minus, std::abs(got(i, col) + want[i]));
  }
  return std::min(plus, minus);
}

}  // namespace support

#endif  // PCAKIT_TESTS_SUPPORT_HPP_
