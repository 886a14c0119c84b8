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

#include "pcakit/adequacy.hpp"

#include <cmath>
#include <string>

#include "pcakit/errors.hpp"

namespace pcakit {

namespace {

constexpr int kMaxIterations = 500;
constexpr double kEps = 1e-15;
constexpr double kFpMin = 1e-300;

// Regularized lower incomplete gamma P(a, x) by its power series.
// Valid for x < a + 1 where the series converges quickly.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < kMaxIterations; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * kEps) {
      return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
  }
  throw ConvergenceError("chi_square_sf: series did not converge");
}

// Regularized upper incomplete gamma Q(a, x) by the Lentz continued
// fraction. Valid for x >= a + 1.
double gamma_q_fraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kFpMin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIterations; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = b + an / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) {
      return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
  }
  throw ConvergenceError("chi_square_sf: continued fraction did not converge");
}

void require_correlation_matrix(const Matrix& r, const char* op) {
  if (!r.square() || r.rows() < 2) {
    throw ContractError(std::string(op) +
                        " requires a square correlation matrix of order >= 2");
  }
  const double tol = 1e-10;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    if (std::abs(r(i, i) - 1.0) > tol) {
      throw ContractError(std::string(op) + ": diagonal entry " +
                          std::to_string(i) + " is not 1");
    }
    for (std::size_t j = i + 1; j < r.cols(); ++j) {
      if (std::abs(r(i, j) - r(j, i)) > tol) {
        throw ContractError(std::string(op) + ": matrix is not symmetric at (" +
                            std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      if (std::abs(r(i, j)) > 1.0 + 1e-12) {
        throw ContractError(std::string(op) + ": entry (" + std::to_string(i) +
                            ", " + std::to_string(j) + ") outside [-1, 1]");
      }
    }
  }
}

}  // namespace

double chi_square_sf(double x, std::size_t df) {
  if (df < 1) {
    throw ContractError("chi_square_sf: df must be >= 1");
  }
  if (!(x >= 0.0)) {
    throw ContractError("chi_square_sf: x must be >= 0");
  }
  if (x == 0.0) return 1.0;
  const double a = 0.5 * static_cast<double>(df);
  const double half_x = 0.5 * x;
  if (half_x < a + 1.0) {
    return 1.0 - gamma_p_series(a, half_x);
  }
  return gamma_q_fraction(a, half_x);
}

BartlettResult bartlett_sphericity(const Matrix& r, std::size_t n) {
  require_correlation_matrix(r, "bartlett_sphericity");
  const std::size_t m = r.rows();
  if (n <= m) {
    throw InsufficientSampleError(
        "bartlett_sphericity: n = " + std::to_string(n) +
        " must exceed the number of variables m = " + std::to_string(m));
  }
  const double det = determinant(r);
  if (det <= 0.0) {
    throw SingularityError(
        "bartlett_sphericity: correlation determinant is not positive");
  }

  BartlettResult out;
  const double nn = static_cast<double>(n);
  const double mm = static_cast<double>(m);
  out.x2 = -(nn - 1.0 - (2.0 * mm + 5.0) / 6.0) * std::log(det);
  if (out.x2 <= 0.0) out.x2 = 0.0;  // det can exceed 1 by rounding only
  out.df = m * (m - 1) / 2;
  out.p = chi_square_sf(out.x2, out.df);
  out.p_underflow = out.p < kPUnderflowThreshold;
  return out;
}

Matrix partial_correlations(const Matrix& r) {
  require_correlation_matrix(r, "partial_correlations");
  const Matrix c = invert(r);
  const std::size_t m = r.rows();
  for (std::size_t i = 0; i < m; ++i) {
    if (c(i, i) <= 0.0) {
      throw ContractError(
          "partial_correlations: matrix is not positive definite");
    }
  }
  Matrix q(m, m);
  for (std::size_t i = 0; i < m; ++i) q(i, i) = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double v = -c(i, j) / std::sqrt(c(i, i) * c(j, j));
      q(i, j) = v;
      q(j, i) = v;
    }
  }
  return q;
}

KmoResult kmo_msa(const Matrix& r, std::vector<std::string> names) {
  if (names.size() != r.rows()) {
    throw ShapeError("kmo_msa: " + std::to_string(names.size()) +
                     " names for " + std::to_string(r.rows()) + " variables");
  }
  const Matrix q = partial_correlations(r);
  const std::size_t m = r.rows();

  double total_r2 = 0.0;
  double total_q2 = 0.0;
  std::vector<double> row_r2(m, 0.0);
  std::vector<double> row_q2(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      row_r2[i] += r(i, j) * r(i, j);
      row_q2[i] += q(i, j) * q(i, j);
    }
    total_r2 += row_r2[i];
    total_q2 += row_q2[i];
  }
  if (total_r2 == 0.0) {
    throw UndefinedMeasureError(
        "kmo_msa: all off-diagonal correlations are zero, measure is 0/0");
  }

  KmoResult out;
  out.kmo = total_r2 / (total_r2 + total_q2);
  out.msa.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double denom = row_r2[i] + row_q2[i];
    if (denom == 0.0) {
      throw UndefinedMeasureError("kmo_msa: variable '" + names[i] +
                                  "' has no off-diagonal correlation");
    }
    out.msa.emplace_back(names[i], row_r2[i] / denom);
  }
  return out;
}

AdequacyReport assess_adequacy(const Matrix& r, std::size_t n,
                               std::vector<std::string> names) {
  const BartlettResult bartlett = bartlett_sphericity(r, n);
  KmoResult kmo = kmo_msa(r, std::move(names));

  AdequacyReport report;
  report.bartlett_x2 = bartlett.x2;
  report.bartlett_df = bartlett.df;
  report.bartlett_p = bartlett.p;
  report.bartlett_p_underflow = bartlett.p_underflow;
  report.kmo = kmo.kmo;
  report.msa = std::move(kmo.msa);
  return report;
}

}  // namespace pcakit
