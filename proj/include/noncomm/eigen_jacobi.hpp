#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "noncomm/charpoly.hpp"

namespace noncomm {

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations with a
/// deterministic sweep order, iterated until the off-diagonal Frobenius
/// norm drops below max(tol, 1e-12) * ||A||_F. Returned sorted descending.
/// Backward stability of Jacobi makes each eigenvalue accurate to within
/// the off-diagonal norm at termination.
inline std::vector<double> eigenvalues_numeric(const IMat& a,
                                               double tol = 1e-12) {
  if (tol <= 0) throw std::invalid_argument("eigenvalues_numeric: tol > 0");
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) {
      throw std::invalid_argument("eigenvalues_numeric: square input only");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a[i][j] != a[j][i]) {
        throw std::invalid_argument("eigenvalues_numeric: symmetric input "
                                    "only");
      }
    }
  }
  if (n == 0) return {};

  std::vector<std::vector<double>> m(n, std::vector<double>(n));
  double norm2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = static_cast<double>(a[i][j]);
      norm2 += m[i][j] * m[i][j];
    }
  }
  const double threshold = std::max(tol, 1e-12) * std::sqrt(norm2);

  auto offdiag_norm = [&] {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += 2 * m[i][j] * m[i][j];
    }
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && offdiag_norm() > threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m[p][q];
        if (apq == 0) continue;
        const double theta = (m[q][q] - m[p][p]) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (std::size_t i = 0; i < n; ++i) {
          const double aip = m[i][p], aiq = m[i][q];
          m[i][p] = c * aip - s * aiq;
          m[i][q] = s * aip + c * aiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double api = m[p][i], aqi = m[q][i];
          m[p][i] = c * api - s * aqi;
          m[q][i] = s * api + c * aqi;
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = m[i][i];
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

}  // namespace noncomm
