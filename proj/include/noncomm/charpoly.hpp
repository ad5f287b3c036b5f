#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "noncomm/int_types.hpp"
#include "noncomm/modarith.hpp"
#include "noncomm/poly.hpp"

namespace noncomm {

/// Small-entry integer matrix (adjacency, Laplacian, evaluated blocks).
using IMat = std::vector<std::vector<std::int64_t>>;

inline constexpr std::size_t kCharpolyDimensionCap = 1000;

namespace detail {

inline void require_square(const IMat& a) {
  for (const auto& row : a) {
    if (row.size() != a.size()) {
      throw std::invalid_argument("matrix must be square");
    }
  }
}

/// Upper bound on log2 |c_k| for charpoly coefficients of an n x n integer
/// matrix with entries bounded by amax: |c_k| <= C(n,k) * (sqrt(k)*amax)^k
/// (c_k is a sum of C(n,k) principal k-minors, each Hadamard-bounded).
inline double charpoly_coeff_log2_bound(std::size_t n, double amax) {
  if (n == 0) return 1.0;
  double best = 1.0;
  double log2_binom = 0.0;  // log2 C(n,0)
  for (std::size_t k = 1; k <= n; ++k) {
    log2_binom += std::log2(static_cast<double>(n - k + 1)) -
                  std::log2(static_cast<double>(k));
    double bound = log2_binom +
                   k * (0.5 * std::log2(static_cast<double>(k)) +
                        std::log2(std::max(amax, 1.0)));
    best = std::max(best, bound);
  }
  return best;
}

}  // namespace detail

/// Characteristic polynomial mod a prime p < 2^61: similarity reduction to
/// Hessenberg form over GF(p), then the standard Hessenberg recurrence on
/// leading principal minors. O(n^3). Returns monic det(xI - A) mod p,
/// coefficients low to high.
inline std::vector<std::uint64_t> charpoly_mod(const IMat& a,
                                               std::uint64_t p) {
  detail::require_square(a);
  if (p >= (1ull << 61) || !is_prime_u64(p)) {
    throw std::invalid_argument("charpoly_mod: p must be a prime < 2^61");
  }
  const std::size_t n = a.size();
  std::vector<std::vector<std::uint64_t>> h(n,
                                            std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t v = a[i][j] % static_cast<std::int64_t>(p);
      if (v < 0) v += static_cast<std::int64_t>(p);
      h[i][j] = static_cast<std::uint64_t>(v);
    }
  }

  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::size_t piv = k + 1;
    while (piv < n && h[piv][k] == 0) ++piv;
    if (piv == n) continue;
    if (piv != k + 1) {
      std::swap(h[piv], h[k + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][k + 1]);
    }
    const std::uint64_t inv = invmod(h[k + 1][k], p);
    for (std::size_t i = k + 2; i < n; ++i) {
      if (h[i][k] == 0) continue;
      const std::uint64_t m = mulmod(h[i][k], inv, p);
      for (std::size_t j = k; j < n; ++j) {
        h[i][j] = submod(h[i][j], mulmod(m, h[k + 1][j], p), p);
      }
      for (std::size_t r = 0; r < n; ++r) {
        h[r][k + 1] = addmod(h[r][k + 1], mulmod(m, h[r][i], p), p);
      }
    }
  }

  // p_k(x) = (x - h[k][k]) p_{k-1}(x)
  //          - sum_m h[m][k] (prod of subdiagonals) p_{m-1}(x)
  std::vector<std::vector<std::uint64_t>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& prev = polys[k - 1];
    std::vector<std::uint64_t> cur(k + 1, 0);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = prev[i];
      cur[i] = submod(cur[i], mulmod(h[k - 1][k - 1], prev[i], p), p);
    }
    std::uint64_t subprod = 1;
    for (std::size_t m = k - 1; m >= 1; --m) {
      subprod = mulmod(subprod, h[m][m - 1], p);
      if (subprod == 0) break;
      const std::uint64_t coef = mulmod(h[m - 1][k - 1], subprod, p);
      if (coef == 0) continue;
      const auto& pm = polys[m - 1];
      for (std::size_t i = 0; i < pm.size(); ++i) {
        cur[i] = submod(cur[i], mulmod(coef, pm[i], p), p);
      }
    }
    polys[k] = std::move(cur);
  }
  return polys[n];
}

/// Exact monic det(xI - A). Hessenberg reduction runs mod a deterministic
/// set of 61-bit primes whose product exceeds twice the Hadamard-style
/// coefficient bound; coefficients are then CRT-reconstructed with a
/// symmetric lift, so the result is exact, not probabilistic.
inline IntPolynomial charpoly(const IMat& a) {
  detail::require_square(a);
  const std::size_t n = a.size();
  if (n > kCharpolyDimensionCap) {
    throw std::invalid_argument(
        "charpoly: dimension above cap; use charpoly_mod with a few primes "
        "for verification at this size");
  }
  if (n == 0) return IntPolynomial::one();

  double amax = 1.0;
  for (const auto& row : a) {
    for (auto v : row) amax = std::max(amax, std::abs(static_cast<double>(v)));
  }
  const double bits_needed = detail::charpoly_coeff_log2_bound(n, amax) + 2;

  std::vector<std::uint64_t> primes;
  double bits = 0;
  for (std::size_t i = 0; bits < bits_needed; ++i) {
    primes.push_back(crt_prime(i));
    bits += std::log2(static_cast<double>(primes.back()));
  }

  std::vector<std::vector<std::uint64_t>> residues;
  residues.reserve(primes.size());
  for (auto p : primes) residues.push_back(charpoly_mod(a, p));

  std::vector<Int> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Int value = 0, modulus = 1;
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
      const std::uint64_t p = primes[pi];
      const std::uint64_t rk =
          k < residues[pi].size() ? residues[pi][k] : 0;
      Int vm = value % Int(p);
      if (vm < 0) vm += p;
      Int mm = modulus % Int(p);
      const std::uint64_t minv = invmod(mm.convert_to<std::uint64_t>(), p);
      const std::uint64_t t =
          mulmod(submod(rk, vm.convert_to<std::uint64_t>(), p), minv, p);
      value += modulus * Int(t);
      modulus *= Int(p);
    }
    if (value * 2 > modulus) value -= modulus;
    coeffs[k] = std::move(value);
  }
  return IntPolynomial(std::move(coeffs));
}

/// Faddeev-LeVerrier: M_{k} = A(M_{k-1} + c_{k-1} I), c_k = -tr(M_k)/k.
/// All divisions are exact over the integers. O(n^4) big-int work; kept as
/// an independent cross-check for small matrices.
inline IntPolynomial charpoly_faddeev_leverrier(const IMat& a) {
  detail::require_square(a);
  const std::size_t n = a.size();
  if (n == 0) return IntPolynomial::one();
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
  std::vector<Int> coeffs(n + 1);
  coeffs[n] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  }
  Int c = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      // M <- A * (M + c I)
      std::vector<std::vector<Int>> next(n, std::vector<Int>(n, 0));
      for (std::size_t i = 0; i < n; ++i) m[i][i] += c;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
          if (a[i][l] == 0) continue;
          const Int f = a[i][l];
          for (std::size_t j = 0; j < n; ++j) next[i][j] += f * m[l][j];
        }
      }
      m = std::move(next);
    }
    Int trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += m[i][i];
    if (trace % Int(k) != 0) {
      throw std::logic_error("faddeev_leverrier: non-exact trace division");
    }
    c = -trace / Int(k);
    coeffs[n - k] = c;
  }
  return IntPolynomial(std::move(coeffs));
}

/// Fraction-free Bareiss elimination applied directly to the characteristic
/// matrix xI - A over Z[x]. Every leading principal minor of xI - A is a
/// monic non-zero polynomial, so no pivoting is ever needed and each
/// two-term update divides exactly by the previous pivot. Exact with big
/// integers throughout; O(n^4)-ish polynomial work, intended for n <= ~64.
inline IntPolynomial charpoly_bareiss(const IMat& a) {
  detail::require_square(a);
  const std::size_t n = a.size();
  if (n == 0) return IntPolynomial::one();
  std::vector<std::vector<IntPolynomial>> m(n,
                                            std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = i == j ? IntPolynomial({Int(-a[i][j]), Int(1)})
                       : IntPolynomial({Int(-a[i][j])});
    }
  }
  IntPolynomial prev = IntPolynomial::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        IntPolynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto [q, r] = IntPolynomial::divmod(num, prev);
        if (!r.is_zero()) {
          throw std::logic_error("bareiss: non-exact division");
        }
        m[i][j] = std::move(q);
      }
      m[i][k] = IntPolynomial::zero();
    }
    prev = m[k][k];
  }
  return m[n - 1][n - 1];
}

/// Exact integer determinant by fraction-free Bareiss with row pivoting.
inline Int det_bareiss(const IMat& a) {
  detail::require_square(a);
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  }
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign < 0 ? Int(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

}  // namespace noncomm
