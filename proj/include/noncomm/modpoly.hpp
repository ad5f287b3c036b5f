#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "noncomm/int_types.hpp"
#include "noncomm/modarith.hpp"

namespace noncomm {

/// Dense polynomial arithmetic mod a prime p < 2^61. Coefficients are stored
/// low to high, not normalized unless stated.
namespace modpoly {

using Poly = std::vector<std::uint64_t>;

inline Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = addmod(c[i + j], mulmod(a[i], b[j], p), p);
    }
  }
  return c;
}

inline Poly pow(const Poly& a, std::size_t e, std::uint64_t p) {
  Poly r{1};
  for (std::size_t i = 0; i < e; ++i) r = mul(r, a, p);
  return r;
}

/// {quotient, remainder}; divisor must have an invertible leading term.
inline std::pair<Poly, Poly> divmod(Poly num, const Poly& den,
                                    std::uint64_t p) {
  Poly d = trim(den);
  if (d.empty()) throw std::invalid_argument("modpoly::divmod: zero divisor");
  num = trim(std::move(num));
  if (num.size() < d.size()) return {{}, num};
  const std::uint64_t inv = invmod(d.back(), p);
  const std::size_t dd = d.size() - 1;
  Poly quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    std::uint64_t c = mulmod(num[i], inv, p);
    quot[i - dd] = c;
    if (c != 0) {
      for (std::size_t j = 0; j <= dd; ++j) {
        num[i - dd + j] = submod(num[i - dd + j], mulmod(c, d[j], p), p);
      }
    }
  }
  return {trim(std::move(quot)), trim(std::move(num))};
}

inline Poly reduce(const IntPolynomial& poly, std::uint64_t p) {
  Poly out(poly.coefficients().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    Int c = poly.coefficients()[i] % Int(p);
    if (c < 0) c += p;
    out[i] = c.convert_to<std::uint64_t>();
  }
  return trim(std::move(out));
}

}  // namespace modpoly
}  // namespace noncomm
