#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace noncomm {

/// GF(p^k) with full add/mul tables; supports all prime q and the prime
/// powers p^k <= 32 (built-in irreducible polynomials). Elements are encoded
/// 0..q-1 as base-p digit strings of their coordinate vectors.
class GaloisField {
 public:
  std::uint32_t p = 0;  // characteristic
  std::uint32_t k = 0;  // extension degree
  std::uint32_t q = 0;  // p^k
  std::vector<std::uint32_t> modulus;  // irreducible, coeffs low->high

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return add_[a * q + b];
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return mul_[a * q + b];
  }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return add(a, neg(b));
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("GaloisField: inverse of zero");
    return inv_[a];
  }

  /// Builds GF(q). For k > 1 an irreducible monic degree-k polynomial over
  /// GF(p) may be supplied (coeffs low->high, length k+1, leading 1);
  /// otherwise the built-in table is used. A reducible supplied polynomial
  /// is rejected.
  static GaloisField make(std::uint32_t q,
                          const std::vector<std::uint32_t>& irreducible = {});

 private:
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

  static std::vector<std::uint32_t> builtin_irreducible(std::uint32_t q) {
    static const std::map<std::uint32_t, std::vector<std::uint32_t>> table = {
        {4, {1, 1, 1}},           // x^2+x+1 over GF(2)
        {8, {1, 1, 0, 1}},        // x^3+x+1
        {9, {1, 0, 1}},           // x^2+1 over GF(3)
        {16, {1, 1, 0, 0, 1}},    // x^4+x+1
        {25, {2, 1, 1}},          // x^2+x+2 over GF(5)
        {27, {1, 2, 0, 1}},       // x^3+2x+1
        {32, {1, 0, 1, 0, 0, 1}}  // x^5+x^2+1
    };
    auto it = table.find(q);
    if (it == table.end()) {
      throw std::invalid_argument(
          "GaloisField: no built-in irreducible for q=" + std::to_string(q) +
          "; supply one (supported built-ins: 4, 8, 9, 16, 25, 27, 32)");
    }
    return it->second;
  }
};

namespace detail {

// polynomial helpers over GF(p), dense low->high
inline std::vector<std::uint32_t> polymod_p(std::vector<std::uint32_t> a,
                                            const std::vector<std::uint32_t>& m,
                                            std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  while (!a.empty() && a.back() == 0) a.pop_back();
  while (a.size() > dm) {
    const std::uint32_t c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    if (c != 0) {
      for (std::size_t j = 0; j <= dm; ++j) {
        a[shift + j] = (a[shift + j] + c * (p - m[j] % p)) % p;
      }
    }
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

inline std::vector<std::uint32_t> polymul_p(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
    std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
  }
  return c;
}

inline bool is_irreducible_mod_p(const std::vector<std::uint32_t>& f,
                                 std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg < 1) return false;
  // no roots rules out all factors for deg <= 3
  for (std::uint32_t r = 0; r < p; ++r) {
    std::uint64_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (v * r + f[i]) % p;
    if (v == 0) return false;
  }
  if (deg <= 3) return true;
  // deg 4 or 5: also exclude irreducible quadratic factors
  for (std::uint32_t c1 = 0; c1 < p; ++c1) {
    for (std::uint32_t c0 = 0; c0 < p; ++c0) {
      std::vector<std::uint32_t> quad = {c0, c1, 1};
      bool quad_has_root = false;
      for (std::uint32_t r = 0; r < p && !quad_has_root; ++r) {
        quad_has_root = (r * r + c1 * r + c0) % p == 0;
      }
      if (quad_has_root) continue;
      if (polymod_p(f, quad, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

inline GaloisField GaloisField::make(
    std::uint32_t q, const std::vector<std::uint32_t>& irreducible) {
  if (q < 2) throw std::invalid_argument("GaloisField: q must be >= 2");
  std::uint32_t p = 0, k = 0;
  for (std::uint32_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      std::uint32_t rest = q;
      k = 0;
      while (rest % p == 0) {
        rest /= p;
        ++k;
      }
      if (rest != 1) {
        throw std::invalid_argument("GaloisField: q=" + std::to_string(q) +
                                    " is not a prime power");
      }
      break;
    }
  }

  GaloisField f;
  f.p = p;
  f.k = k;
  f.q = q;
  if (k == 1) {
    f.modulus = {0, 1};  // unused
  } else {
    std::vector<std::uint32_t> m =
        irreducible.empty() ? builtin_irreducible(q) : irreducible;
    if (m.size() != k + 1 || m.back() % p != 1) {
      throw std::invalid_argument(
          "GaloisField: irreducible must be monic of degree k");
    }
    for (auto& c : m) c %= p;
    if (!detail::is_irreducible_mod_p(m, p)) {
      throw std::invalid_argument("GaloisField: supplied polynomial is "
                                  "reducible over GF(p)");
    }
    f.modulus = m;
  }

  auto to_coords = [&](std::uint32_t x) {
    std::vector<std::uint32_t> c(k);
    for (std::uint32_t i = 0; i < k; ++i) {
      c[i] = x % p;
      x /= p;
    }
    return c;
  };
  auto from_coords = [&](const std::vector<std::uint32_t>& c) {
    std::uint32_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + (i < c.size() ? c[i] : 0);
    return v;
  };

  f.add_.resize(static_cast<std::size_t>(q) * q);
  f.mul_.resize(static_cast<std::size_t>(q) * q);
  f.neg_.resize(q);
  f.inv_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      if (k == 1) {
        f.add_[a * q + b] = (a + b) % p;
        f.mul_[a * q + b] =
            static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
      } else {
        auto ca = to_coords(a), cb = to_coords(b);
        std::vector<std::uint32_t> s(k);
        for (std::uint32_t i = 0; i < k; ++i) s[i] = (ca[i] + cb[i]) % p;
        f.add_[a * q + b] = from_coords(s);
        auto prod = detail::polymod_p(detail::polymul_p(ca, cb, p),
                                      f.modulus, p);
        prod.resize(k, 0);
        f.mul_[a * q + b] = from_coords(prod);
      }
    }
  }
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      if (f.add_[a * q + b] == 0) f.neg_[a] = b;
      if (a != 0 && f.mul_[a * q + b] == 1) f.inv_[a] = b;
    }
  }
  return f;
}

}  // namespace noncomm
