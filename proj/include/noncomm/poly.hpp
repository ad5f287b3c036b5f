#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "noncomm/int_types.hpp"

namespace noncomm {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients. Index = degree; always normalized (no leading zeros,
/// the zero polynomial has an empty coefficient vector).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }
  IntPolynomial(std::initializer_list<Int> coeffs)
      : c_(coeffs.begin(), coeffs.end()) {
    normalize();
  }

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial one() { return IntPolynomial({Int(1)}); }
  static IntPolynomial monomial(std::size_t k, Int coeff = 1) {
    std::vector<Int> c(k + 1);
    c[k] = std::move(coeff);
    return IntPolynomial(std::move(c));
  }
  /// x - r
  static IntPolynomial linear_root(const Int& r) {
    return IntPolynomial({-r, Int(1)});
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Int>& coefficients() const { return c_; }
  const Int& leading() const { return c_.back(); }
  Int coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Int(0);
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) {
    return !(a == b);
  }

  friend IntPolynomial operator+(const IntPolynomial& a,
                                 const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i < a.c_.size()) c[i] += a.c_[i];
      if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator-(const IntPolynomial& a,
                                 const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i < a.c_.size()) c[i] += a.c_[i];
      if (i < b.c_.size()) c[i] -= b.c_[i];
    }
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator*(const IntPolynomial& a,
                                 const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        c[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator*(const Int& s, const IntPolynomial& a) {
    std::vector<Int> c = a.c_;
    for (auto& v : c) v *= s;
    return IntPolynomial(std::move(c));
  }
  IntPolynomial operator-() const { return Int(-1) * *this; }

  IntPolynomial pow(std::size_t e) const {
    IntPolynomial r = one();
    for (std::size_t i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  Int eval(const Int& x) const {
    Int r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }
  Rat eval(const Rat& x) const {
    Rat r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + Rat(c_[i]);
    return r;
  }
  double eval_double(double x) const {
    double r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + to_double(c_[i]);
    return r;
  }

  IntPolynomial derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<Int> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Int(i) * c_[i];
    return IntPolynomial(std::move(c));
  }

  /// Euclidean division; requires non-zero divisor with leading coefficient
  /// that divides exactly along the way only if the caller expects an exact
  /// quotient. Returns {quotient, remainder} over the rationals cleared:
  /// here the divisor is used as-is; division of a coefficient that is not
  /// exact throws (all uses in this project are exact or monic divisors).
  static std::pair<IntPolynomial, IntPolynomial> divmod(
      const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("divmod: zero divisor");
    std::vector<Int> rem = num.c_;
    const long dd = den.degree();
    const Int& lead = den.c_.back();
    if (num.degree() < dd) return {zero(), num};
    std::vector<Int> quot(num.degree() - dd + 1);
    for (long i = num.degree(); i >= dd; --i) {
      Int& top = rem[static_cast<std::size_t>(i)];
      if (top == 0) continue;
      if (top % lead != 0) {
        throw std::domain_error("divmod: non-exact coefficient division");
      }
      Int q = top / lead;
      quot[static_cast<std::size_t>(i - dd)] = q;
      for (long j = 0; j <= dd; ++j) {
        rem[static_cast<std::size_t>(i - dd + j)] -=
            q * den.c_[static_cast<std::size_t>(j)];
      }
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
  }

  /// Exact text form "c_k*x^k + ... + c_0", highest degree first.
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Int& c = c_[i];
      if (c == 0) continue;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      Int a = abs(c);
      if (i == 0) {
        os << a;
      } else {
        if (a != 1) os << a << "*";
        os << "x";
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

/// Raised when deflation is asked to remove a factor that does not divide;
/// carries the non-zero remainder. In the verification pipeline this is a
/// theorem-falsification signal, not a programming error.
class factor_mismatch_error : public std::runtime_error {
 public:
  factor_mismatch_error(std::string what, IntPolynomial remainder)
      : std::runtime_error(std::move(what)), remainder_(std::move(remainder)) {}
  const IntPolynomial& remainder() const { return remainder_; }

 private:
  IntPolynomial remainder_;
};

/// Exact division of `poly` by `factor`^`multiplicity`. Throws
/// factor_mismatch_error if any step leaves a non-zero remainder.
inline IntPolynomial deflate(const IntPolynomial& poly,
                             const IntPolynomial& factor,
                             std::size_t multiplicity) {
  if (factor.is_zero() || factor.degree() == 0) {
    throw std::invalid_argument("deflate: factor must have degree >= 1");
  }
  IntPolynomial q = poly;
  for (std::size_t i = 0; i < multiplicity; ++i) {
    auto [quot, rem] = IntPolynomial::divmod(q, factor);
    if (!rem.is_zero()) {
      std::ostringstream msg;
      msg << "factor mismatch: (" << factor.to_string() << ")^"
          << (i + 1) << " does not divide; remainder " << rem.to_string();
      throw factor_mismatch_error(msg.str(), rem);
    }
    q = std::move(quot);
  }
  return q;
}

/// Number of times `factor` divides `poly` exactly.
inline std::size_t exact_multiplicity(IntPolynomial poly,
                                      const IntPolynomial& factor) {
  std::size_t m = 0;
  while (poly.degree() >= factor.degree()) {
    std::pair<IntPolynomial, IntPolynomial> d;
    try {
      d = IntPolynomial::divmod(poly, factor);
    } catch (const std::domain_error&) {
      break;
    }
    if (!d.second.is_zero()) break;
    poly = std::move(d.first);
    ++m;
  }
  return m;
}

/// Decides whether two polynomial evaluators of degree <= degree_bound agree
/// as polynomials, by exact agreement at degree_bound+1 integer points.
/// Sample points start at 1 so right-hand sides with a pole at x = 0 are
/// usable.
template <typename F, typename G>
bool poly_identity_check(F&& lhs, G&& rhs, std::size_t degree_bound) {
  for (std::size_t i = 1; i <= degree_bound + 1; ++i) {
    if (Int(lhs(Int(i))) != Int(rhs(Int(i)))) return false;
  }
  return true;
}

/// Product of polynomial powers, kept factored. Used where the paper states
/// characteristic polynomials in factored form.
class FactoredPoly {
 public:
  struct Factor {
    IntPolynomial base;
    std::size_t power = 1;
  };

  FactoredPoly() = default;
  explicit FactoredPoly(std::vector<Factor> fs) : factors_(std::move(fs)) {}

  void push(IntPolynomial base, std::size_t power) {
    if (power > 0) factors_.push_back({std::move(base), power});
  }
  const std::vector<Factor>& factors() const { return factors_; }

  long degree() const {
    long d = 0;
    for (const auto& f : factors_) {
      d += f.base.degree() * static_cast<long>(f.power);
    }
    return d;
  }

  IntPolynomial expand() const {
    IntPolynomial r = IntPolynomial::one();
    for (const auto& f : factors_) r = r * f.base.pow(f.power);
    return r;
  }

  Int eval(const Int& x) const {
    Int r = 1;
    for (const auto& f : factors_) {
      Int b = f.base.eval(x);
      for (std::size_t i = 0; i < f.power; ++i) r *= b;
    }
    return r;
  }

  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) os << " * ";
      os << "(" << factors_[i].base.to_string() << ")";
      if (factors_[i].power != 1) os << "^" << factors_[i].power;
    }
    return os.str();
  }

 private:
  std::vector<Factor> factors_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
  return os << p.to_string();
}

}  // namespace noncomm
