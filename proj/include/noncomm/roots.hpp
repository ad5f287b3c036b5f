#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "noncomm/int_types.hpp"
#include "noncomm/poly.hpp"

namespace noncomm {

/// One eigenvalue in exact or numeric form. Surds are stored as
/// (a + b*sqrt(d)) / 2 with integer a, b and squarefree d > 1; all the
/// closed-form spectra here reduce to integer a, b after halving, and the
/// renderer folds the /2 away whenever a and b are both even.
struct ExactRoot {
  enum class Kind { integer, surd, numeric };

  Kind kind = Kind::integer;
  Int int_value = 0;
  Int surd_a = 0, surd_b = 0, surd_d = 0;
  double numeric_value = 0;
  double error_bound = 0;

  static ExactRoot integer(Int v) {
    ExactRoot r;
    r.kind = Kind::integer;
    r.numeric_value = to_double(v);
    r.int_value = std::move(v);
    return r;
  }
  static ExactRoot surd(Int a, Int b, Int d) {
    ExactRoot r;
    r.kind = Kind::surd;
    r.surd_a = std::move(a);
    r.surd_b = std::move(b);
    r.surd_d = std::move(d);
    r.numeric_value =
        (to_double(r.surd_a) + to_double(r.surd_b) * std::sqrt(to_double(r.surd_d))) / 2;
    return r;
  }
  static ExactRoot numeric(double v, double bound) {
    ExactRoot r;
    r.kind = Kind::numeric;
    r.numeric_value = v;
    r.error_bound = bound;
    return r;
  }

  bool is_exact() const { return kind != Kind::numeric; }

  double value() const { return numeric_value; }

  /// Exact equality for exact kinds; numeric roots compare by value.
  friend bool operator==(const ExactRoot& x, const ExactRoot& y) {
    if (x.kind != y.kind) return false;
    switch (x.kind) {
      case Kind::integer:
        return x.int_value == y.int_value;
      case Kind::surd:
        return x.surd_a == y.surd_a && x.surd_b == y.surd_b &&
               x.surd_d == y.surd_d;
      case Kind::numeric:
        return x.numeric_value == y.numeric_value;
    }
    return false;
  }

  std::string to_string() const {
    std::ostringstream os;
    switch (kind) {
      case Kind::integer:
        os << int_value;
        break;
      case Kind::surd: {
        Int a = surd_a, b = surd_b;
        const bool halved = a % 2 != 0 || b % 2 != 0;
        if (!halved) {
          a /= 2;
          b /= 2;
        }
        if (halved) os << "(";
        if (a != 0) os << a << (b > 0 ? "+" : "-");
        else if (b < 0) os << "-";
        Int babs = abs(b);
        if (babs != 1) os << babs << "*";
        os << "sqrt(" << surd_d << ")";
        if (halved) os << ")/2";
        break;
      }
      case Kind::numeric: {
        os.precision(12);
        os << numeric_value;
        break;
      }
    }
    return os.str();
  }
};

/// Exact roots of x^2 + a1 x + a0 over the integers. A perfect-square
/// discriminant yields two integer roots (monic integer quadratics have no
/// non-integer rational roots); otherwise conjugate surds.
inline std::pair<ExactRoot, ExactRoot> solve_quadratic(const Int& a1,
                                                       const Int& a0) {
  const Int disc = a1 * a1 - 4 * a0;
  if (disc < 0) {
    throw std::domain_error("solve_quadratic: complex roots (adjacency "
                            "spectra are real)");
  }
  Int s;
  if (is_perfect_square(disc, &s)) {
    const Int r1 = (-a1 + s) / 2, r2 = (-a1 - s) / 2;
    if (r1 * 2 != -a1 + s) {
      throw std::logic_error("solve_quadratic: parity violation");
    }
    return {ExactRoot::integer(r1), ExactRoot::integer(r2)};
  }
  auto [sq, f] = split_square(disc);
  return {ExactRoot::surd(-a1, sq, f), ExactRoot::surd(-a1, -sq, f)};
}

/// Substitutes (a + b*sqrt(d))/2 into x^2 + a1 x + a0 exactly; returns the
/// rational and sqrt(d) components (both must vanish for a root).
inline std::pair<Rat, Rat> quadratic_residual(const Int& a1, const Int& a0,
                                              const ExactRoot& root) {
  if (root.kind != ExactRoot::Kind::surd) {
    throw std::invalid_argument("quadratic_residual: surd input only");
  }
  const Int &a = root.surd_a, &b = root.surd_b, &d = root.surd_d;
  const Rat rational = Rat(a * a + b * b * d, 4) + Rat(a1 * a, 2) + Rat(a0);
  const Rat surd_part = Rat(a * b, 2) + Rat(a1 * b, 2);
  return {rational, surd_part};
}

/// Monic cubic x^3 + b x^2 + c x + d with the standard depressed form
/// y = x + b/3: alpha = c - b^2/3, beta = 2b^3/27 - bc/3 + d, and
/// discriminant Delta = (alpha/3)^3 + (beta/2)^2.
struct CubicCoefficients {
  Int b, c, d;

  Rat alpha() const { return Rat(c) - Rat(b * b, 3); }
  Rat beta() const {
    return Rat(2 * b * b * b, 27) - Rat(b * c, 3) + Rat(d);
  }
  Rat discriminant() const {
    const Rat a3 = alpha() / 3, b2 = beta() / 2;
    return a3 * a3 * a3 + b2 * b2;
  }
  IntPolynomial as_poly() const { return IntPolynomial({d, c, b, Int(1)}); }
};

/// Three real roots of a cubic with Delta < 0 (casus irreducibilis), via
/// the trigonometric method plus one Newton polish per root. Sorted
/// descending. Verified against |f(root)| < 1e-6 * max(1, |f|_1) and the
/// three Vieta identities; Delta >= 0 is rejected, which in the GL pipeline
/// signals a falsified three-real-roots claim rather than a numeric issue.
inline std::array<double, 3> solve_cubic(const CubicCoefficients& cubic) {
  if (cubic.discriminant() >= 0) {
    throw std::domain_error(
        "solve_cubic: discriminant >= 0, no three distinct real roots");
  }
  const double alpha = to_double(cubic.alpha());
  const double beta = to_double(cubic.beta());
  const double shift = to_double(Rat(cubic.b, 3));
  // y_k = 2 sqrt(-alpha/3) cos(phi/3 - 2 pi k / 3),
  // cos(phi) = 3 beta / (2 alpha) * sqrt(-3 / alpha)
  const double radius = 2 * std::sqrt(-alpha / 3);
  double cosphi = 3 * beta / (2 * alpha) * std::sqrt(-3 / alpha);
  cosphi = std::clamp(cosphi, -1.0, 1.0);
  const double phi = std::acos(cosphi);

  const IntPolynomial f = cubic.as_poly();
  const IntPolynomial fp = f.derivative();
  std::array<double, 3> roots{};
  for (int k = 0; k < 3; ++k) {
    double x = radius * std::cos((phi - 2 * M_PI * k) / 3) - shift;
    for (int it = 0; it < 3; ++it) {
      const double fv = f.eval_double(x);
      const double dv = fp.eval_double(x);
      if (dv == 0) break;
      x -= fv / dv;
    }
    roots[static_cast<std::size_t>(k)] = x;
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());

  double norm1 = 0;
  for (const auto& c : f.coefficients()) norm1 += std::abs(to_double(c));
  const double tol = 1e-6 * std::max(1.0, norm1);
  for (double r : roots) {
    if (std::abs(f.eval_double(r)) >= tol) {
      throw std::runtime_error("solve_cubic: residual check failed");
    }
  }
  const double vieta_tol = 1e-6 * std::max(1.0, norm1);
  const double s1 = roots[0] + roots[1] + roots[2];
  const double s2 =
      roots[0] * roots[1] + roots[1] * roots[2] + roots[0] * roots[2];
  const double s3 = roots[0] * roots[1] * roots[2];
  if (std::abs(s1 + to_double(cubic.b)) > vieta_tol ||
      std::abs(s2 - to_double(cubic.c)) > vieta_tol ||
      std::abs(s3 + to_double(cubic.d)) > vieta_tol) {
    throw std::runtime_error("solve_cubic: Vieta check failed");
  }
  return roots;
}

}  // namespace noncomm
