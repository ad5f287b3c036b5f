#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "noncomm/graph.hpp"
#include "noncomm/poly.hpp"
#include "noncomm/roots.hpp"
#include "noncomm/spectrum.hpp"

namespace noncomm {

/// P(K_{n_1..n_p}, x) with denominators cleared:
///   x^(n-p) * [ prod_j (x+n_j) - sum_i n_i prod_{j!=i} (x+n_j) ].
/// Monic of degree n.
inline IntPolynomial multipartite_charpoly(const PartitionSizes& sizes) {
  if (sizes.part_count() == 0) {
    throw std::invalid_argument("multipartite_charpoly: need p >= 1");
  }
  for (auto s : sizes.sizes) {
    if (s <= 0) throw std::invalid_argument("multipartite_charpoly: sizes "
                                            "must be positive");
  }
  const std::size_t p = sizes.part_count();
  const std::int64_t n = sizes.total();
  IntPolynomial full = IntPolynomial::one();
  for (auto s : sizes.sizes) {
    full = full * IntPolynomial({Int(s), Int(1)});
  }
  IntPolynomial bracket = full;
  for (std::size_t i = 0; i < p; ++i) {
    IntPolynomial without = IntPolynomial::one();
    for (std::size_t j = 0; j < p; ++j) {
      if (j != i) without = without * IntPolynomial({Int(sizes.sizes[j]),
                                                     Int(1)});
    }
    bracket = bracket - Int(sizes.sizes[i]) * without;
  }
  return IntPolynomial::monomial(static_cast<std::size_t>(n) - p) * bracket;
}

/// The unique positive root of sum_i n_i / (lambda + n_i) = 1, to 1e-12
/// relative accuracy (bisection start, Newton finish). p = 1 gives 0, the
/// spectral radius of an edgeless graph.
inline double multipartite_spectral_radius(const PartitionSizes& sizes) {
  const std::size_t p = sizes.part_count();
  if (p == 0) throw std::invalid_argument("multipartite_spectral_radius: "
                                          "need p >= 1");
  if (p == 1) return 0.0;
  auto f = [&](double lam) {
    double s = 0;
    for (auto ni : sizes.sizes) {
      s += static_cast<double>(ni) / (lam + static_cast<double>(ni));
    }
    return s - 1.0;
  };
  auto fprime = [&](double lam) {
    double s = 0;
    for (auto ni : sizes.sizes) {
      const double d = lam + static_cast<double>(ni);
      s -= static_cast<double>(ni) / (d * d);
    }
    return s;
  };
  // f decreases from p-1 > 0 at 0; a root exists below n = sum n_i
  double lo = 0, hi = static_cast<double>(sizes.total());
  while (f(hi) > 0) hi *= 2;
  for (int it = 0; it < 80; ++it) {
    const double mid = (lo + hi) / 2;
    (f(mid) > 0 ? lo : hi) = mid;
  }
  double x = (lo + hi) / 2;
  for (int it = 0; it < 6; ++it) {
    x -= f(x) / fprime(x);
  }
  return x;
}

/// E(K_{n_1..n_p}) = 2 * spectral radius. The symbolic form is attached
/// when it exists in closed form: p = 2 gives 2*sqrt(n1*n2), and an
/// integral radius (e.g. all parts equal) gives an integer.
inline EnergyValue multipartite_energy(const PartitionSizes& sizes) {
  if (sizes.part_count() < 2) {
    throw std::invalid_argument("multipartite_energy: need p >= 2");
  }
  EnergyValue e;
  const double radius = multipartite_spectral_radius(sizes);
  e.numeric = 2 * radius;
  e.bound = 1e-12 * std::max(1.0, e.numeric);
  // integral radius? verify the candidate exactly against the root equation
  const Int cand = Int(std::llround(radius));
  Rat check = 0;
  for (auto ni : sizes.sizes) check += Rat(Int(ni), cand + Int(ni));
  if (check == 1) {
    e.rational = Rat(2 * cand);
    e.refresh_numeric();
    return e;
  }
  if (sizes.part_count() == 2) {
    auto [s, d] = split_square(Int(sizes.sizes[0]) * Int(sizes.sizes[1]));
    if (d == 1) {
      e.rational = Rat(2 * s);
    } else {
      e.surds[d] = Rat(2 * s);
    }
    e.refresh_numeric();
    return e;
  }
  e.exact = false;
  return e;
}

namespace detail {

inline void spectrum_push(Spectrum& s, ExactRoot root, std::size_t mult) {
  if (mult == 0) return;
  for (auto& [r, m] : s.entries) {
    if (r == root) {
      m += mult;
      return;
    }
  }
  s.entries.emplace_back(std::move(root), mult);
}

}  // namespace detail

/// Closed-form spec(Gamma(D_2n)). Even n: {-2^(n/2-1), 0^(3n/2-3),
/// ((n-2) +- sqrt(5n^2-12n+4))/2}; odd n: {-1^(n-1), 0^(n-2),
/// ((n-1) +- sqrt(5n^2-6n+1))/2}. The n = 4 case the paper lists
/// separately coincides with the even formula: the quadratic factors as
/// (x-4)(x+2) and its -2 merges into the -2 eigenvalue class.
inline Spectrum dihedral_spectrum(int n) {
  if (n < 3) throw std::invalid_argument("dihedral_spectrum: need n >= 3");
  Spectrum s;
  const bool even = n % 2 == 0;
  const Int a1 = even ? Int(-(n - 2)) : Int(-(n - 1));
  const Int a0 = even ? Int(-n * (n - 2)) : Int(-n * (n - 1));
  auto [r1, r2] = solve_quadratic(a1, a0);
  detail::spectrum_push(s, r1, 1);
  detail::spectrum_push(s, r2, 1);
  if (even) {
    detail::spectrum_push(s, ExactRoot::integer(-2),
                          static_cast<std::size_t>(n / 2 - 1));
    detail::spectrum_push(s, ExactRoot::integer(0),
                          static_cast<std::size_t>(3 * n / 2 - 3));
  } else {
    detail::spectrum_push(s, ExactRoot::integer(-1),
                          static_cast<std::size_t>(n - 1));
    detail::spectrum_push(s, ExactRoot::integer(0),
                          static_cast<std::size_t>(n - 2));
  }
  s.sort_entries();
  return s;
}

/// E(Gamma(D_2n)): (n-2)+sqrt(5n^2-12n+4) for even n,
/// (n-1)+sqrt(5n^2-6n+1) for odd n.
inline EnergyValue dihedral_energy(int n) {
  if (n < 3) throw std::invalid_argument("dihedral_energy: need n >= 3");
  EnergyValue e;
  const bool even = n % 2 == 0;
  const Int base = even ? Int(n - 2) : Int(n - 1);
  const Int disc = even ? Int(5) * n * n - 12 * n + 4
                        : Int(5) * n * n - 6 * n + 1;
  e.rational = Rat(base);
  auto [sq, d] = split_square(disc);
  if (d == 1) {
    e.rational += Rat(sq);
  } else {
    e.surds[d] += Rat(sq);
  }
  e.refresh_numeric();
  e.bound = 1e-14 * std::max(1.0, e.numeric);
  return e;
}

/// spec(L(Gamma(D_2n))). Even n: {(2n-2)^(n/2), (2n-4)^(n/2), n^(n-3),
/// 0^1}; odd n: {(2n-1)^n, n^(n-2), 0^1}. Duplicate values merge (n = 4:
/// the n^(n-3) class equals 2n-4).
inline Spectrum dihedral_laplacian_spectrum(int n) {
  if (n < 3) {
    throw std::invalid_argument("dihedral_laplacian_spectrum: need n >= 3");
  }
  Spectrum s;
  if (n % 2 == 0) {
    detail::spectrum_push(s, ExactRoot::integer(2 * n - 2),
                          static_cast<std::size_t>(n / 2));
    detail::spectrum_push(s, ExactRoot::integer(2 * n - 4),
                          static_cast<std::size_t>(n / 2));
    detail::spectrum_push(s, ExactRoot::integer(n),
                          static_cast<std::size_t>(n - 3));
    detail::spectrum_push(s, ExactRoot::integer(0), 1);
  } else {
    detail::spectrum_push(s, ExactRoot::integer(2 * n - 1),
                          static_cast<std::size_t>(n));
    detail::spectrum_push(s, ExactRoot::integer(n),
                          static_cast<std::size_t>(n - 2));
    detail::spectrum_push(s, ExactRoot::integer(0), 1);
  }
  s.sort_entries();
  return s;
}

/// The Laplacian-energy corollary as printed: 2n(n^2-4n+6)/(2n-2) for even
/// n and 3n(n-1) for odd n.
inline Rat dihedral_laplacian_energy_paper(int n) {
  if (n < 3) throw std::invalid_argument("need n >= 3");
  if (n % 2 == 0) {
    return Rat(Int(2 * n) * (Int(n) * n - 4 * n + 6), Int(2 * n - 2));
  }
  return Rat(Int(3) * n * (n - 1));
}

/// LE computed from the definition sum |mu_i - 2m/N| over the closed-form
/// Laplacian spectrum. Agrees with the corollary for even n; for odd n the
/// two differ and both values are reported upstream, never reconciled.
inline Rat dihedral_laplacian_energy_definition(int n) {
  const Spectrum s = dihedral_laplacian_spectrum(n);
  const std::size_t verts = s.total_multiplicity();
  Rat trace = 0;  // = 2m
  for (const auto& [root, mult] : s.entries) {
    trace += Rat(root.int_value * Int(mult));
  }
  const Rat mean = trace / Int(verts);
  Rat total = 0;
  for (const auto& [root, mult] : s.entries) {
    Rat diff = Rat(root.int_value) - mean;
    if (diff < 0) diff = -diff;
    total += diff * Int(mult);
  }
  return total;
}

/// Everything the GL(2,q) theorem pins down, generic in q:
/// t = q^2+q+1 parts, the cubic's b, c, d, the three linear factor roots
/// with their exponents, and the zero multiplicity n - t.
struct GLFormulaBundle {
  Int q;
  Int t;
  Int vertex_count;
  CubicCoefficients cubic;
  struct LinearFactor {
    Int root;      // the factor is (x - root), root < 0 here
    Int exponent;
  };
  LinearFactor linear[3];
  Int zero_multiplicity;

  static GLFormulaBundle make(std::int64_t qi) {
    if (qi < 3) throw std::invalid_argument("GLFormulaBundle: need q >= 3");
    const Int q(qi);
    const Int q2 = q * q, q3 = q2 * q, q4 = q3 * q, q5 = q4 * q, q6 = q5 * q;
    GLFormulaBundle b;
    b.q = q;
    b.t = q2 + q + 1;
    b.vertex_count = (q2 - 1) * (q2 - q) - (q - 1);
    b.cubic.b = -q4 + q3 + 4 * q2 - 6 * q + 2;
    b.cubic.c = -2 * q6 + 6 * q5 - q4 - 13 * q3 + 15 * q2 - 5 * q;
    b.cubic.d = -(q - 1) * (q - 1) * (q - 1) * (q - 1) * q2 * (q - 2) *
                (q + 1);
    b.linear[0] = {-(q - 1) * (q - 1), q};
    b.linear[1] = {-q * (q - 1), (q * q - q - 2) / 2};
    b.linear[2] = {-(q - 1) * (q - 2), (q * q + q - 2) / 2};
    b.zero_multiplicity = b.vertex_count - b.t;
    return b;
  }

  /// q + (q^2-q-2)/2 + (q^2+q-2)/2 + (n-t) + 3 = n
  bool exponent_identity_holds() const {
    Int sum = zero_multiplicity + 3;
    for (const auto& lf : linear) sum += lf.exponent;
    return sum == vertex_count;
  }
};

/// The GL(2,q) characteristic polynomial in the theorem's factored form.
inline FactoredPoly gl2_charpoly(std::int64_t q) {
  const auto b = GLFormulaBundle::make(q);
  FactoredPoly f;
  f.push(IntPolynomial::monomial(1),
         b.zero_multiplicity.convert_to<std::size_t>());
  f.push(b.cubic.as_poly(), 1);
  for (const auto& lf : b.linear) {
    f.push(IntPolynomial({-lf.root, Int(1)}),
           lf.exponent.convert_to<std::size_t>());
  }
  return f;
}

/// E(Gamma(GL(2,q))): |g1|+|g2|+|g3| over the cubic's roots plus the exact
/// linear-factor contributions q(q-1)^2 + (q^2-q-2)/2 * q(q-1) +
/// (q^2+q-2)/2 * (q-1)(q-2). Propagates the Delta >= 0 error from the
/// cubic solver.
inline EnergyValue gl2_energy(std::int64_t q) {
  const auto b = GLFormulaBundle::make(q);
  const auto roots = solve_cubic(b.cubic);
  EnergyValue e;
  Int linear_part = 0;
  for (const auto& lf : b.linear) linear_part += lf.exponent * (-lf.root);
  e.exact = false;
  e.numeric = to_double(linear_part);
  for (double r : roots) e.numeric += std::abs(r);
  e.bound = 1e-9 * std::max(1.0, e.numeric);
  e.rational = Rat(linear_part);  // exact part, for reporting
  return e;
}

}  // namespace noncomm
