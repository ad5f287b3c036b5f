#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "noncomm/charpoly.hpp"
#include "noncomm/formulas.hpp"
#include "noncomm/graph.hpp"
#include "noncomm/group.hpp"
#include "noncomm/gl2.hpp"
#include "noncomm/modpoly.hpp"
#include "noncomm/spectrum.hpp"

namespace noncomm {

/// Outcome of checking one theorem instance against the brute-force oracle.
/// `discrepancy_documented` marks the known places where the paper's stated
/// value differs from its own definitions (the odd-n Laplacian energies);
/// those are reported, never reconciled silently.
struct VerificationReport {
  enum class Status { pass, fail, discrepancy_documented };

  std::string theorem_id;
  std::vector<std::pair<std::string, std::string>> parameters;
  Status status = Status::fail;
  std::string lhs_summary;
  std::string rhs_summary;
  std::string deviation;  // "0 (exact)" or a numeric bound
  std::vector<std::string> notes;

  void param(std::string key, std::string value) {
    parameters.emplace_back(std::move(key), std::move(value));
  }
  static std::string exact_deviation() { return "0 (exact)"; }
  bool passed(bool allow_documented) const {
    return status == Status::pass ||
           (allow_documented && status == Status::discrepancy_documented);
  }
  std::string status_string() const {
    switch (status) {
      case Status::pass:
        return "pass";
      case Status::fail:
        return "FAIL";
      case Status::discrepancy_documented:
        return "discrepancy-documented";
    }
    return "?";
  }
};

namespace detail {

inline std::string format_double(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

inline IntPolynomial nonzero_part(const IntPolynomial& p,
                                  std::size_t* zero_mult = nullptr) {
  IntPolynomial rest = p;
  std::size_t zeros = strip_zero_roots(rest);
  if (zero_mult) *zero_mult = zeros;
  return rest;
}

}  // namespace detail

/// Checks E(Gamma(G x H)) = |H| * E(Gamma(G)) for abelian H at the spectrum
/// level: the nonzero part Q of the product's charpoly must satisfy
/// Q(x) = |H|^deg(R) R(x/|H|) coefficientwise against the nonzero part R of
/// G's charpoly (exact), the remaining eigenvalues are all zero by degree
/// count, and the energy ratio is |H| within tol.
inline VerificationReport product_scaling_check(const FiniteGroup& g,
                                                const FiniteGroup& h,
                                                double tol = 1e-8) {
  if (!h.is_abelian()) {
    throw std::invalid_argument("product_scaling_check: H must be abelian");
  }
  VerificationReport rep;
  rep.theorem_id = "product-scaling";
  rep.param("G", g.label());
  rep.param("H", h.label());
  const Int scale(h.order());

  const Graph gg = noncommuting_graph(g);
  const Graph gp = noncommuting_graph(direct_product(g, h));
  const IntPolynomial pg = charpoly(gg.adjacency_matrix());
  const IntPolynomial pp = charpoly(gp.adjacency_matrix());

  std::size_t zeros_g = 0, zeros_p = 0;
  const IntPolynomial r = detail::nonzero_part(pg, &zeros_g);
  const IntPolynomial q = detail::nonzero_part(pp, &zeros_p);

  bool scaled_ok = q.degree() == r.degree();
  if (scaled_ok) {
    const std::size_t deg = static_cast<std::size_t>(r.degree());
    Int power = 1;  // scale^(deg - j), built from the top down
    for (std::size_t j = deg + 1; j-- > 0;) {
      if (q.coeff(j) != r.coeff(j) * power) {
        scaled_ok = false;
        break;
      }
      power *= scale;
    }
  }
  const bool zeros_ok =
      zeros_p == gp.vertex_count() - static_cast<std::size_t>(q.degree());

  const EnergyValue eg = energy(gg);
  const EnergyValue ep = energy(gp);
  const double ratio = eg.numeric == 0 ? 0 : ep.numeric / eg.numeric;
  const double ratio_dev = std::abs(ratio - to_double(scale));
  const bool energy_ok = ratio_dev <= tol;

  rep.lhs_summary = "nonzero spec of Gamma(GxH), E = " +
                    detail::format_double(ep.numeric);
  rep.rhs_summary = "|H| * nonzero spec of Gamma(G), |H|*E = " +
                    detail::format_double(to_double(scale) * eg.numeric);
  rep.status = scaled_ok && zeros_ok && energy_ok
                   ? VerificationReport::Status::pass
                   : VerificationReport::Status::fail;
  rep.deviation = scaled_ok && zeros_ok
                      ? "poly exact; energy ratio off by " +
                            detail::format_double(ratio_dev)
                      : "nonzero-spectrum scaling violated";
  return rep;
}

/// Gamma(D8 x D8): brute-force charpoly against the stated factorization
/// x^45 (x-8)(x+4)^4 (x^2+8x-32)^4 (x^2-40x-128) (monic normalization of
/// the paper's (-x)^45(-x+8)... form) and energy 8(3+sqrt33+4sqrt3).
inline VerificationReport d8xd8_check(double tol = 1e-8) {
  VerificationReport rep;
  rep.theorem_id = "d8xd8";
  const FiniteGroup d8 = make_dihedral(4);
  const Graph graph = noncommuting_graph(direct_product(d8, d8));
  const IntPolynomial brute = charpoly(graph.adjacency_matrix());

  FactoredPoly stated;
  stated.push(IntPolynomial::monomial(1), 45);
  stated.push(IntPolynomial({Int(-8), Int(1)}), 1);
  stated.push(IntPolynomial({Int(4), Int(1)}), 4);
  stated.push(IntPolynomial({Int(-32), Int(8), Int(1)}), 4);
  stated.push(IntPolynomial({Int(-128), Int(-40), Int(1)}), 1);

  const bool poly_ok = brute == stated.expand();

  EnergyValue expected;  // 8(3 + sqrt 33 + 4 sqrt 3) = 24 + 8 sqrt33 + 32 sqrt3
  expected.rational = 24;
  expected.surds[Int(33)] = 8;
  expected.surds[Int(3)] = 32;
  expected.refresh_numeric();
  const EnergyValue actual = energy(graph);
  const double dev = std::abs(actual.numeric - expected.numeric);

  rep.lhs_summary = "charpoly of the 60-vertex graph, E = " +
                    detail::format_double(actual.numeric);
  rep.rhs_summary = stated.to_string() + ", E = 8(3+sqrt(33)+4*sqrt(3))";
  rep.status = poly_ok && dev <= tol ? VerificationReport::Status::pass
                                     : VerificationReport::Status::fail;
  rep.deviation = poly_ok ? "poly exact; energy off by " +
                                detail::format_double(dev)
                          : "factored form mismatch";
  if (!poly_ok) {
    rep.notes.push_back("brute charpoly: " + brute.to_string());
  }
  return rep;
}

/// Gamma(D_2n x D_2n) for even n > 4: the charpoly must be exactly
/// divisible by x^(15n^2/4 - 2n - 7), (x+4)^(n^2/4 - n + 1) and the cubic
/// (x^3 + (2n+4)x^2 - 16n(n-2))^(n-2); the degree-8 quotient f(x) is
/// extracted by deflation and reported. n = 6 runs the exact big-integer
/// path and is compared against the worked example's f; larger n runs mod
/// `primes_count` random 60-bit primes with a CRT lift of f.
inline VerificationReport d2n_squared_check(int n, std::size_t primes_count = 3,
                                            std::size_t cap = 10000,
                                            std::uint64_t prime_seed = 0x6e6f6e636f6d6dull) {
  if (n <= 4 || n % 2 != 0) {
    throw std::invalid_argument("d2n_squared_check: need even n > 4");
  }
  VerificationReport rep;
  rep.theorem_id = "d2n-squared";
  rep.param("n", std::to_string(n));
  const std::size_t order = 4 * static_cast<std::size_t>(n) * n;
  if (order > cap) {
    throw std::invalid_argument("d2n_squared_check: (2n)^2 exceeds cap");
  }

  const FiniteGroup d2n = make_dihedral(n);
  const Graph graph = noncommuting_graph(direct_product(d2n, d2n, cap));
  const std::size_t zero_exp =
      static_cast<std::size_t>(15 * n * n / 4 - 2 * n - 7);
  const std::size_t lin_exp = static_cast<std::size_t>(n * n / 4 - n + 1);
  const std::size_t cubic_exp = static_cast<std::size_t>(n - 2);
  // monic normalization of -x^3 - (2n+4)x^2 + 16n(n-2)
  const IntPolynomial cubic({Int(-16) * n * (n - 2), Int(0), Int(2 * n + 4),
                             Int(1)});
  const IntPolynomial linear({Int(4), Int(1)});

  rep.rhs_summary = "x^" + std::to_string(zero_exp) + " * (x+4)^" +
                    std::to_string(lin_exp) + " * (" + cubic.to_string() +
                    ")^" + std::to_string(cubic_exp) + " * f(x), deg f = 8";

  if (n <= 6) {
    const IntPolynomial brute = charpoly(graph.adjacency_matrix());
    IntPolynomial rest = brute;
    std::size_t zeros = 0;
    rest = detail::nonzero_part(rest, &zeros);
    if (zeros < zero_exp) {
      rep.status = VerificationReport::Status::fail;
      rep.deviation = "zero multiplicity " + std::to_string(zeros) +
                      " below stated " + std::to_string(zero_exp);
      return rep;
    }
    rest = IntPolynomial::monomial(zeros - zero_exp) * rest;
    IntPolynomial f;
    try {
      f = deflate(deflate(rest, linear, lin_exp), cubic, cubic_exp);
    } catch (const factor_mismatch_error& e) {
      rep.status = VerificationReport::Status::fail;
      rep.deviation = e.what();
      return rep;
    }
    rep.lhs_summary = "f(x) = " + f.to_string();
    bool ok = f.degree() == 8;
    if (n == 6) {
      const IntPolynomial example_f =
          IntPolynomial({Int(24), Int(1)}) *
          IntPolynomial({Int(2304), Int(-384), Int(0), Int(1)}) *
          IntPolynomial({Int(55296), Int(5376), Int(-1152), Int(-104),
                         Int(1)});
      ok = ok && f == example_f;
      rep.notes.push_back(
          "n=6 quotient compared against (x+24)(x^3-384x+2304)"
          "(x^4-104x^3-1152x^2+5376x+55296)");
    }
    rep.status = ok ? VerificationReport::Status::pass
                    : VerificationReport::Status::fail;
    rep.deviation = ok ? VerificationReport::exact_deviation()
                       : "deg f = " + std::to_string(f.degree());
    return rep;
  }

  // modular path
  const IMat a = graph.adjacency_matrix();
  const auto primes = random_primes_60bit(std::max<std::size_t>(primes_count, 1),
                                          prime_seed);
  std::vector<modpoly::Poly> f_mod;
  for (const auto p : primes) {
    auto cp = charpoly_mod(a, p);
    std::size_t zeros = 0;
    while (zeros < cp.size() && cp[zeros] == 0) ++zeros;
    if (zeros < zero_exp) {
      rep.status = VerificationReport::Status::fail;
      rep.deviation = "zero multiplicity below stated exponent (mod p)";
      return rep;
    }
    modpoly::Poly rest(cp.begin() + static_cast<long>(zero_exp), cp.end());
    const modpoly::Poly lin_p = {4 % p, 1};
    Int c0 = Int(-16) * n * (n - 2) % Int(p);
    if (c0 < 0) c0 += p;
    const modpoly::Poly cubic_p = {c0.convert_to<std::uint64_t>(), 0,
                                   static_cast<std::uint64_t>(2 * n + 4) % p,
                                   1};
    for (std::size_t i = 0; i < lin_exp; ++i) {
      auto [qq, rr] = modpoly::divmod(rest, lin_p, p);
      if (!rr.empty()) {
        rep.status = VerificationReport::Status::fail;
        rep.deviation = "(x+4) deflation failed mod " + std::to_string(p);
        return rep;
      }
      rest = std::move(qq);
    }
    for (std::size_t i = 0; i < cubic_exp; ++i) {
      auto [qq, rr] = modpoly::divmod(rest, cubic_p, p);
      if (!rr.empty()) {
        rep.status = VerificationReport::Status::fail;
        rep.deviation = "cubic deflation failed mod " + std::to_string(p);
        return rep;
      }
      rest = std::move(qq);
    }
    if (rest.size() != 9) {
      rep.status = VerificationReport::Status::fail;
      rep.deviation = "deg f = " + std::to_string(rest.size() - 1) +
                      " mod " + std::to_string(p);
      return rep;
    }
    f_mod.push_back(std::move(rest));
  }
  // CRT lift of f across the primes (symmetric range)
  std::vector<Int> f_coeffs(9);
  for (std::size_t k = 0; k < 9; ++k) {
    Int value = 0, modulus = 1;
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
      const std::uint64_t p = primes[pi];
      Int vm = value % Int(p);
      if (vm < 0) vm += p;
      const std::uint64_t minv =
          invmod((modulus % Int(p)).convert_to<std::uint64_t>(), p);
      const std::uint64_t t = mulmod(
          submod(f_mod[pi][k], vm.convert_to<std::uint64_t>(), p), minv, p);
      value += modulus * Int(t);
      modulus *= Int(p);
    }
    if (value * 2 > modulus) value -= modulus;
    f_coeffs[k] = std::move(value);
  }
  const IntPolynomial f(std::move(f_coeffs));
  rep.lhs_summary = "f(x) = " + f.to_string() + " (CRT lift from " +
                    std::to_string(primes.size()) + " primes)";
  rep.status = VerificationReport::Status::pass;
  rep.deviation = "0 (exact mod " + std::to_string(primes.size()) +
                  " random 60-bit primes)";
  return rep;
}

enum class BlockFamily { gxs3, gxd2n, gxd8 };

inline std::string block_family_name(BlockFamily f) {
  switch (f) {
    case BlockFamily::gxs3:
      return "block-gxs3";
    case BlockFamily::gxd2n:
      return "block-gxd2n";
    case BlockFamily::gxd8:
      return "block-gxd8";
  }
  return "?";
}

namespace detail {

/// Assembles the family's block matrix at integer x and evaluates the
/// right-hand side numerator (-x)^a * det1^e1 * det2 exactly.
struct BlockEvaluation {
  std::size_t minus_x_exponent;
  std::size_t det1_exponent;
  IMat det1;   // |G| x |G|
  IMat det2;   // 2|G| or 3|G| square
};

inline IMat block_matrix(const std::vector<std::vector<IMat>>& blocks) {
  const std::size_t m = blocks[0][0].size();
  const std::size_t rows = blocks.size() * m;
  IMat out(rows, std::vector<std::int64_t>(blocks[0].size() * m, 0));
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    for (std::size_t bj = 0; bj < blocks[bi].size(); ++bj) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          out[bi * m + i][bj * m + j] = blocks[bi][bj][i][j];
        }
      }
    }
  }
  return out;
}

inline IMat scaled(const IMat& a, std::int64_t s) {
  IMat out = a;
  for (auto& row : out) {
    for (auto& v : row) v *= s;
  }
  return out;
}

inline IMat plus_diag(IMat a, std::int64_t s) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i][i] += s;
  return a;
}

inline IMat plus_ones(IMat a, std::int64_t s) {
  for (auto& row : a) {
    for (auto& v : row) v += s;
  }
  return a;
}

inline IMat ones(std::size_t m, std::int64_t s) {
  return IMat(m, std::vector<std::int64_t>(m, s));
}

inline BlockEvaluation block_rhs(BlockFamily family, const IMat& a0,
                                 std::int64_t x, int n_even) {
  const std::size_t m = a0.size();
  BlockEvaluation ev;
  switch (family) {
    case BlockFamily::gxs3:
      ev.minus_x_exponent = m;
      ev.det1_exponent = 2;
      ev.det1 = plus_ones(plus_diag(a0, -x), -1);
      ev.det2 = block_matrix(
          {{plus_diag(a0, -x), scaled(a0, 2), scaled(a0, 3)},
           {a0, plus_diag(scaled(a0, 2), -x), ones(m, 3)},
           {a0, ones(m, 2), plus_ones(plus_diag(a0, -x), 2)}});
      break;
    case BlockFamily::gxd2n: {
      const std::int64_t n = n_even;
      ev.minus_x_exponent = m * static_cast<std::size_t>(3 * n / 2 - 2);
      ev.det1_exponent = static_cast<std::size_t>(n / 2 - 1);
      ev.det1 = plus_ones(plus_diag(scaled(a0, 2), -x), -2);
      ev.det2 = block_matrix(
          {{plus_diag(scaled(a0, 2), -x), scaled(a0, n - 2), scaled(a0, n)},
           {scaled(a0, 2), plus_diag(scaled(a0, n - 2), -x), ones(m, n)},
           {scaled(a0, 2), ones(m, n - 2),
            plus_ones(plus_diag(scaled(a0, 2), -x), n - 2)}});
      break;
    }
    case BlockFamily::gxd8:
      ev.minus_x_exponent = 4 * m;
      ev.det1_exponent = 2;
      ev.det1 = plus_ones(plus_diag(scaled(a0, 2), -x), -2);
      ev.det2 = block_matrix(
          {{plus_diag(scaled(a0, 2), -x), scaled(a0, 6)},
           {scaled(a0, 2), plus_ones(plus_diag(scaled(a0, 2), -x), 4)}});
      break;
  }
  return ev;
}

}  // namespace detail

/// Verifies the block-determinant characteristic-polynomial identities for
/// Gamma(G x S3), Gamma(G x D_2n) (n even) and Gamma(G x D8) by exact
/// evaluation-interpolation: with P the monic charpoly of the product graph
/// and zc = |Z(G x H)|, the cross-multiplied identity
///   P(x) * x^zc == (-x)^a * det1(x)^e1 * det2(x)
/// is checked at x = 1 .. |G||H|+1 (degree+1 points prove polynomial
/// equality; x = 0 is the stated pole and is skipped by construction).
/// Both sides follow the paper's det(A - xI) table convention, which makes
/// the comparison sign-exact for every center parity.
inline VerificationReport block_factorization_check(BlockFamily family,
                                                    const FiniteGroup& g,
                                                    int n_even = 6,
                                                    std::size_t cap = 10000) {
  VerificationReport rep;
  rep.theorem_id = block_family_name(family);
  rep.param("G", g.label());
  if (family == BlockFamily::gxd2n) {
    rep.param("n", std::to_string(n_even));
    if (n_even < 4 || n_even % 2 != 0) {
      throw std::invalid_argument("block_factorization_check: even n >= 4");
    }
  }

  FiniteGroup h;
  switch (family) {
    case BlockFamily::gxs3:
      h = make_symmetric(3);
      break;
    case BlockFamily::gxd2n:
      h = make_dihedral(n_even);
      break;
    case BlockFamily::gxd8:
      h = make_dihedral(4);
      break;
  }
  const FiniteGroup product = direct_product(g, h, cap);
  const Graph graph = noncommuting_graph(product);
  if (graph.vertex_count() == 0) {
    throw std::invalid_argument("block_factorization_check: G must be "
                                "non-abelian");
  }
  const IntPolynomial p = charpoly(graph.adjacency_matrix());
  const std::size_t zc = center(product).size();
  const IMat a0 = augmented_adjacency(g).adjacency_matrix();
  const std::size_t degree = g.order() * h.order();

  for (std::size_t xs = 1; xs <= degree + 1; ++xs) {
    const std::int64_t x = static_cast<std::int64_t>(xs);
    const auto ev = detail::block_rhs(family, a0, x,
                                      family == BlockFamily::gxd8 ? 4 : n_even);
    Int rhs = 1;
    const Int minus_x(-x);
    for (std::size_t i = 0; i < ev.minus_x_exponent; ++i) rhs *= minus_x;
    const Int d1 = det_bareiss(ev.det1);
    for (std::size_t i = 0; i < ev.det1_exponent; ++i) rhs *= d1;
    rhs *= det_bareiss(ev.det2);

    Int lhs = p.eval(Int(x));
    for (std::size_t i = 0; i < zc; ++i) lhs *= Int(x);

    if (lhs != rhs) {
      rep.status = VerificationReport::Status::fail;
      rep.deviation = "mismatch at sample x = " + std::to_string(x);
      rep.lhs_summary = "P(" + std::to_string(x) + ") * x^" +
                        std::to_string(zc) + " = " + lhs.str();
      rep.rhs_summary = "block determinant product = " + rhs.str();
      return rep;
    }
  }
  rep.status = VerificationReport::Status::pass;
  rep.lhs_summary = "brute-force charpoly of Gamma(" + product.label() + ")";
  rep.rhs_summary = "block-determinant right-hand side, " +
                    std::to_string(degree + 1) + " samples";
  rep.deviation = VerificationReport::exact_deviation();
  rep.notes.push_back("compared under the paper's det(A - xI) convention, "
                      "cross-multiplied by x^|Z(GxH)|");
  return rep;
}

}  // namespace noncomm
