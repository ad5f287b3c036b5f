#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "noncomm/charpoly.hpp"
#include "noncomm/eigen_jacobi.hpp"
#include "noncomm/graph.hpp"
#include "noncomm/poly.hpp"
#include "noncomm/roots.hpp"

namespace noncomm {

/// Multiset of eigenvalues with multiplicities, sorted by descending value.
struct Spectrum {
  std::vector<std::pair<ExactRoot, std::size_t>> entries;

  std::size_t total_multiplicity() const {
    std::size_t t = 0;
    for (const auto& [r, m] : entries) t += m;
    return t;
  }

  bool all_exact() const {
    for (const auto& [r, m] : entries) {
      if (!r.is_exact()) return false;
    }
    return true;
  }

  double numeric_sum() const {
    double s = 0;
    for (const auto& [r, m] : entries) s += r.value() * static_cast<double>(m);
    return s;
  }

  void sort_entries() {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& x, const auto& y) {
                       return x.first.value() > y.first.value();
                     });
  }

  /// Exact equality of roots and multiplicities (order-sensitive after the
  /// canonical descending sort).
  friend bool operator==(const Spectrum& a, const Spectrum& b) {
    return a.entries == b.entries;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) os << ", ";
      os << "(" << entries[i].first.to_string() << ")_" << entries[i].second;
    }
    return os.str();
  }
};

namespace detail {

inline double log2_abs(const Int& v) {
  if (v == 0) return -1e9;
  const Int a = abs(v);
  const auto bits = boost::multiprecision::msb(a);
  // refine with the top bits for ~1e-3 accuracy
  const Int shifted = bits > 52 ? Int(a >> (bits - 52)) : a;
  return std::log2(shifted.convert_to<double>()) +
         static_cast<double>(bits > 52 ? bits - 52 : 0);
}

/// Fujiwara's root bound 2 * max_k (|c_{n-k}| / |c_n|)^(1/k) (constant term
/// halved), computed in the log domain so huge coefficients cannot
/// overflow.
inline double root_bound(const IntPolynomial& p) {
  const long n = p.degree();
  if (n <= 0) return 1;
  const double lead = log2_abs(p.leading());
  double best = -1e9;
  for (long k = 1; k <= n; ++k) {
    if (p.coeff(static_cast<std::size_t>(n - k)) == 0) continue;
    double t = log2_abs(p.coeff(static_cast<std::size_t>(n - k))) - lead;
    if (k == n) t -= 1;
    best = std::max(best, t / static_cast<double>(k));
  }
  if (best < -1e8) return 1;
  return 2 * std::pow(2.0, best);
}

/// Durand-Kerner simultaneous iteration started on a circle of the
/// Fujiwara radius; good enough root locations for candidate generation
/// and residual-bounded numeric leftovers. Clustered multiple roots only
/// need to land within rounding distance of the true value.
inline std::vector<std::complex<double>> durand_kerner(
    const IntPolynomial& poly) {
  const long deg = poly.degree();
  if (deg <= 0) return {};
  std::vector<std::complex<double>> c(static_cast<std::size_t>(deg) + 1);
  const double lead = to_double(poly.leading());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = to_double(poly.coefficients()[i]) / lead;
  }
  const double bound = root_bound(poly);

  auto eval = [&](std::complex<double> x) {
    std::complex<double> r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
  };

  std::vector<std::complex<double>> roots(static_cast<std::size_t>(deg));
  const std::complex<double> seed(0.4, 0.9);
  std::complex<double> w(1.0, 0.0);
  for (auto& r : roots) {
    w *= seed;
    r = bound * w;
  }
  for (int iter = 0; iter < 1000; ++iter) {
    double delta = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      std::complex<double> denom = 1;
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (j != i) denom *= roots[i] - roots[j];
      }
      if (denom == std::complex<double>(0, 0)) continue;
      const std::complex<double> step = eval(roots[i]) / denom;
      roots[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-13 * std::max(1.0, bound)) break;
  }
  return roots;
}

inline std::size_t strip_zero_roots(IntPolynomial& p) {
  std::size_t count = 0;
  while (!p.is_zero() && p.coeff(0) == 0) {
    std::vector<Int> c(p.coefficients().begin() + 1, p.coefficients().end());
    p = IntPolynomial(std::move(c));
    ++count;
  }
  return count;
}

}  // namespace detail

/// Recovers the exact spectrum of a polynomial whose roots are integers or
/// quadratic surds, with exact multiplicities by repeated exact deflation.
/// Whatever resists linear/quadratic integer factors is reported as
/// residual-bounded numeric roots (the GL cubic, the degree-8 product
/// factor, ...).
inline Spectrum assemble_exact_spectrum(const IntPolynomial& poly) {
  if (poly.is_zero()) {
    throw std::invalid_argument("assemble_exact_spectrum: zero polynomial");
  }
  Spectrum spec;
  IntPolynomial rest = poly;

  const std::size_t zeros = detail::strip_zero_roots(rest);
  if (zeros > 0) {
    spec.entries.emplace_back(ExactRoot::integer(0), zeros);
  }

  // integer roots: full trial over the Fujiwara bound when affordable,
  // numeric candidate locations otherwise; exact division certifies either
  // way and counts multiplicity
  {
    std::vector<Int> candidates;
    const double bound = detail::root_bound(rest);
    const double trial_budget =
        2e6 / std::max<double>(1.0, static_cast<double>(rest.degree()));
    if (bound <= trial_budget) {
      const long long b = static_cast<long long>(std::ceil(bound));
      for (long long r = -b; r <= b; ++r) {
        if (r != 0) candidates.push_back(Int(r));
      }
    } else {
      for (const auto& r : detail::durand_kerner(rest)) {
        if (std::abs(r.imag()) > 0.5 || std::abs(r.real()) > 9e15) continue;
        for (long long delta = -1; delta <= 1; ++delta) {
          candidates.push_back(Int(std::llround(r.real()) + delta));
        }
      }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()),
                       candidates.end());
    }
    for (const Int& cand : candidates) {
      if (rest.degree() < 1) break;
      if (rest.eval(cand) != 0) continue;
      const IntPolynomial factor = IntPolynomial::linear_root(cand);
      const std::size_t mult = exact_multiplicity(rest, factor);
      rest = deflate(rest, factor, mult);
      spec.entries.emplace_back(ExactRoot::integer(cand), mult);
    }
  }

  // a monic degree-2 remainder is solved directly
  if (rest.degree() == 2 && rest.is_monic()) {
    const Int u = rest.coeff(1), v = rest.coeff(0);
    if (u * u - 4 * v >= 0) {
      auto [r1, r2] = solve_quadratic(u, v);
      spec.entries.emplace_back(r1, 1);
      spec.entries.emplace_back(r2, 1);
      rest = IntPolynomial::one();
    }
  }

  // quadratic surd factors x^2 + ux + v from pairs of numeric roots
  bool progress = true;
  while (progress && rest.degree() >= 2) {
    progress = false;
    // Multiple roots make Durand-Kerner clusters spread (radius roughly
    // eps^(1/multiplicity)), so candidates are rounded generously; the
    // exact division below is the only certificate that matters.
    const auto numeric = detail::durand_kerner(rest);
    for (std::size_t i = 0; i < numeric.size() && !progress; ++i) {
      for (std::size_t j = i + 1; j < numeric.size() && !progress; ++j) {
        const auto sum = numeric[i] + numeric[j];
        const auto prod = numeric[i] * numeric[j];
        if (std::abs(sum.real()) > 9e15 || std::abs(prod.real()) > 9e15) {
          continue;
        }
        const Int u = Int(std::llround(-sum.real()));
        const Int v = Int(std::llround(prod.real()));
        const Int disc = u * u - 4 * v;
        if (disc <= 0 || is_perfect_square(disc)) continue;
        const IntPolynomial factor({v, u, Int(1)});
        const std::size_t mult = exact_multiplicity(rest, factor);
        if (mult == 0) continue;
        rest = deflate(rest, factor, mult);
        auto [r1, r2] = solve_quadratic(u, v);
        spec.entries.emplace_back(r1, mult);
        spec.entries.emplace_back(r2, mult);
        progress = true;
      }
    }
  }

  // numeric leftovers with a first-order residual bound
  if (rest.degree() >= 1) {
    // charpolys of symmetric matrices have real roots only, so imaginary
    // parts here are numeric noise from clustered multiple roots
    const IntPolynomial deriv = rest.derivative();
    for (const auto& r : detail::durand_kerner(rest)) {
      double x = r.real();
      for (int it = 0; it < 3; ++it) {
        const double dv = deriv.eval_double(x);
        if (dv == 0) break;
        x -= rest.eval_double(x) / dv;
      }
      const double dv = deriv.eval_double(x);
      const double bound =
          dv == 0 ? 1e-6 : std::abs(rest.eval_double(x) / dv) + 1e-12;
      spec.entries.emplace_back(ExactRoot::numeric(x, bound), 1);
    }
  }

  spec.sort_entries();
  if (spec.total_multiplicity() !=
      static_cast<std::size_t>(poly.degree())) {
    throw std::runtime_error(
        "assemble_exact_spectrum: multiplicities do not sum to the degree");
  }
  return spec;
}

/// Exact symbolic value rational + sum of coef*sqrt(d) terms, alongside its
/// numeric evaluation.
struct EnergyValue {
  Rat rational = 0;
  std::map<Int, Rat> surds;  // d -> coefficient, d squarefree > 1
  bool exact = true;
  double numeric = 0;
  double bound = 0;

  void refresh_numeric() {
    double v = to_double(rational);
    for (const auto& [d, coef] : surds) {
      v += to_double(coef) * std::sqrt(to_double(d));
    }
    numeric = v;
  }

  std::string to_string() const {
    if (!exact) {
      std::ostringstream os;
      os.precision(12);
      os << numeric;
      return os.str();
    }
    std::ostringstream os;
    bool first = true;
    if (rational != 0 || surds.empty()) {
      os << rational;
      first = false;
    }
    for (const auto& [d, coef] : surds) {
      if (coef == 0) continue;
      if (!first && coef > 0) os << "+";
      if (coef == -1) os << "-";
      else if (coef != 1) os << coef << "*";
      os << "sqrt(" << d << ")";
      first = false;
    }
    return os.str();
  }
};

/// Energy of an exact spectrum: sum of |root| * multiplicity, kept symbolic.
inline EnergyValue energy_from_spectrum(const Spectrum& spec) {
  EnergyValue e;
  double numeric = 0;
  for (const auto& [root, mult] : spec.entries) {
    const double am = static_cast<double>(mult);
    numeric += std::abs(root.value()) * am;
    switch (root.kind) {
      case ExactRoot::Kind::integer:
        e.rational += Rat(abs(root.int_value) * Int(mult));
        break;
      case ExactRoot::Kind::surd: {
        Int a = root.surd_a, b = root.surd_b;
        if (root.value() < 0) {
          a = -a;
          b = -b;
        }
        e.rational += Rat(a * Int(mult), 2);
        e.surds[root.surd_d] += Rat(b * Int(mult), 2);
        break;
      }
      case ExactRoot::Kind::numeric:
        e.exact = false;
        e.bound += root.error_bound * am;
        break;
    }
  }
  for (auto it = e.surds.begin(); it != e.surds.end();) {
    it = it->second == 0 ? e.surds.erase(it) : std::next(it);
  }
  e.numeric = numeric;
  if (e.exact) {
    e.refresh_numeric();
    e.bound = 1e-14 * std::max(1.0, std::abs(e.numeric));
  }
  return e;
}

inline constexpr std::size_t kExactSpectrumCap = 600;

/// Exact spectrum of a graph when its size permits the exact pipeline.
inline Spectrum graph_spectrum(const Graph& g) {
  if (g.vertex_count() > kExactSpectrumCap) {
    throw std::invalid_argument("graph_spectrum: too large for the exact "
                                "pipeline; use eigenvalues_numeric");
  }
  return assemble_exact_spectrum(charpoly(g.adjacency_matrix()));
}

/// E(graph) = sum |lambda_i|; exact symbolic form whenever the exact
/// spectrum is available, numeric (Jacobi) otherwise.
inline EnergyValue energy(const Graph& g) {
  if (g.vertex_count() == 0) {
    EnergyValue e;
    e.refresh_numeric();
    return e;
  }
  if (g.vertex_count() <= kExactSpectrumCap) {
    return energy_from_spectrum(graph_spectrum(g));
  }
  EnergyValue e;
  e.exact = false;
  double s = 0;
  for (double v : eigenvalues_numeric(g.adjacency_matrix())) {
    s += std::abs(v);
  }
  e.numeric = s;
  e.bound = 1e-9 * static_cast<double>(g.vertex_count());
  return e;
}

/// Laplacian spectrum, exact (all our Laplacian instances are integral, but
/// surd/numeric leftovers are handled the same way as adjacency spectra).
inline Spectrum laplacian_spectrum(const Graph& g) {
  if (g.vertex_count() > kExactSpectrumCap) {
    throw std::invalid_argument("laplacian_spectrum: graph too large");
  }
  return assemble_exact_spectrum(charpoly(laplacian(g).matrix));
}

/// LE = sum |mu_i - 2m/n| as an exact rational when the Laplacian spectrum
/// is integral.
inline EnergyValue laplacian_energy(const Graph& g) {
  EnergyValue e;
  if (g.vertex_count() == 0) {
    e.refresh_numeric();
    return e;
  }
  const Rat mean(Int(2 * g.edge_count()), Int(g.vertex_count()));
  const Spectrum spec = laplacian_spectrum(g);
  if (spec.all_exact()) {
    Rat total = 0;
    for (const auto& [root, mult] : spec.entries) {
      Rat diff = (root.kind == ExactRoot::Kind::integer
                      ? Rat(root.int_value)
                      : Rat(root.surd_a, 2)) -
                 mean;
      if (root.kind == ExactRoot::Kind::surd) {
        // |a/2 + (b/2) sqrt(d) - mean| has no rational closed form; fall
        // back to numeric for non-integral Laplacians
        e.exact = false;
      }
      if (diff < 0) diff = -diff;
      total += diff * Int(mult);
    }
    if (e.exact) {
      e.rational = total;
      e.refresh_numeric();
      e.bound = 1e-14 * std::max(1.0, std::abs(e.numeric));
      return e;
    }
  }
  e.exact = false;
  double s = 0;
  const double m = to_double(mean);
  for (const auto& [root, mult] : spec.entries) {
    s += std::abs(root.value() - m) * static_cast<double>(mult);
  }
  e.numeric = s;
  e.bound = 1e-9 * static_cast<double>(g.vertex_count());
  return e;
}

/// Groups nearby numeric eigenvalues into (value, multiplicity) pairs; the
/// paper's spectra are separated far above the 1e-6 default gap.
inline std::vector<std::pair<double, std::size_t>> group_eigenvalues(
    const std::vector<double>& sorted_desc, double gap = 1e-6) {
  std::vector<std::pair<double, std::size_t>> out;
  for (double v : sorted_desc) {
    if (!out.empty() && std::abs(out.back().first - v) < gap) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

}  // namespace noncomm
