#include <random>

#include <catch_amalgamated.hpp>

#include "noncomm/charpoly.hpp"
#include "noncomm/gl2.hpp"
#include "noncomm/graph.hpp"

using namespace noncomm;

namespace {

// Independent oracle: coefficient of x^(n-k) is (-1)^k times the sum of all
// k x k principal minors, with each minor expanded by brute force.
Int minor_det(const IMat& a, const std::vector<std::size_t>& rows) {
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  Int det = 0;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (perm[i] > perm[j]) sign = -sign;
      }
    }
    Int term = sign;
    for (std::size_t i = 0; i < k; ++i) {
      term *= a[rows[i]][rows[perm[i]]];
    }
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

IntPolynomial charpoly_principal_minors(const IMat& a) {
  const std::size_t n = a.size();
  std::vector<Int> coeffs(n + 1);
  coeffs[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Int sum = 0;
    std::vector<std::size_t> subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = i;
    for (;;) {
      sum += minor_det(a, subset);
      std::size_t i = k;
      while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    coeffs[n - k] = (k % 2 == 0 ? sum : -sum);
  }
  return IntPolynomial(std::move(coeffs));
}

IMat random_matrix(std::mt19937& rng, std::size_t n, int lo, int hi,
                   bool symmetric) {
  std::uniform_int_distribution<int> d(lo, hi);
  IMat a(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = d(rng);
  }
  if (symmetric) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) a[i][j] = a[j][i];
    }
  }
  return a;
}

}  // namespace

TEST_CASE("charpoly of the zero matrix is x^n", "[charpoly]") {
  const IMat z(5, std::vector<std::int64_t>(5, 0));
  CHECK(charpoly(z) == IntPolynomial::monomial(5));
  std::vector<std::uint64_t> expect(6, 0);
  expect[5] = 1;
  CHECK(charpoly_mod(z, 7) == expect);
  CHECK(charpoly(IMat{}) == IntPolynomial::one());
}

TEST_CASE("trace and determinant coefficients", "[charpoly]") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const IMat a = random_matrix(rng, n, -3, 3, false);
    const IntPolynomial p = charpoly(a);
    REQUIRE(p.is_monic());
    std::int64_t trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += a[i][i];
    CHECK(p.coeff(n - 1) == Int(-trace));
    const Int det = det_bareiss(a);
    CHECK(p.coeff(0) == (n % 2 == 0 ? det : -det));
    CHECK(p.eval(Int(0)) == p.coeff(0));
  }
}

TEST_CASE("adjacency charpolys have zero trace coefficient", "[charpoly]") {
  for (int n : {3, 4, 5, 6}) {
    const Graph g = noncommuting_graph(make_dihedral(n));
    const IntPolynomial p = charpoly(g.adjacency_matrix());
    CHECK(p.coeff(g.vertex_count() - 1) == 0);
  }
}

TEST_CASE("principal-minor oracle confirms charpoly on small graphs",
          "[charpoly]") {
  // every corpus graph with <= 12 vertices
  std::vector<IMat> instances;
  for (int n : {3, 4, 5, 6}) {
    const Graph g = noncommuting_graph(make_dihedral(n));
    if (g.vertex_count() <= 12) {
      instances.push_back(g.adjacency_matrix());
      instances.push_back(laplacian(g).matrix);
    }
  }
  std::mt19937 rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    instances.push_back(random_matrix(rng, 6, -2, 2, true));
  }
  for (const auto& a : instances) {
    CHECK(charpoly(a) == charpoly_principal_minors(a));
  }
}

TEST_CASE("three exact algorithms agree", "[charpoly]") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const IMat a = random_matrix(rng, n, -4, 4, trial % 2 == 0);
    const IntPolynomial p1 = charpoly(a);
    CHECK(p1 == charpoly_faddeev_leverrier(a));
    CHECK(p1 == charpoly_bareiss(a));
  }
}

TEST_CASE("charpoly_mod equals charpoly reduced mod p", "[charpoly]") {
  std::mt19937 rng(5);
  const std::uint64_t p = 1000003;
  for (int trial = 0; trial < 10; ++trial) {
    const IMat a = random_matrix(rng, 10, -6, 6, false);
    const IntPolynomial exact = charpoly(a);
    const auto mod = charpoly_mod(a, p);
    for (std::size_t k = 0; k <= 10; ++k) {
      Int c = exact.coeff(k) % Int(p);
      if (c < 0) c += p;
      const std::uint64_t want = k < mod.size() ? mod[k] : 0;
      CHECK(c.convert_to<std::uint64_t>() == want);
    }
  }
}

TEST_CASE("charpoly_mod rejects bad moduli", "[charpoly]") {
  const IMat a(2, std::vector<std::int64_t>(2, 1));
  CHECK_THROWS_AS(charpoly_mod(a, 10), std::invalid_argument);
  CHECK_THROWS_AS(charpoly_mod(a, 1ull << 62), std::invalid_argument);
}

TEST_CASE("dimension cap points to the modular path", "[charpoly]") {
  const IMat a(kCharpolyDimensionCap + 1,
               std::vector<std::int64_t>(kCharpolyDimensionCap + 1, 0));
  CHECK_THROWS_WITH(charpoly(a),
                    Catch::Matchers::ContainsSubstring("charpoly_mod"));
}

TEST_CASE("det_bareiss handles singular and pivoting cases", "[charpoly]") {
  CHECK(det_bareiss({{0, 1}, {1, 0}}) == -1);
  CHECK(det_bareiss({{1, 2}, {2, 4}}) == 0);
  CHECK(det_bareiss({{0, 2, 1}, {1, 0, 0}, {0, 0, 3}}) == -6);
  std::mt19937 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const IMat a = random_matrix(rng, 5, -3, 3, false);
    // det(A) = (-1)^n * charpoly(0) with n = 5
    CHECK(det_bareiss(a) == -charpoly(a).eval(Int(0)));
  }
}

TEST_CASE("charpoly matches the closed GL(2,3) vertex structure",
          "[charpoly]") {
  const Graph g = noncommuting_graph(make_gl2(3));
  const IntPolynomial p = charpoly(g.adjacency_matrix());
  CHECK(p.degree() == 46);
  CHECK(p.is_monic());
}
