#include <random>

#include <catch_amalgamated.hpp>

#include "noncomm/json_io.hpp"
#include "noncomm/poly.hpp"

using namespace noncomm;

TEST_CASE("polynomial arithmetic basics", "[poly]") {
  const IntPolynomial a({Int(1), Int(2), Int(3)});  // 3x^2 + 2x + 1
  const IntPolynomial b({Int(-1), Int(1)});         // x - 1

  CHECK(a.degree() == 2);
  CHECK((a + b) == IntPolynomial({Int(0), Int(3), Int(3)}));
  CHECK((a - a).is_zero());
  CHECK((a * b) == IntPolynomial({Int(-1), Int(-1), Int(-1), Int(3)}));
  CHECK(a.eval(Int(2)) == 17);
  CHECK(IntPolynomial::zero().to_string() == "0");
  CHECK(a.to_string() == "3*x^2 + 2*x + 1");
  CHECK(IntPolynomial({Int(-6), Int(-2), Int(1)}).to_string() ==
        "x^2 - 2*x - 6");
}

TEST_CASE("normalization strips leading zeros", "[poly]") {
  const IntPolynomial p({Int(1), Int(2), Int(0), Int(0)});
  CHECK(p.degree() == 1);
  CHECK(p == IntPolynomial({Int(1), Int(2)}));
}

TEST_CASE("deflate removes exact factors", "[poly]") {
  // (x^2 - 1) / (x - 1) = x + 1
  const IntPolynomial p({Int(-1), Int(0), Int(1)});
  const IntPolynomial f({Int(-1), Int(1)});
  CHECK(deflate(p, f, 1) == IntPolynomial({Int(1), Int(1)}));
}

TEST_CASE("deflate failure carries the remainder", "[poly]") {
  const IntPolynomial p({Int(1), Int(0), Int(1)});  // x^2 + 1
  const IntPolynomial f({Int(-1), Int(1)});         // x - 1
  try {
    deflate(p, f, 1);
    FAIL("expected factor_mismatch_error");
  } catch (const factor_mismatch_error& e) {
    CHECK(!e.remainder().is_zero());
    CHECK(e.remainder() == IntPolynomial({Int(2)}));  // p(1) = 2
  }
}

TEST_CASE("deflate then re-multiply reproduces the original", "[poly]") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Int> fc{Int(coeff(rng)), Int(1)};          // monic linear
    std::vector<Int> gc;
    for (int i = 0; i < 4; ++i) gc.push_back(Int(coeff(rng)));
    gc.push_back(Int(1 + std::abs(coeff(rng))));
    const IntPolynomial f(std::move(fc));
    const IntPolynomial g(std::move(gc));
    const std::size_t mult = 1 + trial % 3;
    const IntPolynomial product = f.pow(mult) * g;
    const IntPolynomial quotient = deflate(product, f, mult);
    CHECK(quotient == g);
    CHECK(quotient * f.pow(mult) == product);
  }
}

TEST_CASE("exact_multiplicity counts the full power", "[poly]") {
  const IntPolynomial f({Int(3), Int(1)});
  const IntPolynomial g({Int(1), Int(1), Int(1)});
  CHECK(exact_multiplicity(f.pow(4) * g, f) == 4);
  CHECK(exact_multiplicity(g, f) == 0);
}

TEST_CASE("poly_identity_check certifies equality by sampling", "[poly]") {
  auto sq = [](const Int& x) { return x * x; };
  CHECK(poly_identity_check(sq, sq, 2));
  auto sq_plus = [](const Int& x) { return x * x + 1; };
  CHECK_FALSE(poly_identity_check(sq, sq_plus, 2));
  // degree-2 disagreement invisible at fewer samples than degree+1 proves
  // the bound matters: x^2 vs x^2 + (x-1)(x-2)(x-3) agree at 1,2,3
  auto probe = [](const Int& x) {
    return x * x + (x - 1) * (x - 2) * (x - 3);
  };
  CHECK(poly_identity_check(sq, probe, 2));   // fooled below true degree
  CHECK_FALSE(poly_identity_check(sq, probe, 3));
}

TEST_CASE("factored form expands and evaluates consistently", "[poly]") {
  FactoredPoly f;
  f.push(IntPolynomial({Int(0), Int(1)}), 3);
  f.push(IntPolynomial({Int(-4), Int(1)}), 1);
  f.push(IntPolynomial({Int(2), Int(1)}), 2);
  CHECK(f.degree() == 6);
  const IntPolynomial e = f.expand();
  for (int x = -3; x <= 3; ++x) {
    CHECK(e.eval(Int(x)) == f.eval(Int(x)));
  }
}

TEST_CASE("json round-trip preserves big coefficients", "[poly]") {
  IntPolynomial p({Int("123456789012345678901234567890"), Int(-7), Int(1)});
  const Json j = poly_to_json(p);
  CHECK(j["degree"] == 2);
  CHECK(poly_from_json(j) == p);
}
