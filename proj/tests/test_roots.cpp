#include <cmath>

#include <catch_amalgamated.hpp>

#include "noncomm/roots.hpp"

using namespace noncomm;

TEST_CASE("quadratic with integer roots", "[roots]") {
  // x^2 - 2x - 8 = (x-4)(x+2), the n = 4 dihedral case
  auto [r1, r2] = solve_quadratic(Int(-2), Int(-8));
  CHECK(r1.kind == ExactRoot::Kind::integer);
  CHECK(r1.int_value == 4);
  CHECK(r2.int_value == -2);

  auto [s1, s2] = solve_quadratic(Int(0), Int(-1));  // x^2 - 1
  CHECK(s1.int_value == 1);
  CHECK(s2.int_value == -1);
}

TEST_CASE("quadratic with surd roots", "[roots]") {
  // x^2 - 4x - 20 -> 2 +- 2 sqrt 6
  auto [r1, r2] = solve_quadratic(Int(-4), Int(-20));
  REQUIRE(r1.kind == ExactRoot::Kind::surd);
  CHECK(r1.surd_a == 4);
  CHECK(r1.surd_b == 4);
  CHECK(r1.surd_d == 6);
  CHECK(r1.to_string() == "2+2*sqrt(6)");
  CHECK(r2.to_string() == "2-2*sqrt(6)");
  CHECK(r1.value() == Catch::Approx(2 + 2 * std::sqrt(6.0)));

  // substituting back gives exactly zero, in exact arithmetic
  for (const auto& r : {r1, r2}) {
    auto [rational, surd_part] = quadratic_residual(Int(-4), Int(-20), r);
    CHECK(rational == 0);
    CHECK(surd_part == 0);
  }
}

TEST_CASE("surd rendering keeps non-even halves", "[roots]") {
  // (1 + 3 sqrt 5) / 2 has odd a, b: renders with the /2
  const ExactRoot r = ExactRoot::surd(Int(1), Int(3), Int(5));
  CHECK(r.to_string() == "(1+3*sqrt(5))/2");
  const ExactRoot s = ExactRoot::surd(Int(6), Int(-2), Int(57));
  CHECK(s.to_string() == "3-sqrt(57)");
}

TEST_CASE("split_square extracts the square part", "[roots]") {
  auto [s1, f1] = split_square(Int(228));  // 228 = 4 * 57
  CHECK(s1 == 2);
  CHECK(f1 == 57);
  auto [s2, f2] = split_square(Int(36));
  CHECK(s2 == 6);
  CHECK(f2 == 1);
  auto [s3, f3] = split_square(Int(7));
  CHECK(s3 == 1);
  CHECK(f3 == 7);
}

TEST_CASE("cubic coefficients: depressed form and discriminant", "[roots]") {
  // the GL q=3 cubic x^3 - 34x^2 - 312x - 576
  const CubicCoefficients c{Int(-34), Int(-312), Int(-576)};
  // alpha = c - b^2/3, beta = 2b^3/27 - bc/3 + d
  CHECK(c.alpha() == Rat(-312) - Rat(34 * 34, 3));
  CHECK(c.beta() == Rat(2 * -34 * -34 * -34, 27) - Rat(-34 * -312, 3) +
                        Rat(-576));
  CHECK(c.discriminant() < 0);
}

TEST_CASE("cubic with three real roots", "[roots]") {
  const CubicCoefficients c{Int(-34), Int(-312), Int(-576)};
  const auto roots = solve_cubic(c);
  CHECK(roots[0] >= roots[1]);
  CHECK(roots[1] >= roots[2]);
  CHECK(roots[0] + roots[1] + roots[2] == Catch::Approx(34.0).margin(1e-9));
  // residuals
  const IntPolynomial f = c.as_poly();
  for (double r : roots) {
    CHECK(std::abs(f.eval_double(r)) < 1e-6 * 1000);
  }

  // x^3 - 384x + 2304: roots multiply to -2304
  const CubicCoefficients c2{Int(0), Int(-384), Int(2304)};
  const auto roots2 = solve_cubic(c2);
  CHECK(roots2[0] * roots2[1] * roots2[2] ==
        Catch::Approx(-2304.0).epsilon(1e-9));
}

TEST_CASE("cubic rejects a non-negative discriminant", "[roots]") {
  // x^3: Delta = 0 (triple root) is the stated error path
  CHECK_THROWS_AS(solve_cubic(CubicCoefficients{Int(0), Int(0), Int(0)}),
                  std::domain_error);
  // x^3 - 1: one real root
  CHECK_THROWS_AS(solve_cubic(CubicCoefficients{Int(0), Int(0), Int(-1)}),
                  std::domain_error);
}

TEST_CASE("quadratic rejects complex roots", "[roots]") {
  CHECK_THROWS_AS(solve_quadratic(Int(0), Int(1)), std::domain_error);
}
