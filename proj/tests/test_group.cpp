#include <catch_amalgamated.hpp>

#include "noncomm/charpoly.hpp"
#include "noncomm/graph.hpp"
#include "noncomm/group.hpp"
#include "noncomm/group_spec.hpp"

using namespace noncomm;

TEST_CASE("dihedral groups: order, relations, center", "[group]") {
  // n=3: order 6, trivial center; n=4: center {e, r^2}; n=6: center size 2
  for (int n : {3, 4, 5, 6, 7, 8, 12}) {
    const FiniteGroup g = make_dihedral(n);
    CAPTURE(n);
    REQUIRE(g.order() == 2 * static_cast<std::size_t>(n));
    CHECK(verify_group_axioms(g).all_ok());
    const auto z = center(g);
    if (n % 2 == 0) {
      REQUIRE(z.size() == 2);
      CHECK(z[0] == g.identity());
      // the non-identity central element is the half rotation r^(n/2)
      CHECK(g.multiply(z[1], z[1]) == g.identity());
    } else {
      REQUIRE(z.size() == 1);
      CHECK(z[0] == g.identity());
    }
    // s r s = r^{-1}
    const FiniteGroup::Element r = 1;
    const FiniteGroup::Element s =
        static_cast<FiniteGroup::Element>(g.order() / 2);
    CHECK(g.multiply(g.multiply(s, r), s) == g.inverse(r));
  }
  CHECK_THROWS_AS(make_dihedral(2), std::invalid_argument);
}

TEST_CASE("cyclic groups are abelian", "[group]") {
  CHECK(make_cyclic(1).order() == 1);
  CHECK(make_cyclic(2).is_abelian());
  const FiniteGroup c4 = make_cyclic(4);
  CHECK(c4.is_abelian());
  CHECK(verify_group_axioms(c4).all_ok());
  CHECK(noncommuting_graph(c4).vertex_count() == 0);
  CHECK_THROWS_AS(make_cyclic(0), std::invalid_argument);
}

TEST_CASE("symmetric groups", "[group]") {
  const FiniteGroup s3 = make_symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(center(s3).size() == 1);
  CHECK(verify_group_axioms(s3).all_ok());
  CHECK(make_symmetric(4).order() == 24);
  CHECK(verify_group_axioms(make_symmetric(4)).all_ok());
  CHECK(make_symmetric(2).is_abelian());
  CHECK(noncommuting_graph(make_symmetric(2)).vertex_count() == 0);
  CHECK_THROWS_AS(make_symmetric(1), std::invalid_argument);
  CHECK_THROWS_AS(make_symmetric(7), std::invalid_argument);
}

TEST_CASE("S_3 and D_6 have identical non-commuting graphs", "[group]") {
  const Graph gs = noncommuting_graph(make_symmetric(3));
  const Graph gd = noncommuting_graph(make_dihedral(3));
  CHECK(gs.degree_sequence() == gd.degree_sequence());
  CHECK(charpoly(gs.adjacency_matrix()) == charpoly(gd.adjacency_matrix()));
}

TEST_CASE("direct products multiply componentwise", "[group]") {
  const FiniteGroup d8 = make_dihedral(4);
  const FiniteGroup prod = direct_product(d8, d8);
  CHECK(prod.order() == 64);
  CHECK(verify_group_axioms(prod).all_ok());
  CHECK(center(prod).size() == 4);

  const FiniteGroup c6 = direct_product(make_cyclic(2), make_cyclic(3));
  CHECK(c6.order() == 6);
  CHECK(c6.is_abelian());

  const FiniteGroup d6c2 = direct_product(make_dihedral(3), make_cyclic(2));
  CHECK(d6c2.order() == 12);
  CHECK(center(d6c2).size() == 2);
}

TEST_CASE("product center is the product of centers, elementwise",
          "[group]") {
  const FiniteGroup g = make_dihedral(4);
  const FiniteGroup h = make_dihedral(6);
  const FiniteGroup p = direct_product(g, h);
  const auto zg = center(g), zh = center(h), zp = center(p);
  REQUIRE(zp.size() == zg.size() * zh.size());
  const std::uint32_t gn = static_cast<std::uint32_t>(g.order());
  std::vector<FiniteGroup::Element> expected;
  for (auto b : zh) {
    for (auto a : zg) expected.push_back(b * gn + a);
  }
  std::sort(expected.begin(), expected.end());
  CHECK(zp == expected);
}

TEST_CASE("product order cap", "[group]") {
  const FiniteGroup d = make_dihedral(50);  // order 100
  CHECK_THROWS_AS(direct_product(d, d, 5000), std::invalid_argument);
  CHECK(direct_product(d, d, 10000).order() == 10000);
}

TEST_CASE("centralizers", "[group]") {
  const FiniteGroup d8 = make_dihedral(4);
  // centralizer of the identity is everything
  CHECK(centralizer(d8, d8.identity()).size() == d8.order());
  // centralizer of r in D_8 is the rotation subgroup, size 4
  CHECK(centralizer(d8, 1).size() == 4);
  CHECK_THROWS_AS(centralizer(d8, 99), std::out_of_range);
}

TEST_CASE("formulaic multiplication above the Cayley-table cap", "[group]") {
  const FiniteGroup big = make_dihedral(600);  // order 1200, no Cayley table
  REQUIRE(big.order() == 1200);
  CHECK(verify_group_axioms(big).all_ok());
  // r^n = e, s^2 = e, s r s = r^{-1}
  FiniteGroup::Element rn = big.identity();
  for (int i = 0; i < 600; ++i) rn = big.multiply(rn, 1);
  CHECK(rn == big.identity());
  const FiniteGroup::Element s = 600;
  CHECK(big.multiply(s, s) == big.identity());
  CHECK(big.multiply(big.multiply(s, 1), s) == big.inverse(1));
  CHECK(center(big).size() == 2);
}

TEST_CASE("group spec grammar round-trips and validates", "[group]") {
  const GroupSpec s1 = GroupSpec::parse("dihedral:5");
  CHECK(s1.build().order() == 10);
  CHECK(s1.to_string() == "dihedral:5");

  const GroupSpec s2 = GroupSpec::parse("prod(dihedral:4, prod(cyclic:2, sym:3))");
  CHECK(s2.build().order() == 8 * 2 * 6);
  CHECK(s2.to_string() == "prod(dihedral:4,prod(cyclic:2,sym:3))");

  CHECK_THROWS_AS(GroupSpec::parse("frobenius:7"), spec_parse_error);
  CHECK_THROWS_AS(GroupSpec::parse("dihedral:"), spec_parse_error);
  CHECK_THROWS_AS(GroupSpec::parse("prod(cyclic:2)"), spec_parse_error);
  CHECK_THROWS_AS(GroupSpec::parse("dihedral:3 extra"), spec_parse_error);
  CHECK_THROWS_AS(GroupSpec::parse("dihedral:2").build(),
                  std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("prod(dihedral:100,dihedral:100)").build(),
                  std::invalid_argument);
}
