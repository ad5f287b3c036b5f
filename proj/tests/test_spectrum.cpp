#include <cmath>

#include <catch_amalgamated.hpp>

#include "noncomm/gl2.hpp"
#include "noncomm/json_io.hpp"
#include "noncomm/spectrum.hpp"

using namespace noncomm;

TEST_CASE("jacobi eigensolver basics", "[spectrum]") {
  const IMat identity3 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const auto eig = eigenvalues_numeric(identity3);
  REQUIRE(eig.size() == 3);
  for (double v : eig) CHECK(v == Catch::Approx(1.0));

  CHECK_THROWS_AS(eigenvalues_numeric({{0, 1}, {2, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eigenvalues_numeric({{1, 0}}, -1.0), std::invalid_argument);
}

TEST_CASE("jacobi matches the known dihedral spectra", "[spectrum]") {
  // D8: {4, 0^3, -2^2}
  const auto eig =
      eigenvalues_numeric(noncommuting_graph(make_dihedral(4)).adjacency_matrix());
  REQUIRE(eig.size() == 6);
  CHECK(eig[0] == Catch::Approx(4.0).margin(1e-9));
  for (int i = 1; i <= 3; ++i) CHECK(eig[i] == Catch::Approx(0.0).margin(1e-9));
  CHECK(eig[4] == Catch::Approx(-2.0).margin(1e-9));
  CHECK(eig[5] == Catch::Approx(-2.0).margin(1e-9));

  // D16 contains 3 +- sqrt 57
  const auto eig16 =
      eigenvalues_numeric(noncommuting_graph(make_dihedral(8)).adjacency_matrix());
  CHECK(eig16.front() == Catch::Approx(3 + std::sqrt(57.0)).margin(1e-9));
  CHECK(eig16.back() == Catch::Approx(3 - std::sqrt(57.0)).margin(1e-9));
}

TEST_CASE("eigenvalue sums match traces and degree bounds", "[spectrum]") {
  for (int n : {3, 4, 5, 6, 7, 8}) {
    const Graph g = noncommuting_graph(make_dihedral(n));
    const auto eig = eigenvalues_numeric(g.adjacency_matrix());
    double sum = 0;
    for (double v : eig) sum += v;
    CHECK(std::abs(sum) <= static_cast<double>(eig.size()) * 1e-10);
    const double maxdeg = static_cast<double>(g.degree_sequence().back());
    CHECK(eig.front() <= maxdeg + 1e-9);
    CHECK(eig.back() >= -maxdeg - 1e-9);
  }
}

TEST_CASE("grouping numeric eigenvalues into multiplicities", "[spectrum]") {
  const auto grouped = group_eigenvalues({4.0, 0.0, 1e-9, -1e-9, -2.0});
  REQUIRE(grouped.size() == 3);
  CHECK(grouped[0].second == 1);
  CHECK(grouped[1].second == 3);
  CHECK(grouped[2].second == 1);
}

TEST_CASE("exact spectrum assembly for the stated cases", "[spectrum]") {
  // x^3 -> 0 with multiplicity 3
  const Spectrum s0 = assemble_exact_spectrum(IntPolynomial::monomial(3));
  REQUIRE(s0.entries.size() == 1);
  CHECK(s0.entries[0].first.int_value == 0);
  CHECK(s0.entries[0].second == 3);

  // D12 (n = 6): {2+2sqrt7, 0^6, -2^2, 2-2sqrt7}
  const Spectrum s12 = assemble_exact_spectrum(
      charpoly(noncommuting_graph(make_dihedral(6)).adjacency_matrix()));
  CHECK(s12.to_string() ==
        "(2+2*sqrt(7))_1, (0)_6, (-2)_2, (2-2*sqrt(7))_1");

  // GL(2,3): {0^33, -2^5, -4^3, -6^2} plus three numeric cubic roots
  const Spectrum sgl = assemble_exact_spectrum(
      charpoly(noncommuting_graph(make_gl2(3)).adjacency_matrix()));
  CHECK(sgl.total_multiplicity() == 46);
  std::size_t zeros = 0, m2 = 0, m4 = 0, m6 = 0, numeric = 0;
  for (const auto& [root, mult] : sgl.entries) {
    if (root.kind == ExactRoot::Kind::integer) {
      if (root.int_value == 0) zeros = mult;
      if (root.int_value == -2) m2 = mult;
      if (root.int_value == -4) m4 = mult;
      if (root.int_value == -6) m6 = mult;
    } else if (root.kind == ExactRoot::Kind::numeric) {
      numeric += mult;
      CHECK(root.error_bound < 1e-6);
    }
  }
  CHECK(zeros == 33);
  CHECK(m2 == 5);
  CHECK(m4 == 3);
  CHECK(m6 == 2);
  CHECK(numeric == 3);
}

TEST_CASE("assembly multiplicities always sum to the degree", "[spectrum]") {
  for (int n = 3; n <= 10; ++n) {
    const Graph g = noncommuting_graph(make_dihedral(n));
    const IntPolynomial p = charpoly(g.adjacency_matrix());
    CHECK(assemble_exact_spectrum(p).total_multiplicity() ==
          g.vertex_count());
    const IntPolynomial lp = charpoly(laplacian(g).matrix);
    CHECK(assemble_exact_spectrum(lp).total_multiplicity() ==
          g.vertex_count());
  }
}

TEST_CASE("energies from table 1", "[spectrum]") {
  // D10: 4 + 4 sqrt 6
  const EnergyValue e10 = energy(noncommuting_graph(make_dihedral(5)));
  REQUIRE(e10.exact);
  CHECK(e10.to_string() == "4+4*sqrt(6)");
  CHECK(e10.numeric == Catch::Approx(4 + 4 * std::sqrt(6.0)).epsilon(1e-12));

  // null graph: zero energy
  const EnergyValue enull = energy(noncommuting_graph(make_cyclic(6)));
  CHECK(enull.numeric == 0.0);
  CHECK(enull.to_string() == "0");

  // D8 x D8: 8(3 + sqrt 33 + 4 sqrt 3)
  const FiniteGroup d8 = make_dihedral(4);
  const EnergyValue ep = energy(noncommuting_graph(direct_product(d8, d8)));
  REQUIRE(ep.exact);
  CHECK(ep.rational == 24);
  CHECK(ep.surds.at(Int(3)) == 32);
  CHECK(ep.surds.at(Int(33)) == 8);
  CHECK(ep.numeric ==
        Catch::Approx(8 * (3 + std::sqrt(33.0) + 4 * std::sqrt(3.0)))
            .epsilon(1e-12));
}

TEST_CASE("exact energy agrees with the numeric eigensolver", "[spectrum]") {
  std::vector<Graph> corpus;
  for (int n = 3; n <= 10; ++n) {
    corpus.push_back(noncommuting_graph(make_dihedral(n)));
  }
  corpus.push_back(noncommuting_graph(make_gl2(3)));
  for (const auto& g : corpus) {
    const EnergyValue exact = energy(g);
    double numeric = 0;
    for (double v : eigenvalues_numeric(g.adjacency_matrix())) {
      numeric += std::abs(v);
    }
    CHECK(std::abs(exact.numeric - numeric) < 1e-8);
  }
}

TEST_CASE("laplacian energy as exact rationals", "[spectrum]") {
  // table 2: D12 -> 108/5, D8 -> 8; definition-based D10 -> 70/3
  const EnergyValue le12 = laplacian_energy(noncommuting_graph(make_dihedral(6)));
  REQUIRE(le12.exact);
  CHECK(le12.rational == Rat(108, 5));
  CHECK(le12.to_string() == "108/5");

  const EnergyValue le8 = laplacian_energy(noncommuting_graph(make_dihedral(4)));
  CHECK(le8.rational == 8);

  const EnergyValue le10 = laplacian_energy(noncommuting_graph(make_dihedral(5)));
  CHECK(le10.rational == Rat(70, 3));
}

TEST_CASE("laplacian spectrum sums to twice the edge count", "[spectrum]") {
  for (int n : {3, 4, 5, 6, 7}) {
    const Graph g = noncommuting_graph(make_dihedral(n));
    const Spectrum s = laplacian_spectrum(g);
    Rat sum = 0;
    for (const auto& [root, mult] : s.entries) {
      REQUIRE(root.kind == ExactRoot::Kind::integer);
      sum += Rat(root.int_value * Int(mult));
    }
    CHECK(sum == Rat(Int(2 * g.edge_count())));
  }
}

TEST_CASE("spectrum json has exact values and multiplicities", "[spectrum]") {
  const Spectrum s = assemble_exact_spectrum(
      charpoly(noncommuting_graph(make_dihedral(5)).adjacency_matrix()));
  const Json j = spectrum_to_json(s);
  REQUIRE(j.size() == 4);
  CHECK(j[0]["kind"] == "surd");
  CHECK(j[0]["value"] == "2+2*sqrt(6)");
  CHECK(j[0]["multiplicity"] == 1);
  CHECK(j[1]["kind"] == "integer");
}
