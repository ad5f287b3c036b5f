#include <catch_amalgamated.hpp>

#include "noncomm/charpoly.hpp"
#include "noncomm/gl2.hpp"
#include "noncomm/graph.hpp"
#include "noncomm/json_io.hpp"

using namespace noncomm;

namespace {

// the piecewise adjacency matrices used in the dihedral spectrum proofs
IMat paper_dihedral_adjacency(int n) {
  const bool even = n % 2 == 0;
  const std::size_t verts = even ? 2 * n - 2 : 2 * n - 1;
  IMat a(verts, std::vector<std::int64_t>(verts, 1));
  for (std::size_t i = 0; i < verts; ++i) a[i][i] = 0;
  const std::size_t rot = even ? n - 2 : n - 1;
  for (std::size_t i = 0; i < rot; ++i) {
    for (std::size_t j = 0; j < rot; ++j) a[i][j] = 0;
  }
  if (even) {
    // 1-indexed k = n-1, n+1, ..., 2n-3: 2x2 zero blocks of paired
    // reflections
    for (std::size_t k = static_cast<std::size_t>(n) - 1;
         k <= 2 * static_cast<std::size_t>(n) - 3; k += 2) {
      for (std::size_t t = 0; t < 2; ++t) {
        for (std::size_t s = 0; s < 2; ++s) a[k - 1 + t][k - 1 + s] = 0;
      }
    }
  }
  return a;
}

}  // namespace

TEST_CASE("non-commuting graph vertex and edge counts", "[graph]") {
  const Graph d6 = noncommuting_graph(make_dihedral(3));
  CHECK(d6.vertex_count() == 5);
  CHECK(d6.edge_count() == 9);

  const Graph d8 = noncommuting_graph(make_dihedral(4));
  CHECK(d8.vertex_count() == 6);
  CHECK(d8.edge_count() == 12);

  const Graph gl3 = noncommuting_graph(make_gl2(3));
  CHECK(gl3.vertex_count() == 46);

  // abelian input: explicit null graph, not an error
  const Graph null = noncommuting_graph(make_cyclic(4));
  CHECK(null.vertex_count() == 0);
  CHECK(null.edge_count() == 0);
  CHECK(null.degree_sequence().empty());
}

TEST_CASE("adjacency equals the proofs' piecewise matrices, entry for entry",
          "[graph]") {
  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    const Graph g = noncommuting_graph(make_dihedral(n));
    CHECK(g.adjacency_matrix() == paper_dihedral_adjacency(n));
  }
}

TEST_CASE("dihedral degree sequences", "[graph]") {
  // n = 6: rotations have degree n, reflections 2n-4
  const Graph d12 = noncommuting_graph(make_dihedral(6));
  auto degs = d12.degrees();
  std::size_t deg6 = 0, deg8 = 0;
  for (auto d : degs) {
    deg6 += d == 6;
    deg8 += d == 8;
  }
  CHECK(deg6 == 4);   // n - 2 non-central rotations
  CHECK(deg8 == 6);   // n reflections
  // n = 5: degrees {5 x4, 8 x5}
  const Graph d10 = noncommuting_graph(make_dihedral(5));
  const std::vector<std::size_t> expect{5, 5, 5, 5, 8, 8, 8, 8, 8};
  CHECK(d10.degree_sequence() == expect);
}

TEST_CASE("augmented adjacency isolates the center", "[graph]") {
  const FiniteGroup d8 = make_dihedral(4);
  const Graph aug = augmented_adjacency(d8);
  REQUIRE(aug.vertex_count() == 8);
  // char poly picks up a factor x^|Z|
  const IntPolynomial paug = charpoly(aug.adjacency_matrix());
  const IntPolynomial pg =
      charpoly(noncommuting_graph(d8).adjacency_matrix());
  CHECK(paug == IntPolynomial::monomial(2) * pg);
  // deleting the isolated vertices recovers the graph exactly
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < aug.vertex_count(); ++v) {
    if (aug.degree(v) > 0) keep.push_back(v);
  }
  const Graph restored = aug.induced(keep);
  const Graph direct = noncommuting_graph(d8);
  REQUIRE(restored.vertex_count() == direct.vertex_count());
  CHECK(restored.adjacency_matrix() == direct.adjacency_matrix());
  CHECK(restored.vertex_labels() == direct.vertex_labels());

  // abelian group: all-zero matrix
  const Graph zero = augmented_adjacency(make_cyclic(4));
  CHECK(zero.vertex_count() == 4);
  CHECK(zero.edge_count() == 0);
}

TEST_CASE("laplacian rows sum to zero", "[graph]") {
  for (int n : {3, 4, 5, 6}) {
    const Graph g = noncommuting_graph(make_dihedral(n));
    const LaplacianMatrix lap = laplacian(g);
    for (const auto& row : lap.matrix) {
      std::int64_t sum = 0;
      for (auto v : row) sum += v;
      CHECK(sum == 0);
    }
  }
  // edgeless graph: zero Laplacian
  const LaplacianMatrix zero = laplacian(augmented_adjacency(make_cyclic(3)));
  for (const auto& row : zero.matrix) {
    for (auto v : row) CHECK(v == 0);
  }
}

TEST_CASE("complete multipartite detection", "[graph]") {
  const auto d8_parts =
      is_complete_multipartite(noncommuting_graph(make_dihedral(4)));
  REQUIRE(d8_parts.has_value());
  CHECK(d8_parts->sizes == std::vector<std::int64_t>{2, 2, 2});

  const auto d10_parts =
      is_complete_multipartite(noncommuting_graph(make_dihedral(5)));
  REQUIRE(d10_parts.has_value());
  CHECK(d10_parts->sizes == std::vector<std::int64_t>{4, 1, 1, 1, 1, 1});

  const auto gl3_parts =
      is_complete_multipartite(noncommuting_graph(make_gl2(3)));
  REQUIRE(gl3_parts.has_value());
  CHECK(gl3_parts->sizes ==
        std::vector<std::int64_t>{6, 6, 6, 4, 4, 4, 4, 2, 2, 2, 2, 2, 2});

  // a path on 4 vertices is not complete multipartite
  const Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(is_complete_multipartite(p4).has_value());
}

TEST_CASE("dihedral partition shapes for all n", "[graph]") {
  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    const auto parts =
        is_complete_multipartite(noncommuting_graph(make_dihedral(n)));
    REQUIRE(parts.has_value());
    std::vector<std::int64_t> expect;
    if (n % 2 == 0) {
      expect.assign(static_cast<std::size_t>(n) / 2, 2);
      expect.insert(expect.begin(), n - 2);
      std::sort(expect.begin(), expect.end(), std::greater<>());
    } else {
      expect.assign(static_cast<std::size_t>(n), 1);
      expect.insert(expect.begin(), n - 1);
    }
    CHECK(parts->sizes == expect);
  }
}

TEST_CASE("multipartite builder and detector are inverse", "[graph]") {
  const PartitionSizes sizes{{5, 3, 3, 1}};
  const auto detected =
      is_complete_multipartite(complete_multipartite_graph(sizes));
  REQUIRE(detected.has_value());
  CHECK(*detected == sizes);
}

TEST_CASE("graph json export", "[graph]") {
  const Graph g = noncommuting_graph(make_dihedral(3));
  const Json j = graph_to_json(g);
  CHECK(j["vertices"] == 5);
  CHECK(j["edges"].size() == 9);
  CHECK(j["labels"].size() == 5);
  CHECK(j["labels"][0] == "r^1");
}

TEST_CASE("from_adjacency validates shape", "[graph]") {
  CHECK_THROWS_AS(Graph::from_adjacency({{0, 1}, {0, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_adjacency({{1, 1}, {1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_adjacency({{0, 2}, {2, 0}}),
                  std::invalid_argument);
  const Graph ok = Graph::from_adjacency({{0, 1}, {1, 0}});
  CHECK(ok.edge_count() == 1);
}
