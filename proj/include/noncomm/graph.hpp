#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "noncomm/charpoly.hpp"
#include "noncomm/group.hpp"

namespace noncomm {

/// Undirected simple graph over labeled vertices; adjacency stored as
/// packed bit rows. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(std::size_t vertex_count,
                          const std::vector<std::pair<std::size_t,
                                                      std::size_t>>& edges,
                          std::vector<std::string> labels = {}) {
    Graph g(vertex_count, std::move(labels));
    for (auto [u, v] : edges) g.set_edge(u, v);
    return g;
  }

  static Graph from_adjacency(const IMat& a,
                              std::vector<std::string> labels = {}) {
    Graph g(a.size(), std::move(labels));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].size() != a.size()) {
        throw std::invalid_argument("adjacency matrix must be square");
      }
      if (a[i][i] != 0) {
        throw std::invalid_argument("adjacency diagonal must be zero");
      }
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        if (a[i][j] != a[j][i] || (a[i][j] != 0 && a[i][j] != 1)) {
          throw std::invalid_argument("adjacency must be symmetric 0/1");
        }
        if (a[i][j]) g.set_edge(i, j);
      }
    }
    return g;
  }

  std::size_t vertex_count() const { return n_; }

  bool adjacent(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }

  std::size_t degree(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      d += static_cast<std::size_t>(__builtin_popcountll(bits_[i * words_ + w]));
    }
    return d;
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(n_);
    for (std::size_t i = 0; i < n_; ++i) d[i] = degree(i);
    return d;
  }

  /// Sorted ascending.
  std::vector<std::size_t> degree_sequence() const {
    auto d = degrees();
    std::sort(d.begin(), d.end());
    return d;
  }

  std::size_t edge_count() const {
    auto d = degrees();
    return std::accumulate(d.begin(), d.end(), std::size_t{0}) / 2;
  }

  const std::vector<std::string>& vertex_labels() const { return labels_; }

  IMat adjacency_matrix() const {
    IMat a(n_, std::vector<std::int64_t>(n_, 0));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) a[i][j] = adjacent(i, j) ? 1 : 0;
    }
    return a;
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (adjacent(i, j)) out.emplace_back(i, j);
      }
    }
    return out;
  }

  /// Subgraph induced on the kept vertices, in their current order.
  Graph induced(const std::vector<std::size_t>& keep) const {
    Graph g(keep.size());
    g.labels_.reserve(keep.size());
    for (auto v : keep) {
      g.labels_.push_back(v < labels_.size() ? labels_[v] : std::string{});
    }
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (std::size_t j = i + 1; j < keep.size(); ++j) {
        if (adjacent(keep[i], keep[j])) g.set_edge(i, j);
      }
    }
    return g;
  }

 private:
  explicit Graph(std::size_t n, std::vector<std::string> labels = {})
      : n_(n), words_((n + 63) / 64), bits_(n * words_, 0),
        labels_(std::move(labels)) {}

  void set_edge(std::size_t i, std::size_t j) {
    if (i == j || i >= n_ || j >= n_) {
      throw std::invalid_argument("bad edge");
    }
    bits_[i * words_ + j / 64] |= 1ull << (j % 64);
    bits_[j * words_ + i / 64] |= 1ull << (i % 64);
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_;
};

/// L = D - A as a plain integer matrix; rows sum to zero by construction.
struct LaplacianMatrix {
  IMat matrix;

  explicit LaplacianMatrix(const Graph& g) {
    const std::size_t n = g.vertex_count();
    matrix.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      matrix[i][i] = static_cast<std::int64_t>(g.degree(i));
      for (std::size_t j = 0; j < n; ++j) {
        if (g.adjacent(i, j)) matrix[i][j] = -1;
      }
    }
  }
};

inline LaplacianMatrix laplacian(const Graph& g) { return LaplacianMatrix(g); }

/// Non-commuting graph: vertices are the non-central elements in the
/// group's canonical order, an edge joins x,y iff xy != yx. An abelian
/// group yields the explicit null graph (zero vertices).
inline Graph noncommuting_graph(const FiniteGroup& g) {
  const auto z = center(g);
  std::vector<bool> central(g.order(), false);
  for (auto e : z) central[e] = true;
  std::vector<FiniteGroup::Element> verts;
  for (FiniteGroup::Element x = 0; x < g.order(); ++x) {
    if (!central[x]) verts.push_back(x);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (!g.commutes(verts[i], verts[j])) edges.emplace_back(i, j);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(verts.size());
  for (auto v : verts) labels.push_back(g.element_name(v));
  return Graph::from_edges(verts.size(), edges, std::move(labels));
}

/// The A^0 variant: vertex set is the whole group, so central elements sit
/// as isolated vertices. Deleting them recovers noncommuting_graph(g).
inline Graph augmented_adjacency(const FiniteGroup& g) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (FiniteGroup::Element i = 0; i < g.order(); ++i) {
    for (FiniteGroup::Element j = i + 1; j < g.order(); ++j) {
      if (!g.commutes(i, j)) edges.emplace_back(i, j);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(g.order());
  for (FiniteGroup::Element x = 0; x < g.order(); ++x) {
    labels.push_back(g.element_name(x));
  }
  return Graph::from_edges(g.order(), edges, std::move(labels));
}

/// Part sizes of a complete multipartite graph, sorted non-increasing.
struct PartitionSizes {
  std::vector<std::int64_t> sizes;

  std::int64_t total() const {
    return std::accumulate(sizes.begin(), sizes.end(), std::int64_t{0});
  }
  std::size_t part_count() const { return sizes.size(); }
  friend bool operator==(const PartitionSizes&, const PartitionSizes&) =
      default;
};

/// K_{n_1,...,n_p}: parts are laid out consecutively, all cross edges.
inline Graph complete_multipartite_graph(const PartitionSizes& parts) {
  std::size_t n = 0;
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.sizes.size(); ++p) {
    if (parts.sizes[p] <= 0) {
      throw std::invalid_argument("complete_multipartite_graph: positive "
                                  "sizes only");
    }
    for (std::int64_t i = 0; i < parts.sizes[p]; ++i) part_of.push_back(p);
    n += static_cast<std::size_t>(parts.sizes[p]);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (part_of[i] != part_of[j]) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

/// Detects complete multipartite structure: the complement's connected
/// components must be cliques in the complement (independent sets here),
/// with every cross edge present. O(V^2).
inline std::optional<PartitionSizes> is_complete_multipartite(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> part(n, -1);
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t s = 0; s < n; ++s) {
    if (part[s] >= 0) continue;
    const int id = static_cast<int>(parts.size());
    parts.emplace_back();
    std::vector<std::size_t> stack{s};
    part[s] = id;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      parts[static_cast<std::size_t>(id)].push_back(u);
      for (std::size_t v = 0; v < n; ++v) {
        if (v != u && !g.adjacent(u, v) && part[v] < 0) {
          part[v] = id;
          stack.push_back(v);
        }
      }
    }
  }
  // within a part: no edges; across parts: all edges
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const bool same = part[u] == part[v];
      if (same == g.adjacent(u, v)) return std::nullopt;
    }
  }
  PartitionSizes out;
  out.sizes.reserve(parts.size());
  for (const auto& p : parts) {
    out.sizes.push_back(static_cast<std::int64_t>(p.size()));
  }
  std::sort(out.sizes.begin(), out.sizes.end(), std::greater<>());
  return out;
}

}  // namespace noncomm
