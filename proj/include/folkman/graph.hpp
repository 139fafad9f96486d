#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "folkman/vertex_set.hpp"

namespace folkman {

using Edge = std::pair<int, int>;

/// Immutable finite simple graph on vertices 0..n-1 with bitset adjacency.
///
/// Adjacency is kept symmetric and irreflexive, and no bit at or above n is
/// ever set. Graphs never change after construction; derived graphs
/// (joins, added edges) are new values.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : n_(n), adj_(n) { check_order(n); }

  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.link(u, v);
    return g;
  }

  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Built from a full adjacency list; rows must be symmetric, loop-free and in range.
  static Graph from_adjacency(std::vector<VertexSet> rows) {
    Graph g(rows.size());
    const VertexSet all = g.vertices();
    for (std::size_t v = 0; v < rows.size(); ++v) {
      if (rows[v].contains(static_cast<int>(v)) || !(rows[v] - all).empty())
        throw std::invalid_argument("adjacency row " + std::to_string(v) + " has a loop or an out-of-range vertex");
    }
    for (std::size_t u = 0; u < rows.size(); ++u) {
      rows[u].for_each([&](int v) {
        if (!rows[static_cast<std::size_t>(v)].contains(static_cast<int>(u)))
          throw std::invalid_argument("adjacency is not symmetric");
      });
    }
    g.adj_ = std::move(rows);
    return g;
  }

  std::size_t order() const { return n_; }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.size();
    return twice / 2;
  }

  VertexSet vertices() const { return VertexSet::range(n_); }

  const VertexSet& neighbors(int v) const { return adj_[index(v)]; }

  bool adjacent(int u, int v) const { return adj_[index(u)].contains(v); }

  std::size_t degree(int v) const { return adj_[index(v)].size(); }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < n_; ++u) {
      adj_[u].for_each([&](int v) {
        if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<int>(u), v);
      });
    }
    return out;
  }

  Graph with_edge(int u, int v) const {
    Graph g = *this;
    g.link(u, v);
    return g;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph join(const Graph&, const Graph&);
  friend Graph complement(const Graph&);

  static void check_order(std::size_t n) {
    if (n > kMaxVertices)
      throw std::length_error("graph order " + std::to_string(n) + " exceeds the bitset width of " +
                              std::to_string(kMaxVertices) + " vertices");
  }

  std::size_t index(int v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= n_)
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
    return static_cast<std::size_t>(v);
  }

  void link(int u, int v) {
    index(u);
    index(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
  }

  std::size_t n_ = 0;
  std::vector<VertexSet> adj_;
};

/// K_n.
inline Graph complete(std::size_t n) {
  Graph g(n);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return Graph::from_edges(n, edges);
}

/// C_n with edges {i, i+1 mod n}; n >= 3.
inline Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(static_cast<int>(i), static_cast<int>((i + 1) % n));
  return Graph::from_edges(n, edges);
}

/// Join g1 + g2: g1 keeps indices 0..n1-1, g2 is shifted by n1, and every cross pair is an edge.
inline Graph join(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  if (n1 + n2 > kMaxVertices)
    throw std::length_error("join of " + std::to_string(n1) + " and " + std::to_string(n2) +
                            " vertices exceeds the bitset width of " + std::to_string(kMaxVertices));
  Graph g(n1 + n2);
  const VertexSet left = VertexSet::range(n1);
  const VertexSet right = VertexSet::range(n1 + n2) - left;
  for (std::size_t v = 0; v < n1; ++v) g.adj_[v] = g1.adj_[v] | right;
  for (std::size_t v = 0; v < n2; ++v) g.adj_[n1 + v] = g2.adj_[v].shifted(n1) | left;
  return g;
}

inline Graph complement(const Graph& g) {
  Graph out(g.order());
  const VertexSet all = g.vertices();
  for (std::size_t v = 0; v < g.order(); ++v) {
    out.adj_[v] = all - g.adj_[v];
    out.adj_[v].erase(static_cast<int>(v));
  }
  return out;
}

}  // namespace folkman
