#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

namespace detail {

inline bool find_clique_in(const Graph& g, VertexSet candidates, std::size_t k, VertexSet& chosen) {
  if (k == 0) return true;
  if (candidates.size() < k) return false;
  if (k == 1) {
    chosen.insert(candidates.first());
    return true;
  }
  while (candidates.size() >= k) {
    const int v = candidates.pop_first();
    // Only later vertices remain; cliques through earlier ones were already ruled out.
    const VertexSet next = g.neighbors(v) & candidates;
    if (next.size() + 1 < k) continue;
    chosen.insert(v);
    if (find_clique_in(g, next, k - 1, chosen)) return true;
    chosen.erase(v);
  }
  return false;
}

// Greedy sequential colouring of `candidates`; vertices come out grouped by
// colour class with bounds[i] = colour count used up to order[i].
inline void colour_sort(const Graph& g, VertexSet candidates, std::vector<int>& order, std::vector<int>& bounds) {
  order.clear();
  bounds.clear();
  int colour = 0;
  while (!candidates.empty()) {
    ++colour;
    VertexSet available = candidates;
    while (!available.empty()) {
      const int v = available.pop_first();
      available -= g.neighbors(v);
      candidates.erase(v);
      order.push_back(v);
      bounds.push_back(colour);
    }
  }
}

inline void expand_max_clique(const Graph& g, VertexSet current, VertexSet candidates, VertexSet& best) {
  std::vector<int> order;
  std::vector<int> bounds;
  colour_sort(g, candidates, order, bounds);
  const std::size_t depth = current.size();
  for (std::size_t i = order.size(); i-- > 0;) {
    if (depth + static_cast<std::size_t>(bounds[i]) <= best.size()) return;
    const int v = order[i];
    VertexSet grown = current;
    grown.insert(v);
    const VertexSet next = candidates & g.neighbors(v);
    if (next.empty()) {
      if (grown.size() > best.size()) best = grown;
    } else {
      expand_max_clique(g, grown, next, best);
    }
    candidates.erase(v);
  }
}

}  // namespace detail

/// A k-clique inside the induced subgraph on `subset`, if one exists.
inline std::optional<VertexSet> find_clique(const Graph& g, const VertexSet& subset, std::size_t k) {
  VertexSet chosen;
  if (detail::find_clique_in(g, subset & g.vertices(), k, chosen)) return chosen;
  return std::nullopt;
}

/// True iff the subgraph induced by `subset` contains a k-clique (k = 0 is always true).
inline bool has_clique(const Graph& g, const VertexSet& subset, std::size_t k) {
  VertexSet scratch;
  return detail::find_clique_in(g, subset & g.vertices(), k, scratch);
}

/// One maximum clique (branch and bound with a greedy-colouring bound).
inline VertexSet max_clique(const Graph& g) {
  VertexSet best;
  if (g.order() > 0) detail::expand_max_clique(g, VertexSet{}, g.vertices(), best);
  return best;
}

/// cl(G); 0 for the empty graph.
inline std::size_t clique_number(const Graph& g) { return max_clique(g).size(); }

}  // namespace folkman
