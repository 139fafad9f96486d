#pragma once

// Brute-force reference routines for tests. None of these call into the
// clique or colouring search they are used to check.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman::oracle {

inline bool is_clique(const Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

/// Largest clique by enumerating every vertex subset.
inline std::size_t clique_number(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> vs;
    for (std::size_t v = 0; v < n; ++v)
      if ((mask >> v) & 1) vs.push_back(static_cast<int>(v));
    if (vs.size() > best && is_clique(g, vs)) best = vs.size();
  }
  return best;
}

/// Does `members` contain k pairwise adjacent vertices? Enumerates k-subsets.
inline bool contains_clique(const Graph& g, const std::vector<int>& members, int k) {
  if (k <= 0) return true;
  if (static_cast<int>(members.size()) < k) return false;
  std::vector<int> pick;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
    if (static_cast<int>(pick.size()) == k) return is_clique(g, pick);
    for (std::size_t i = from; i < members.size(); ++i) {
      pick.push_back(members[i]);
      if (rec(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

/// Tries all r^n colourings; true iff none is free. parts may contain any positive values.
inline bool arrows(const Graph& g, const std::vector<int>& parts) {
  const std::size_t n = g.order();
  const std::size_t r = parts.size();
  if (r == 0) return n > 0;
  std::vector<int> colour(n, 0);
  while (true) {
    bool free = true;
    for (std::size_t c = 0; c < r && free; ++c) {
      std::vector<int> members;
      for (std::size_t v = 0; v < n; ++v)
        if (colour[v] == static_cast<int>(c)) members.push_back(static_cast<int>(v));
      if (contains_clique(g, members, parts[c])) free = false;
    }
    if (free) return false;
    std::size_t i = 0;
    while (i < n && ++colour[i] == static_cast<int>(r)) colour[i++] = 0;
    if (i == n) return true;
  }
}

/// Proper r-colouring by plain backtracking in index order.
inline bool properly_colourable(const Graph& g, int r) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  std::function<bool(std::size_t)> rec = [&](std::size_t v) -> bool {
    if (v == n) return true;
    for (int c = 0; c < r; ++c) {
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u)
        if (colour[u] == c && g.adjacent(static_cast<int>(u), static_cast<int>(v))) ok = false;
      if (!ok) continue;
      colour[v] = c;
      if (rec(v + 1)) return true;
    }
    colour[v] = -1;
    return false;
  };
  return rec(0);
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return Graph::from_edges(n, edges);
}

/// The labelled graph on n vertices whose edge set is the bit pattern `mask`
/// over pairs (u, v), u < v, in lexicographic order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return Graph::from_edges(n, edges);
}

/// Minimum of sum cost(b_i) over every multiset of parts >= lo summing to total,
/// by explicit enumeration of nondecreasing sequences. INT_MAX if none has finite cost.
inline int min_over_compositions(int total, int lo, const std::function<int(int)>& cost) {
  int best = INT_MAX;
  std::function<void(int, int, long long)> rec = [&](int remaining, int min_part, long long acc) {
    if (remaining == 0) {
      best = static_cast<int>(std::min<long long>(best, acc));
      return;
    }
    for (int b = min_part; b <= remaining; ++b) {
      const int c = cost(b);
      if (c == INT_MAX) continue;
      rec(remaining - b, b, acc + c);
    }
  };
  rec(total, lo, 0);
  return best;
}

}  // namespace folkman::oracle
