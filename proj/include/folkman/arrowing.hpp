#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "folkman/clique.hpp"
#include "folkman/errors.hpp"
#include "folkman/graph.hpp"
#include "folkman/signature.hpp"

namespace folkman {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct SearchOptions {
  /// Search-tree nodes the engine may expand before giving up; must be positive.
  std::uint64_t budget = kDefaultBudget;
  /// Worker threads; top-level colour choices are split between them.
  unsigned jobs = 1;
};

/// Assignment of every vertex to one colour index 0..r-1 (colour i is bounded by part i).
class Coloring {
 public:
  Coloring() = default;
  Coloring(std::vector<int> colour_of, std::size_t colours) : colour_of_(std::move(colour_of)), colours_(colours) {
    for (int c : colour_of_) {
      if (c < 0 || static_cast<std::size_t>(c) >= colours_) throw std::invalid_argument("colour index out of range");
    }
  }

  std::size_t colours() const { return colours_; }
  std::size_t vertices() const { return colour_of_.size(); }
  int colour_of(int v) const { return colour_of_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& assignment() const { return colour_of_; }

  /// V_1, ..., V_r as vertex sets.
  std::vector<VertexSet> classes() const {
    std::vector<VertexSet> out(colours_);
    for (std::size_t v = 0; v < colour_of_.size(); ++v)
      out[static_cast<std::size_t>(colour_of_[v])].insert(static_cast<int>(v));
    return out;
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> colour_of_;
  std::size_t colours_ = 0;
};

/// True iff `c` colours every vertex of g and class i holds no parts[i]-clique for each i.
inline bool is_free_coloring(const Graph& g, std::span<const int> parts, const Coloring& c) {
  if (c.vertices() != g.order() || c.colours() != parts.size()) return false;
  const auto classes = c.classes();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (has_clique(g, classes[i], static_cast<std::size_t>(parts[i]))) return false;
  }
  return true;
}

enum class Verdict { arrows, free_coloring, undecided };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::arrows: return "arrows";
    case Verdict::free_coloring: return "free-coloring";
    case Verdict::undecided: return "undecided";
  }
  return "?";
}

struct ArrowingOutcome {
  Verdict verdict = Verdict::undecided;
  std::optional<Coloring> coloring;  // set iff verdict == free_coloring
  std::uint64_t nodes = 0;

  bool decided() const { return verdict != Verdict::undecided; }
};

namespace detail {

// Vertices by descending degree, ties by index.
inline std::vector<int> search_order(const Graph& g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

struct SharedSearch {
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t budget = 0;
};

// Depth-first assignment of colours along a fixed vertex order. A colour is
// refused as soon as it would complete a parts[c]-clique in its class, which
// only needs a (parts[c]-1)-clique among the class members adjacent to the
// new vertex. Colours sharing a part value are interchangeable, so colour c
// may only be opened after the previous colour with the same value.
class ColoringSearch {
 public:
  enum class Status { found, exhausted, aborted };

  ColoringSearch(const Graph& g, std::span<const int> parts, SharedSearch& shared)
      : g_(g),
        parts_(parts.begin(), parts.end()),
        order_(search_order(g)),
        previous_same_(parts.size(), -1),
        classes_(parts.size()),
        colour_of_(g.order(), -1),
        shared_(shared) {
    for (std::size_t c = 0; c < parts_.size(); ++c) {
      for (std::size_t d = c; d-- > 0;) {
        if (parts_[d] == parts_[c]) {
          previous_same_[c] = static_cast<int>(d);
          break;
        }
      }
    }
  }

  Status run(std::size_t depth) {
    const Status s = descend(depth);
    flush();
    return s;
  }

  // Every partial assignment of the first `depth` vertices that survives pruning.
  struct Prefix {
    std::vector<VertexSet> classes;
    std::vector<int> colour_of;
  };

  void collect(std::size_t depth, std::size_t target, std::vector<Prefix>& out) {
    if (depth == target) {
      out.push_back({classes_, colour_of_});
      return;
    }
    const int v = order_[depth];
    for (std::size_t c = 0; c < parts_.size(); ++c) {
      if (!allowed(v, c)) continue;
      assign(v, c);
      collect(depth + 1, target, out);
      unassign(v, c);
    }
  }

  void restore(const Prefix& prefix) {
    classes_ = prefix.classes;
    colour_of_ = prefix.colour_of;
  }

  Coloring coloring() const { return Coloring(colour_of_, parts_.size()); }
  std::size_t order() const { return order_.size(); }

 private:
  Status descend(std::size_t depth) {
    if (!charge()) return Status::aborted;
    if (depth == order_.size()) return Status::found;
    const int v = order_[depth];
    for (std::size_t c = 0; c < parts_.size(); ++c) {
      if (!allowed(v, c)) continue;
      assign(v, c);
      const Status s = descend(depth + 1);
      if (s != Status::exhausted) return s;
      unassign(v, c);
    }
    return Status::exhausted;
  }

  bool allowed(int v, std::size_t c) const {
    if (previous_same_[c] >= 0 && classes_[static_cast<std::size_t>(previous_same_[c])].empty()) return false;
    return !has_clique(g_, classes_[c] & g_.neighbors(v), static_cast<std::size_t>(parts_[c] - 1));
  }

  void assign(int v, std::size_t c) {
    classes_[c].insert(v);
    colour_of_[static_cast<std::size_t>(v)] = static_cast<int>(c);
  }

  void unassign(int v, std::size_t c) {
    classes_[c].erase(v);
    colour_of_[static_cast<std::size_t>(v)] = -1;
  }

  static constexpr std::uint64_t kFlushEvery = 1024;

  bool charge() {
    if (++pending_ >= kFlushEvery) {
      flush();
      if (shared_.stop.load(std::memory_order_relaxed)) return false;
    }
    return shared_.nodes.load(std::memory_order_relaxed) + pending_ <= shared_.budget;
  }

  void flush() {
    shared_.nodes.fetch_add(pending_, std::memory_order_relaxed);
    pending_ = 0;
  }

  const Graph& g_;
  std::vector<int> parts_;
  std::vector<int> order_;
  std::vector<int> previous_same_;
  std::vector<VertexSet> classes_;
  std::vector<int> colour_of_;
  SharedSearch& shared_;
  std::uint64_t pending_ = 0;
};

}  // namespace detail

/// Searches for a colouring of g whose class i contains no parts[i]-clique.
///
/// `parts` may be in any order and may contain 1s (a colour with part 1 can
/// hold no vertex). With no parts at all, a nonempty graph arrows and the
/// empty graph has the empty free colouring.
inline ArrowingOutcome find_free_coloring(const Graph& g, std::span<const int> parts, SearchOptions options = {}) {
  if (options.budget == 0) throw std::invalid_argument("search budget must be positive");
  for (int a : parts) {
    if (a <= 0) throw std::invalid_argument("signature parts must be positive");
  }

  detail::SharedSearch shared;
  shared.budget = options.budget;
  ArrowingOutcome outcome;

  auto finish = [&](detail::ColoringSearch::Status status, const detail::ColoringSearch* winner) {
    outcome.nodes = shared.nodes.load();
    if (status == detail::ColoringSearch::Status::found) {
      outcome.verdict = Verdict::free_coloring;
      outcome.coloring = winner->coloring();
    } else if (status == detail::ColoringSearch::Status::exhausted) {
      outcome.verdict = Verdict::arrows;
    } else {
      outcome.verdict = Verdict::undecided;
    }
    return outcome;
  };

  const unsigned jobs = std::max(1u, options.jobs);
  detail::ColoringSearch root(g, parts, shared);
  if (jobs == 1 || g.order() < 2) return finish(root.run(0), &root);

  // Split on the smallest prefix depth that gives every worker several subtrees.
  std::vector<detail::ColoringSearch::Prefix> prefixes;
  std::size_t depth = 0;
  while (depth < root.order()) {
    prefixes.clear();
    root.collect(0, ++depth, prefixes);
    if (prefixes.size() >= 8 * static_cast<std::size_t>(jobs) || prefixes.empty()) break;
  }
  if (prefixes.empty()) return finish(detail::ColoringSearch::Status::exhausted, nullptr);

  std::atomic<std::size_t> next{0};
  std::mutex result_mutex;
  std::optional<Coloring> found;
  std::atomic<bool> aborted{false};

  auto worker = [&] {
    detail::ColoringSearch search(g, parts, shared);
    while (!shared.stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= prefixes.size()) return;
      search.restore(prefixes[i]);
      const auto status = search.run(depth);
      if (status == detail::ColoringSearch::Status::found) {
        std::lock_guard lock(result_mutex);
        if (!found) found = search.coloring();
        shared.stop.store(true);
      } else if (status == detail::ColoringSearch::Status::aborted) {
        if (!shared.stop.load()) aborted.store(true);
        shared.stop.store(true);
      }
    }
  };

  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  outcome.nodes = shared.nodes.load();
  if (found) {
    outcome.verdict = Verdict::free_coloring;
    outcome.coloring = std::move(found);
  } else if (aborted.load()) {
    outcome.verdict = Verdict::undecided;
  } else {
    outcome.verdict = Verdict::arrows;
  }
  return outcome;
}

inline ArrowingOutcome find_free_coloring(const Graph& g, const Signature& sig, SearchOptions options = {}) {
  return find_free_coloring(g, sig.parts(), options);
}

/// G -> (a_1, ..., a_r). Throws BudgetExceeded instead of guessing when the search runs out.
inline bool arrows(const Graph& g, std::span<const int> parts, SearchOptions options = {}) {
  const auto outcome = find_free_coloring(g, parts, options);
  if (!outcome.decided()) throw BudgetExceeded(outcome.nodes);
  return outcome.verdict == Verdict::arrows;
}

inline bool arrows(const Graph& g, const Signature& sig, SearchOptions options = {}) {
  return arrows(g, sig.parts(), options);
}

/// Membership in H(a_1, ..., a_r; q): g arrows the signature and cl(g) < q.
inline bool in_class_H(const Graph& g, const Signature& sig, int q, SearchOptions options = {}) {
  if (q < 1) throw std::invalid_argument("q must be at least 1");
  if (clique_number(g) >= static_cast<std::size_t>(q)) return false;
  return arrows(g, sig, options);
}

/// Parts of the join signature: equal to both inputs except at `position`, where they add.
inline std::vector<int> merge_parts(std::span<const int> first, std::span<const int> second, std::size_t position) {
  if (first.size() != second.size())
    throw std::invalid_argument("signatures have different lengths (" + std::to_string(first.size()) + " and " +
                                std::to_string(second.size()) + ")");
  if (position >= first.size()) throw std::invalid_argument("merge position out of range");
  std::vector<int> merged(first.begin(), first.end());
  for (std::size_t j = 0; j < first.size(); ++j) {
    if (j != position && first[j] != second[j])
      throw std::invalid_argument("signatures differ at position " + std::to_string(j) + ", not only at " +
                                  std::to_string(position));
  }
  merged[position] = first[position] + second[position];
  return merged;
}

/// Exhaustively re-checks one instance of the join lemma: if g1 arrows parts1 and g2
/// arrows parts2 (equal except at `position`, 0-based), the join must arrow the merged
/// parts. Both premises are checked first and a failing premise is an error. A false
/// return therefore means the engine contradicted the lemma.
inline bool verify_lemma_instance(const Graph& g1, std::span<const int> parts1, const Graph& g2,
                                  std::span<const int> parts2, std::size_t position, SearchOptions options = {}) {
  const auto merged = merge_parts(parts1, parts2, position);
  if (!arrows(g1, parts1, options)) throw std::invalid_argument("first graph does not arrow its signature");
  if (!arrows(g2, parts2, options)) throw std::invalid_argument("second graph does not arrow its signature");
  return arrows(join(g1, g2), merged, options);
}

}  // namespace folkman
