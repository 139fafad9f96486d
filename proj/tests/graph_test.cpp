#include <gtest/gtest.h>

#include <random>

#include "folkman/clique.hpp"
#include "folkman/graph.hpp"
#include "oracles.hpp"

namespace folkman {
namespace {

void expect_well_formed(const Graph& g) {
  for (std::size_t v = 0; v < g.order(); ++v) {
    const int vi = static_cast<int>(v);
    EXPECT_FALSE(g.neighbors(vi).contains(vi));
    EXPECT_TRUE((g.neighbors(vi) - g.vertices()).empty());
    g.neighbors(vi).for_each([&](int u) { EXPECT_TRUE(g.adjacent(u, vi)); });
  }
}

TEST(GraphTest, CompleteGraphs) {
  const Graph k5 = complete(5);
  EXPECT_EQ(k5.order(), 5u);
  EXPECT_EQ(k5.edge_count(), 10u);
  EXPECT_EQ(clique_number(k5), 5u);
  expect_well_formed(k5);

  EXPECT_EQ(complete(1).order(), 1u);
  EXPECT_EQ(complete(1).edge_count(), 0u);
  EXPECT_EQ(clique_number(complete(1)), 1u);
  EXPECT_EQ(complete(0).order(), 0u);
  EXPECT_EQ(clique_number(complete(0)), 0u);
  EXPECT_EQ(clique_number(complete(7)), 7u);
}

TEST(GraphTest, Cycles) {
  EXPECT_EQ(cycle(5).edge_count(), 5u);
  EXPECT_EQ(clique_number(cycle(5)), 2u);
  EXPECT_EQ(cycle(3), complete(3));
  EXPECT_EQ(cycle(7).edge_count(), 7u);
  EXPECT_EQ(clique_number(cycle(7)), 2u);
  EXPECT_THROW(cycle(2), std::invalid_argument);
  EXPECT_THROW(cycle(0), std::invalid_argument);
}

TEST(GraphTest, JoinLayoutAndClique) {
  const Graph g = join(cycle(5), cycle(5));
  EXPECT_EQ(g.order(), 10u);
  EXPECT_EQ(g.edge_count(), 5u + 5u + 25u);
  EXPECT_EQ(clique_number(g), 4u);
  expect_well_formed(g);
  // first operand keeps its labels, the second is shifted by n1
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_TRUE(g.adjacent(5, 6));
  EXPECT_FALSE(g.adjacent(5, 7));
  EXPECT_TRUE(g.adjacent(2, 7));
}

TEST(GraphTest, JoinWithEmptyIsIdentity) {
  const Graph c7 = cycle(7);
  EXPECT_EQ(join(complete(0), c7), c7);
  EXPECT_EQ(join(c7, complete(0)), c7);
}

TEST(GraphTest, WheelCliqueNumber) {
  // Frozen from oracle::clique_number over all 64 subsets.
  const Graph wheel = join(complete(1), cycle(5));
  EXPECT_EQ(oracle::clique_number(wheel), 3u);
  EXPECT_EQ(clique_number(wheel), 3u);
  EXPECT_EQ(wheel.degree(0), 5u);
}

TEST(GraphTest, CycleJoinK2CliqueNumber) {
  const Graph g = join(cycle(5), complete(2));
  EXPECT_EQ(oracle::clique_number(g), 4u);
  EXPECT_EQ(clique_number(g), 4u);
}

TEST(GraphTest, WidthLimitIsAnError) {
  EXPECT_THROW(Graph(kMaxVertices + 1), std::length_error);
  EXPECT_THROW(join(complete(kMaxVertices / 2 + 1), complete(kMaxVertices / 2)), std::length_error);
  EXPECT_NO_THROW(join(complete(kMaxVertices / 2), complete(kMaxVertices / 2)));
  EXPECT_EQ(clique_number(complete(kMaxVertices)), kMaxVertices);
}

TEST(GraphTest, RejectsLoopsAndOutOfRange) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), std::out_of_range);
  EXPECT_THROW(Graph::from_edges(3, {{-1, 2}}), std::out_of_range);
}

TEST(GraphTest, ComplementOfOddCycle) {
  for (std::size_t n : {5u, 7u, 9u, 11u}) {
    const Graph g = complement(cycle(n));
    EXPECT_EQ(g.edge_count(), n * (n - 1) / 2 - n);
    EXPECT_EQ(clique_number(g), (n - 1) / 2);
    expect_well_formed(g);
  }
}

TEST(HasCliqueTest, Examples) {
  const Graph c5 = cycle(5);
  EXPECT_TRUE(has_clique(c5, c5.vertices(), 2));
  EXPECT_FALSE(has_clique(c5, VertexSet{0, 2}, 2));
  EXPECT_FALSE(has_clique(c5, c5.vertices(), 3));
  const Graph k5 = complete(5);
  EXPECT_TRUE(has_clique(k5, VertexSet{1, 3, 4}, 3));
  EXPECT_TRUE(has_clique(k5, VertexSet{0, 2, 4}, 3));
}

TEST(HasCliqueTest, SmallK) {
  const Graph c5 = cycle(5);
  EXPECT_TRUE(has_clique(c5, VertexSet{}, 0));
  EXPECT_FALSE(has_clique(c5, VertexSet{}, 1));
  EXPECT_TRUE(has_clique(c5, VertexSet{3}, 1));
}

TEST(HasCliqueTest, AgreesWithSubsetEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const Graph g = oracle::random_graph(rng, n, 0.3 + 0.5 * static_cast<double>(rng() % 100) / 100.0);
    VertexSet subset;
    std::vector<int> members;
    for (std::size_t v = 0; v < n; ++v) {
      if (rng() % 3 != 0) {
        subset.insert(static_cast<int>(v));
        members.push_back(static_cast<int>(v));
      }
    }
    for (int k = 0; k <= 6; ++k) {
      const bool expected = oracle::contains_clique(g, members, k);
      ASSERT_EQ(has_clique(g, subset, static_cast<std::size_t>(k)), expected) << "trial " << trial << " k " << k;
      const auto found = find_clique(g, subset, static_cast<std::size_t>(k));
      ASSERT_EQ(found.has_value(), expected);
      if (found) {
        EXPECT_EQ(found->size(), static_cast<std::size_t>(k));
        EXPECT_TRUE((*found - subset).empty());
        EXPECT_TRUE(oracle::is_clique(g, found->to_vector()));
      }
    }
  }
}

TEST(CliqueNumberTest, AgreesWithSubsetEnumeration) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = rng() % 8;
    const Graph g = oracle::random_graph(rng, n, static_cast<double>(rng() % 100) / 100.0);
    const VertexSet best = max_clique(g);
    ASSERT_EQ(best.size(), oracle::clique_number(g)) << "trial " << trial;
    ASSERT_TRUE(oracle::is_clique(g, best.to_vector()));
  }
}

TEST(CliqueNumberTest, JoinAddsCliqueNumbers) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g1 = oracle::random_graph(rng, rng() % 8, 0.5);
    const Graph g2 = oracle::random_graph(rng, rng() % 8, 0.5);
    const Graph joined = join(g1, g2);
    const std::size_t expected = oracle::clique_number(g1) + oracle::clique_number(g2);
    ASSERT_EQ(clique_number(joined), expected);
    ASSERT_EQ(oracle::clique_number(joined), expected);
  }
}

TEST(CliqueNumberTest, JoinIsAssociativeInInvariants) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph a = oracle::random_graph(rng, rng() % 6, 0.5);
    const Graph b = oracle::random_graph(rng, rng() % 6, 0.5);
    const Graph c = oracle::random_graph(rng, rng() % 6, 0.5);
    const Graph left = join(join(a, b), c);
    const Graph right = join(a, join(b, c));
    EXPECT_EQ(left.order(), right.order());
    EXPECT_EQ(left.edge_count(), right.edge_count());
    EXPECT_EQ(clique_number(left), clique_number(right));
  }
}

}  // namespace
}  // namespace folkman
