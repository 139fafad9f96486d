#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "folkman/graph_io.hpp"
#include "oracles.hpp"

namespace folkman {
namespace {

std::vector<Graph> corpus() {
  std::vector<Graph> out = {complete(0), complete(1), complete(2), cycle(5), complete(13), join(cycle(5), cycle(5)),
                            complement(cycle(63))};
  std::mt19937_64 rng(5);
  for (int i = 0; i < 150; ++i) out.push_back(oracle::random_graph(rng, rng() % (kMaxVertices + 1), 0.4));
  return out;
}

TEST(Graph6Test, KnownStrings) {
  const Graph c5 = parse_graph6("Dhc");
  EXPECT_EQ(c5, cycle(5));
  EXPECT_EQ(to_graph6(c5), "Dhc");
  EXPECT_EQ(to_graph6(complete(5)), "D~{");
  EXPECT_EQ(to_graph6(complete(0)), "?");
  EXPECT_EQ(parse_graph6("?").order(), 0u);
  EXPECT_EQ(parse_graph6("@").order(), 1u);
}

TEST(Graph6Test, LongOrderPrefix) {
  const Graph g = complement(cycle(63));
  const std::string s = to_graph6(g);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(parse_graph6(s), g);
}

TEST(Graph6Test, TrailingNewlineAccepted) { EXPECT_EQ(parse_graph6("Dhc\n"), cycle(5)); }

TEST(Graph6Test, MalformedInput) {
  EXPECT_THROW(parse_graph6("Dhcx"), ParseError);   // trailing junk
  EXPECT_THROW(parse_graph6("Dh"), ParseError);     // truncated
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("Dhd"), ParseError);    // padding bit set
  EXPECT_THROW(parse_graph6("D h"), ParseError);    // byte outside 63..126
  EXPECT_THROW(parse_graph6(":Fa@x^"), ParseError); // sparse6
  try {
    parse_graph6("Dhc!");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 4u);
  }
}

TEST(EdgeListTest, ParsesPath) {
  const Graph g = parse_edge_list("n 3\n0 1\n1 2\n");
  EXPECT_EQ(g, Graph::from_edges(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(to_edge_list(g), "n 3\n0 1\n1 2\n");
}

TEST(EdgeListTest, CommentsAndBlankLines) {
  const Graph g = parse_edge_list("# a path\n\nn 3   # three\n0 1\n\n2 1\n");
  EXPECT_EQ(g, Graph::from_edges(3, {{0, 1}, {1, 2}}));
}

TEST(EdgeListTest, ErrorsCarryLineNumbers) {
  try {
    parse_edge_list("n 3\n0 5\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(parse_edge_list("0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("n 3\n1 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 3\n0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 3\n0 x\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 65536\n"), ParseError);
}

TEST(GraphIoTest, RoundTripOnCorpus) {
  for (const Graph& g : corpus()) {
    for (auto format : {GraphFormat::graph6, GraphFormat::edge_list}) {
      const std::string text = serialize_graph(g, format);
      const Graph back = parse_graph(text, format);
      ASSERT_EQ(back, g);
      ASSERT_EQ(serialize_graph(back, format), text);
    }
  }
}

TEST(GraphIoTest, FilesAndFormatInference) {
  const auto dir = std::filesystem::temp_directory_path() / "folkman_io_test";
  std::filesystem::create_directories(dir);
  const Graph g = join(complete(1), cycle(5));
  {
    std::ofstream(dir / "w.g6") << to_graph6(g) << "\n";
    std::ofstream(dir / "w.el") << to_edge_list(g);
    std::ofstream(dir / "w.txt") << to_edge_list(g);
    std::ofstream(dir / "w6.dat") << to_graph6(g) << "\n";
  }
  EXPECT_EQ(read_graph_file(dir / "w.g6"), g);
  EXPECT_EQ(read_graph_file(dir / "w.el"), g);
  EXPECT_EQ(read_graph_file(dir / "w.txt"), g);
  EXPECT_EQ(read_graph_file(dir / "w6.dat"), g);
  EXPECT_EQ(read_graph_file(dir / "w.txt", GraphFormat::edge_list), g);
  EXPECT_THROW(read_graph_file(dir / "w.el", GraphFormat::graph6), ParseError);
  EXPECT_THROW(read_graph_file(dir / "missing.g6"), std::runtime_error);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace folkman
