#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "folkman/errors.hpp"
#include "folkman/graph.hpp"

namespace folkman {

enum class GraphFormat { graph6, edge_list };

inline std::string_view format_name(GraphFormat f) {
  return f == GraphFormat::graph6 ? "graph6" : "edge-list";
}

inline std::optional<GraphFormat> parse_format_name(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "edge-list" || name == "edgelist" || name == "el") return GraphFormat::edge_list;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// graph6

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// Parses a single graph6 record. Trailing whitespace is allowed, anything else after
/// the record is rejected, as are nonzero padding bits.
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  std::size_t pos = 0;
  if (text.substr(0, header.size()) == header) pos = header.size();
  if (pos < text.size() && text[pos] == ':') throw ParseError("sparse6 input is not supported", 1, pos + 1);

  auto sextet = [&](std::size_t at) -> int {
    if (at >= text.size()) throw ParseError("unexpected end of graph6 data", 1, at + 1);
    const auto c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("byte outside the printable graph6 range 63..126", 1, at + 1);
    return c - 63;
  };

  std::size_t n = 0;
  const int lead = sextet(pos);
  if (lead < 63) {
    n = static_cast<std::size_t>(lead);
    pos += 1;
  } else {
    if (sextet(pos + 1) == 63) throw ParseError("graph6 order exceeds the bitset width", 1, pos + 2);
    n = (static_cast<std::size_t>(sextet(pos + 1)) << 12) | (static_cast<std::size_t>(sextet(pos + 2)) << 6) |
        static_cast<std::size_t>(sextet(pos + 3));
    pos += 4;
  }
  if (n > kMaxVertices)
    throw ParseError("graph6 order " + std::to_string(n) + " exceeds the bitset width of " +
                         std::to_string(kMaxVertices),
                     1, 1);

  const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t b = 0; b < bytes; ++b) {
    const int value = sextet(pos + b);
    for (int bit = 5; bit >= 0; --bit, ++k) {
      const bool set = ((value >> bit) & 1) != 0;
      if (k >= bits) {
        if (set) throw ParseError("nonzero padding bits in graph6 data", 1, pos + b + 1);
        continue;
      }
      if (set) {
        // k enumerates (i, j) column by column: j = 1..n-1, i = 0..j-1.
        std::size_t j = 1;
        std::size_t base = 0;
        while (base + j <= k) {
          base += j;
          ++j;
        }
        edges.emplace_back(static_cast<int>(k - base), static_cast<int>(j));
      }
    }
  }
  pos += bytes;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("trailing data after graph6 record", 1, i + 1);
  }
  return Graph::from_edges(n, edges);
}

// ---------------------------------------------------------------------------
// edge list: header "n <count>", then one "u v" pair per line; '#' starts a comment

inline std::string to_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> order;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::pair<std::string_view, std::size_t>> tokens;  // token, 1-based column
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      tokens.emplace_back(line.substr(i, j - i), i + 1);
      i = j;
    }

    auto number = [&](std::size_t t) -> long long {
      const auto [tok, col] = tokens[t];
      long long value = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
        throw ParseError("expected a nonnegative integer, got '" + std::string(tok) + "'", line_no, col);
      return value;
    };

    if (!tokens.empty()) {
      if (!order) {
        if (tokens.size() != 2 || tokens[0].first != "n")
          throw ParseError("expected header line 'n <count>'", line_no, tokens[0].second);
        const auto n = number(1);
        if (static_cast<unsigned long long>(n) > kMaxVertices)
          throw ParseError("order " + std::to_string(n) + " exceeds the bitset width of " +
                               std::to_string(kMaxVertices),
                           line_no, tokens[1].second);
        order = static_cast<std::size_t>(n);
      } else {
        if (tokens.size() != 2) throw ParseError("expected an edge 'u v'", line_no, tokens[0].second);
        const auto u = number(0);
        const auto v = number(1);
        for (auto [w, col] : {std::pair{u, tokens[0].second}, std::pair{v, tokens[1].second}}) {
          if (static_cast<std::size_t>(w) >= *order)
            throw ParseError("vertex " + std::to_string(w) + " out of range for order " + std::to_string(*order),
                             line_no, col);
        }
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no, tokens[0].second);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (!order) throw ParseError("missing header line 'n <count>'", line_no, 1);
  return Graph::from_edges(*order, edges);
}

// ---------------------------------------------------------------------------

inline Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

inline std::string serialize_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::graph6 ? to_graph6(g) + "\n" : to_edge_list(g);
}

/// Format implied by a file extension (.g6/.graph6, .el/.edges), if any.
inline std::optional<GraphFormat> format_from_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".g6" || ext == ".graph6") return GraphFormat::graph6;
  if (ext == ".el" || ext == ".edges") return GraphFormat::edge_list;
  return std::nullopt;
}

/// Content sniffing for inputs without a known extension.
inline GraphFormat guess_format(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '#') return GraphFormat::edge_list;
    if (c == 'n' && i + 1 < text.size() && std::isspace(static_cast<unsigned char>(text[i + 1])))
      return GraphFormat::edge_list;
    return GraphFormat::graph6;
  }
  return GraphFormat::graph6;
}

/// Reads a graph from a file, or from standard input when path is "-".
inline Graph read_graph_file(const std::filesystem::path& path, std::optional<GraphFormat> format = std::nullopt) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open graph file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  if (!format) format = format_from_path(path);
  if (!format) format = guess_format(text);
  if (*format == GraphFormat::graph6) {
    // Leading blank lines are not part of a graph6 record.
    const auto first = text.find_first_not_of(" \t\r\n");
    text = first == std::string::npos ? std::string{} : text.substr(first);
  }
  return parse_graph(text, *format);
}

}  // namespace folkman
