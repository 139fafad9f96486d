#pragma once

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "folkman/arrowing.hpp"
#include "folkman/bounds.hpp"
#include "folkman/clique.hpp"
#include "folkman/errors.hpp"
#include "folkman/graph.hpp"
#include "folkman/graph_io.hpp"
#include "folkman/known_values.hpp"
#include "folkman/signature.hpp"

namespace folkman {

enum class WitnessStatus { verified, unverified, refuted };

enum class VerificationMethod {
  none,
  pigeonhole,         // K_m: some class of any colouring has at least a_i vertices
  exhaustive_search,  // arrowing engine exhausted every colouring
  join_lemma,         // join of two verified certificates
};

inline std::string_view status_name(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::verified: return "verified";
    case WitnessStatus::unverified: return "unverified";
    case WitnessStatus::refuted: return "refuted";
  }
  return "?";
}

inline std::string_view method_name(VerificationMethod m) {
  switch (m) {
    case VerificationMethod::none: return "none";
    case VerificationMethod::pigeonhole: return "pigeonhole";
    case VerificationMethod::exhaustive_search: return "exhaustive-search";
    case VerificationMethod::join_lemma: return "join-lemma";
  }
  return "?";
}

/// How a witness graph was built: a named base graph or an operation over children.
struct Construction {
  std::string label;
  std::vector<Construction> children;

  /// "join(K1,co-C7)"; labels containing ( ) , or quotes are written quoted.
  std::string to_string() const {
    std::string out = quote(label);
    if (!children.empty()) {
      out += '(';
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i > 0) out += ',';
        out += children[i].to_string();
      }
      out += ')';
    }
    return out;
  }

  static Construction parse(std::string_view text) {
    std::size_t pos = 0;
    Construction c = parse_node(text, pos);
    if (pos != text.size()) throw ParseError("trailing text in construction", 1, pos + 1);
    return c;
  }

  friend bool operator==(const Construction&, const Construction&) = default;

 private:
  static bool needs_quotes(std::string_view s) {
    return s.empty() || s.find_first_of("(),\"\\") != std::string_view::npos;
  }

  static std::string quote(std::string_view s) {
    if (!needs_quotes(s)) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + '"';
  }

  static Construction parse_node(std::string_view text, std::size_t& pos) {
    Construction c;
    if (pos < text.size() && text[pos] == '"') {
      ++pos;
      while (true) {
        if (pos >= text.size()) throw ParseError("unterminated quoted label", 1, pos + 1);
        char ch = text[pos++];
        if (ch == '"') break;
        if (ch == '\\') {
          if (pos >= text.size()) throw ParseError("dangling escape", 1, pos + 1);
          ch = text[pos++];
        }
        c.label += ch;
      }
    } else {
      const auto end = text.find_first_of("(),", pos);
      c.label = std::string(text.substr(pos, end == std::string_view::npos ? text.npos : end - pos));
      pos = end == std::string_view::npos ? text.size() : end;
      if (c.label.empty()) throw ParseError("empty construction label", 1, pos + 1);
    }
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      while (true) {
        c.children.push_back(parse_node(text, pos));
        if (pos >= text.size()) throw ParseError("unterminated child list", 1, pos + 1);
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        if (text[pos] != ',') throw ParseError("expected ',' or ')'", 1, pos + 1);
        ++pos;
      }
    }
    return c;
  }
};

/// A graph with a claimed membership in H(signature; q) and what is known about the claim.
///
/// Verified means the graph arrows the signature and has clique number < q, so its
/// order is an upper bound on F(signature; q). Refuted certificates carry the
/// counterexample: a free colouring or a clique of size q.
struct WitnessCertificate {
  Graph graph;
  Signature signature;
  int q = 0;
  WitnessStatus status = WitnessStatus::unverified;
  VerificationMethod method = VerificationMethod::none;
  std::optional<Coloring> free_coloring;
  std::optional<VertexSet> clique;
  std::uint64_t nodes = 0;
  Construction construction;

  bool verified() const { return status == WitnessStatus::verified; }

  friend bool operator==(const WitnessCertificate&, const WitnessCertificate&) = default;
};

/// Largest order for which the q = m family is checked exhaustively, by number of colours.
inline std::size_t verification_order_limit(std::size_t colours) {
  if (colours <= 2) return 24;
  if (colours == 3) return 15;
  return 12;
}

namespace detail {

// Checks clique number then arrowing, and fills in status and evidence.
inline void settle(WitnessCertificate& cert, SearchOptions options) {
  const VertexSet big = max_clique(cert.graph);
  if (big.size() >= static_cast<std::size_t>(cert.q)) {
    VertexSet evidence;
    auto members = big.to_vector();
    for (int i = 0; i < cert.q; ++i) evidence.insert(members[static_cast<std::size_t>(i)]);
    cert.status = WitnessStatus::refuted;
    cert.method = VerificationMethod::none;
    cert.clique = evidence;
    return;
  }
  const auto outcome = find_free_coloring(cert.graph, cert.signature, options);
  cert.nodes = outcome.nodes;
  switch (outcome.verdict) {
    case Verdict::arrows:
      cert.status = WitnessStatus::verified;
      cert.method = VerificationMethod::exhaustive_search;
      break;
    case Verdict::free_coloring:
      cert.status = WitnessStatus::refuted;
      cert.method = VerificationMethod::none;
      cert.free_coloring = outcome.coloring;
      break;
    case Verdict::undecided:
      cert.status = WitnessStatus::unverified;
      cert.method = VerificationMethod::none;
      break;
  }
}

// Complement of C_{2p+1}: 2p+1 vertices, clique number p. For p = 2 this is C5
// itself (relabelled), so the plain cycle is used.
inline Graph odd_cycle_complement(int p) {
  if (p == 2) return cycle(5);
  return complement(cycle(static_cast<std::size_t>(2 * p + 1)));
}

inline std::string odd_cycle_complement_label(int p) {
  return p == 2 ? "C5" : "co-C" + std::to_string(2 * p + 1);
}

}  // namespace detail

/// Witness from the closed-form cases: K_m for q > m, and K_{m-p-1} + co-C_{2p+1}
/// (m + p vertices, clique number m - 1) for q = m. The q = m graph is always checked by
/// the engine before it is certified; beyond verification_order_limit it stays unverified.
inline WitnessCertificate base_witness(const Signature& sig, int q, SearchOptions options = {}) {
  if (!folkman_exists(sig, q))
    throw std::invalid_argument(folkman_label(sig, q) + " does not exist (q <= max a_i)");
  const int m = sig.m();
  const int p = sig.p();
  WitnessCertificate cert;
  cert.signature = sig;
  cert.q = q;
  if (q > m) {
    cert.graph = complete(static_cast<std::size_t>(m));
    cert.construction = {"K" + std::to_string(m), {}};
    cert.status = WitnessStatus::verified;
    cert.method = VerificationMethod::pigeonhole;
    return cert;
  }
  if (q < m) throw std::invalid_argument("no base construction for " + folkman_label(sig, q) + " (q < m)");

  const int clique_part = m - p - 1;
  cert.graph = join(complete(static_cast<std::size_t>(clique_part)), detail::odd_cycle_complement(p));
  cert.construction = clique_part == 0
                          ? Construction{detail::odd_cycle_complement_label(p), {}}
                          : Construction{"join", {{"K" + std::to_string(clique_part), {}},
                                                  {detail::odd_cycle_complement_label(p), {}}}};
  if (cert.graph.order() > verification_order_limit(sig.size())) {
    cert.status = WitnessStatus::unverified;
    return cert;
  }
  detail::settle(cert, options);
  return cert;
}

/// Join of two verified certificates whose signatures agree except at `position` (0-based).
/// The result claims the merged signature with q = q1 + q2 - 1, sound by the join lemma.
/// With `verify` the engine re-checks it; a refutation throws ConsistencyError.
inline WitnessCertificate compose_witness(const WitnessCertificate& first, const WitnessCertificate& second,
                                          std::size_t position, bool verify, SearchOptions options = {}) {
  if (!first.verified() || !second.verified()) throw std::invalid_argument("only verified certificates can be joined");
  const auto merged = merge_parts(first.signature.parts(), second.signature.parts(), position);
  WitnessCertificate cert;
  cert.signature = Signature::normalize(merged);
  cert.q = first.q + second.q - 1;
  if (!folkman_exists(cert.signature, cert.q))
    throw std::invalid_argument("joined claim " + folkman_label(cert.signature, cert.q) + " is not a Folkman number");
  cert.graph = join(first.graph, second.graph);
  cert.construction = {"join", {first.construction, second.construction}};
  cert.status = WitnessStatus::verified;
  cert.method = VerificationMethod::join_lemma;
  if (!verify) return cert;

  WitnessCertificate checked = cert;
  detail::settle(checked, options);
  if (checked.status == WitnessStatus::refuted)
    throw ConsistencyError("exhaustive check refuted a joined witness for " + folkman_label(cert.signature, cert.q) +
                           "; the engine contradicts the join lemma");
  // An inconclusive re-check leaves the lemma's verdict in place.
  return checked.status == WitnessStatus::verified ? checked : cert;
}

/// Checks a user-supplied graph against a claimed membership in H(sig; q).
inline WitnessCertificate load_external_witness(const std::filesystem::path& path, const Signature& sig, int q,
                                                SearchOptions options = {},
                                                std::optional<GraphFormat> format = std::nullopt) {
  WitnessCertificate cert;
  cert.graph = read_graph_file(path, format);
  cert.signature = sig;
  cert.q = q;
  cert.construction = {"external file " + path.string(), {}};
  detail::settle(cert, options);
  return cert;
}

/// Feeds a verified certificate's order into the table as an upper bound.
inline void record_witness(KnownTable& table, const WitnessCertificate& cert, const std::string& citation) {
  if (!cert.verified()) throw std::invalid_argument("only verified certificates give bounds");
  table.tighten_upper(cert.signature, cert.q, static_cast<int>(cert.graph.order()), citation);
}

// ---------------------------------------------------------------------------
// Text record: one "key value" pair per line.

inline std::string to_record(const WitnessCertificate& cert) {
  std::ostringstream out;
  out << "folkman-certificate 1\n";
  out << "graph6 " << to_graph6(cert.graph) << "\n";
  out << "signature " << cert.signature.to_string() << "\n";
  out << "q " << cert.q << "\n";
  out << "status " << status_name(cert.status) << "\n";
  out << "method " << method_name(cert.method) << "\n";
  out << "nodes " << cert.nodes << "\n";
  out << "construction " << cert.construction.to_string() << "\n";
  if (cert.free_coloring) {
    out << "free-coloring";
    for (int c : cert.free_coloring->assignment()) out << ' ' << (c + 1);
    out << "\n";
  }
  if (cert.clique) {
    out << "clique";
    cert.clique->for_each([&](int v) { out << ' ' << v; });
    out << "\n";
  }
  return out.str();
}

inline WitnessCertificate parse_record(std::string_view text) {
  WitnessCertificate cert;
  bool seen_magic = false;
  bool seen_graph = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto space = line.find(' ');
    const std::string key = line.substr(0, space);
    const std::string value = space == std::string::npos ? std::string{} : line.substr(space + 1);
    auto fail = [&](const std::string& why) -> ParseError { return ParseError(why, line_no, 1); };
    auto integers = [&]() {
      std::vector<long long> out;
      std::istringstream vs(value);
      long long x = 0;
      while (vs >> x) out.push_back(x);
      if (!vs.eof()) throw fail("bad integer list for " + key);
      return out;
    };
    if (!seen_magic) {
      if (line != "folkman-certificate 1") throw fail("expected 'folkman-certificate 1'");
      seen_magic = true;
    } else if (key == "graph6") {
      cert.graph = parse_graph6(value);
      seen_graph = true;
    } else if (key == "signature") {
      cert.signature = Signature::parse(value);
    } else if (key == "q") {
      const auto v = integers();
      if (v.size() != 1) throw fail("q takes one integer");
      cert.q = static_cast<int>(v[0]);
    } else if (key == "status") {
      if (value == "verified") cert.status = WitnessStatus::verified;
      else if (value == "unverified") cert.status = WitnessStatus::unverified;
      else if (value == "refuted") cert.status = WitnessStatus::refuted;
      else throw fail("unknown status " + value);
    } else if (key == "method") {
      if (value == "none") cert.method = VerificationMethod::none;
      else if (value == "pigeonhole") cert.method = VerificationMethod::pigeonhole;
      else if (value == "exhaustive-search") cert.method = VerificationMethod::exhaustive_search;
      else if (value == "join-lemma") cert.method = VerificationMethod::join_lemma;
      else throw fail("unknown method " + value);
    } else if (key == "nodes") {
      const auto v = integers();
      if (v.size() != 1 || v[0] < 0) throw fail("nodes takes one nonnegative integer");
      cert.nodes = static_cast<std::uint64_t>(v[0]);
    } else if (key == "construction") {
      cert.construction = Construction::parse(value);
    } else if (key == "free-coloring") {
      std::vector<int> colours;
      for (long long c : integers()) {
        if (c < 1 || static_cast<std::size_t>(c) > cert.signature.size()) throw fail("colour out of range");
        colours.push_back(static_cast<int>(c - 1));
      }
      cert.free_coloring = Coloring(std::move(colours), cert.signature.size());
    } else if (key == "clique") {
      VertexSet s;
      for (long long v : integers()) {
        if (v < 0 || static_cast<std::size_t>(v) >= cert.graph.order()) throw fail("clique vertex out of range");
        s.insert(static_cast<int>(v));
      }
      cert.clique = s;
    } else {
      throw fail("unknown key " + key);
    }
  }
  if (!seen_magic || !seen_graph) throw ParseError("incomplete certificate record", line_no, 1);
  return cert;
}

}  // namespace folkman
