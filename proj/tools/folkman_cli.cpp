#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "folkman/folkman.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace folkman;

enum Exit { kDecided = 0, kError = 1, kUndecided = 2 };

struct Common {
  bool json_out = false;
  std::uint64_t budget = kDefaultBudget;
  unsigned jobs = 1;
  std::string table_path;
  std::string format;

  SearchOptions search() const {
    return {budget == 0 ? std::numeric_limits<std::uint64_t>::max() : budget, jobs};
  }

  std::optional<GraphFormat> graph_format() const {
    if (format.empty()) return std::nullopt;
    auto f = parse_format_name(format);
    if (!f) throw std::invalid_argument("unknown graph format '" + format + "' (use g6 or el)");
    return f;
  }

  KnownTable table() const {
    if (table_path.empty()) return KnownTable::resolve(std::nullopt);
    return KnownTable::resolve(std::filesystem::path(table_path));
  }
};

// What a command hands back to main for printing.
struct Output {
  json args = json::object();
  json result = json::object();
  std::string text;
  std::uint64_t nodes = 0;
  int exit_code = kDecided;
};

Signature read_signature(const std::string& text) {
  const auto raw = Signature::parse_parts(text);
  Signature sig = Signature::normalize(raw);
  std::string given;
  for (std::size_t i = 0; i < raw.size(); ++i) given += (i ? "," : "") + std::to_string(raw[i]);
  if (given != sig.to_string())
    std::cerr << "note: signature " << given << " normalized to " << (sig.empty() ? "()" : sig.to_string()) << "\n";
  return sig;
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json provenance_json(const Provenance& node) {
  json out = {{"rule", rule_id(node.rule)}, {"detail", node.detail}, {"lower", optional_int(node.lower)},
              {"upper", optional_int(node.upper)}, {"children", json::array()}};
  for (const auto& child : node.children) out["children"].push_back(provenance_json(child));
  return out;
}

void provenance_text(std::ostream& out, const Provenance& node, int depth) {
  out << std::string(static_cast<std::size_t>(2 * depth + 2), ' ') << "[" << rule_id(node.rule) << "] " << node.detail
      << "\n";
  for (const auto& child : node.children) provenance_text(out, child, depth + 1);
}

json colouring_json(const Coloring& c) {
  json out = json::array();
  for (int colour : c.assignment()) out.push_back(colour + 1);
  return out;
}

std::string colouring_text(const Coloring& c) {
  std::string out;
  for (int colour : c.assignment()) out += (out.empty() ? "" : " ") + std::to_string(colour + 1);
  return out;
}

json certificate_json(const WitnessCertificate& cert) {
  json out = {{"signature", cert.signature.to_string()},
              {"q", cert.q},
              {"order", cert.graph.order()},
              {"clique_number", clique_number(cert.graph)},
              {"status", status_name(cert.status)},
              {"method", method_name(cert.method)},
              {"construction", cert.construction.to_string()},
              {"graph6", to_graph6(cert.graph)},
              {"free_coloring", nullptr},
              {"clique", nullptr}};
  if (cert.free_coloring) out["free_coloring"] = colouring_json(*cert.free_coloring);
  if (cert.clique) out["clique"] = cert.clique->to_vector();
  return out;
}

std::string certificate_text(const WitnessCertificate& cert) {
  std::ostringstream out;
  out << "status: " << status_name(cert.status) << " (" << method_name(cert.method) << ")\n";
  out << "claim: " << cert.graph.order() << " vertices in H(" << cert.signature.to_string() << ";" << cert.q << ")";
  if (cert.verified()) out << ", so " << folkman_label(cert.signature, cert.q) << " <= " << cert.graph.order();
  out << "\n";
  out << "construction: " << cert.construction.to_string() << "\n";
  out << "clique number: " << clique_number(cert.graph) << "\n";
  out << "graph6: " << to_graph6(cert.graph) << "\n";
  if (cert.free_coloring) out << "free coloring: " << colouring_text(*cert.free_coloring) << "\n";
  if (cert.clique) {
    out << "clique:";
    cert.clique->for_each([&](int v) { out << ' ' << v; });
    out << "\n";
  }
  return out.str();
}

int certificate_exit(const WitnessCertificate& cert) {
  return cert.status == WitnessStatus::unverified ? kUndecided : kDecided;
}

void write_record(const std::string& path, const WitnessCertificate& cert) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_record(cert);
}

// ---------------------------------------------------------------------------

Output cmd_arrow(const Common& common, const std::string& graph_path, const std::string& sig_text) {
  Output out;
  const Signature sig = read_signature(sig_text);
  const Graph g = read_graph_file(graph_path, common.graph_format());
  out.args = {{"graph", graph_path}, {"sig", sig.to_string()}, {"budget", common.budget}, {"jobs", common.jobs}};
  const auto outcome = find_free_coloring(g, sig, common.search());
  out.nodes = outcome.nodes;
  out.result = {{"verdict", verdict_name(outcome.verdict)},
                {"arrows", outcome.decided() ? json(outcome.verdict == Verdict::arrows) : json(nullptr)},
                {"order", g.order()},
                {"coloring", outcome.coloring ? colouring_json(*outcome.coloring) : json(nullptr)}};
  std::ostringstream text;
  switch (outcome.verdict) {
    case Verdict::arrows: text << "arrows: true\n"; break;
    case Verdict::free_coloring:
      text << "arrows: false\ncoloring: " << colouring_text(*outcome.coloring) << "\n";
      break;
    case Verdict::undecided:
      text << "arrows: undecided (budget of " << common.budget << " nodes exhausted)\n";
      out.exit_code = kUndecided;
      break;
  }
  out.text = text.str();
  return out;
}

Output cmd_bound(const Common& common, const std::string& sig_text, int q) {
  Output out;
  const Signature sig = read_signature(sig_text);
  if (sig.empty()) throw std::invalid_argument("signature has no part above 1");
  const KnownTable table = common.table();
  const BoundRecord rec = best_bounds(sig, q, table);
  out.args = {{"sig", sig.to_string()}, {"q", q}};
  out.result = {{"label", folkman_label(sig, q)}, {"exists", rec.exists}, {"lower", optional_int(rec.lower)},
                {"upper", optional_int(rec.upper)}, {"exact", rec.exact()}, {"provenance", json::array()},
                {"notes", rec.notes}};
  for (const auto& node : rec.provenance) out.result["provenance"].push_back(provenance_json(node));

  std::ostringstream text;
  text << folkman_label(sig, q) << ": ";
  if (!rec.exists) text << "does not exist";
  else if (rec.exact()) text << "= " << *rec.upper;
  else {
    text << (rec.lower ? std::to_string(*rec.lower) : "?") << " <= F <= " << (rec.upper ? std::to_string(*rec.upper) : "?");
  }
  text << "\n";
  for (const auto& node : rec.provenance) provenance_text(text, node, 0);
  for (const auto& note : rec.notes) text << "  note: " << note << "\n";
  out.text = text.str();
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad p range '" + text + "'");
    return v;
  };
  try {
    if (dots == std::string::npos) {
      const int v = to_int(text);
      return {v, v};
    }
    return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad p range '" + text + "' (expected A..B)");
  }
}

Output cmd_table(const Common& common, const std::string& kind, const std::string& range) {
  Output out;
  const auto [lo, hi] = parse_range(range);
  if (lo < 4 || hi < lo) throw std::invalid_argument("p range must satisfy 4 <= A <= B");
  const bool show1 = kind != "cor2";
  const bool show2 = kind != "cor1";
  const KnownTable table = common.table();
  out.args = {{"kind", kind}, {"p", range}};
  out.result["rows"] = json::array();

  std::ostringstream text;
  text << "   p";
  if (show1) text << "  cor1  dp(3,p)";
  if (show2) text << "  cor2  dp(2,2,p)";
  if (show1 && show2) text << "  cor2<=cor1";
  text << "  13p/4\n";
  bool all_le = true;
  for (int p = lo; p <= hi; ++p) {
    json row = {{"p", p}};
    char buf[128];
    std::snprintf(buf, sizeof buf, "%4d", p);
    text << buf;
    auto dp = [&](bool three_p) {
      return theorem_bound(boundary_signature(three_p, p), p + 1, table).upper;
    };
    if (show1) {
      const auto d = dp(true);
      row["cor1"] = corollary1_upper(p);
      row["dp_3p"] = optional_int(d);
      std::snprintf(buf, sizeof buf, "  %4d  %7s", corollary1_upper(p), d ? std::to_string(*d).c_str() : "-");
      text << buf;
    }
    if (show2) {
      const auto d = dp(false);
      row["cor2"] = corollary2_upper(p);
      row["dp_22p"] = optional_int(d);
      std::snprintf(buf, sizeof buf, "  %4d  %9s", corollary2_upper(p), d ? std::to_string(*d).c_str() : "-");
      text << buf;
    }
    if (show1 && show2) {
      const bool le = corollary2_upper(p) <= corollary1_upper(p);
      all_le = all_le && le;
      row["cor2_le_cor1"] = le;
      text << "  " << (le ? "       true" : "      false");
    }
    const int c4 = conjectured_upper_times4(p);
    row["conjecture_times4"] = c4;
    std::snprintf(buf, sizeof buf, "  %5.2f\n", c4 / 4.0);
    text << buf;
    out.result["rows"].push_back(row);
  }
  if (show1 && show2) {
    out.result["cor2_le_cor1_all"] = all_le;
    text << "cor2 <= cor1 for every row: " << (all_le ? "true" : "false") << "\n";
  }
  out.text = text.str();
  return out;
}

Output cmd_witness(const Common& common, const std::string& sig_text, int q, const std::string& split_text,
                   const std::string& out_path, bool verify) {
  Output out;
  const Signature sig = read_signature(sig_text);
  if (sig.empty()) throw std::invalid_argument("signature has no part above 1");
  out.args = {{"sig", sig.to_string()}, {"q", q}, {"split", split_text}, {"verify", verify}, {"budget", common.budget}};

  WitnessCertificate cert;
  if (split_text.empty()) {
    if (q < sig.m())
      throw std::invalid_argument("no base construction for " + folkman_label(sig, q) +
                                  " (q < m); use --split to join smaller witnesses");
    cert = base_witness(sig, q, common.search());
  } else {
    if (sig.size() < 2 || q != sig.p() + 1)
      throw std::invalid_argument("--split needs r >= 2 and q = a_r + 1 = " + std::to_string(sig.p() + 1));
    const auto pieces = Signature::parse_parts(split_text);
    const int floor = sig[sig.size() - 2];
    int sum = 0;
    for (int b : pieces) {
      if (b < floor) throw std::invalid_argument("split parts must be at least a_{r-1} = " + std::to_string(floor));
      sum += b;
    }
    if (sum != sig.p()) throw std::invalid_argument("split parts must sum to a_r = " + std::to_string(sig.p()));
    std::vector<int> parts(sig.parts().begin(), sig.parts().end());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      parts.back() = pieces[i];
      const Signature term = Signature::normalize(parts);
      WitnessCertificate piece = base_witness(term, pieces[i] + 1, common.search());
      if (!piece.verified())
        throw std::runtime_error("witness for " + folkman_label(term, pieces[i] + 1) + " is " +
                                 std::string(status_name(piece.status)));
      out.nodes += piece.nodes;
      if (i == 0) {
        cert = piece;
        continue;
      }
      cert = compose_witness(cert, piece, sig.size() - 1, verify, common.search());
      out.nodes += cert.nodes;
    }
  }
  if (split_text.empty()) out.nodes = cert.nodes;
  out.result = certificate_json(cert);
  out.text = certificate_text(cert);
  out.exit_code = certificate_exit(cert);
  write_record(out_path, cert);
  return out;
}

Output cmd_verify(const Common& common, const std::string& graph_path, const std::string& sig_text, int q,
                  const std::string& out_path, bool record) {
  Output out;
  const Signature sig = read_signature(sig_text);
  if (sig.empty()) throw std::invalid_argument("signature has no part above 1");
  if (!folkman_exists(sig, q)) throw std::invalid_argument(folkman_label(sig, q) + " does not exist (q <= max a_i)");
  out.args = {{"graph", graph_path}, {"sig", sig.to_string()}, {"q", q}, {"budget", common.budget}};
  const WitnessCertificate cert = load_external_witness(graph_path, sig, q, common.search(), common.graph_format());
  out.nodes = cert.nodes;
  out.result = certificate_json(cert);
  out.text = certificate_text(cert);
  if (record && cert.verified()) {
    KnownTable table = common.table();
    record_witness(table, cert, "external file " + graph_path);
    const BoundRecord rec = best_bounds(sig, q, table);
    out.result["bound_after"] = {{"lower", optional_int(rec.lower)}, {"upper", optional_int(rec.upper)}};
    out.text += "bound with this witness: " + folkman_label(sig, q) + " <= " + std::to_string(*rec.upper) + "\n";
  }
  out.exit_code = certificate_exit(cert);
  write_record(out_path, cert);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex Folkman number toolkit: arrowing checks, bounds, witnesses"};
  app.require_subcommand(1);
  Common common;
  std::string graph_path, sig_text, kind = "both", range = "4..12", out_path, split_text;
  int q = 0;
  bool verify = false;
  bool record = false;

  auto add_common = [&](CLI::App* cmd, bool search, bool graph, bool table) {
    cmd->add_flag("--json", common.json_out, "Print one JSON object instead of text");
    if (search) {
      cmd->add_option("--budget", common.budget, "Search-node budget, 0 = unlimited")->capture_default_str();
      cmd->add_option("--jobs", common.jobs, "Worker threads for the arrowing search")
          ->capture_default_str()
          ->check(CLI::Range(1u, 256u));
    }
    if (graph) cmd->add_option("--format", common.format, "Graph file format: g6 or el (default: from extension)");
    if (table) cmd->add_option("--table", common.table_path, "Known-values file (default: $FOLKMAN_TABLE, then bundled)");
  };

  auto* arrow = app.add_subcommand("arrow", "Decide whether a graph arrows a signature");
  arrow->add_option("--graph", graph_path, "Graph file (.g6 or .el, '-' for stdin)")->required();
  arrow->add_option("--sig", sig_text, "Signature a_1,...,a_r")->required();
  add_common(arrow, true, true, false);

  auto* bound = app.add_subcommand("bound", "Best known bounds on F(sig;q) with provenance");
  bound->add_option("--sig", sig_text, "Signature a_1,...,a_r")->required();
  bound->add_option("--q", q, "Clique bound q")->required();
  add_common(bound, false, false, true);

  auto* table = app.add_subcommand("table", "Closed-form bounds for (3,p;p+1) and (2,2,p;p+1) against the composition bound");
  table->add_option("--kind", kind, "cor1, cor2 or both")->capture_default_str()->check(CLI::IsMember({"cor1", "cor2", "both"}));
  table->add_option("--p", range, "Range of p, A..B")->capture_default_str();
  add_common(table, false, false, true);

  auto* witness = app.add_subcommand("witness", "Build and verify a witness graph for F(sig;q)");
  witness->add_option("--sig", sig_text, "Signature a_1,...,a_r")->required();
  witness->add_option("--q", q, "Clique bound q")->required();
  witness->add_option("--split", split_text, "Join witnesses for (..., b_i; b_i+1) over this split of a_r");
  witness->add_option("--out", out_path, "Write the certificate record here");
  witness->add_flag("--verify", verify, "Re-check joined witnesses with the arrowing engine");
  add_common(witness, true, false, false);

  auto* check = app.add_subcommand("verify", "Check a graph file for membership in H(sig;q)");
  check->add_option("--graph", graph_path, "Graph file (.g6 or .el, '-' for stdin)")->required();
  check->add_option("--sig", sig_text, "Signature a_1,...,a_r")->required();
  check->add_option("--q", q, "Clique bound q")->required();
  check->add_option("--out", out_path, "Write the certificate record here");
  check->add_flag("--record", record, "Report the bound after adding a verified witness to the table");
  add_common(check, true, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  const auto start = std::chrono::steady_clock::now();
  Output out;
  std::string command;
  try {
    if (arrow->parsed()) {
      command = "arrow";
      out = cmd_arrow(common, graph_path, sig_text);
    } else if (bound->parsed()) {
      command = "bound";
      out = cmd_bound(common, sig_text, q);
    } else if (table->parsed()) {
      command = "table";
      out = cmd_table(common, kind, range);
    } else if (witness->parsed()) {
      command = "witness";
      out = cmd_witness(common, sig_text, q, split_text, out_path, verify);
    } else {
      command = "verify";
      out = cmd_verify(common, graph_path, sig_text, q, out_path, record);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (common.json_out) {
    const json doc = {{"command", command},
                      {"args", out.args},
                      {"result", out.result},
                      {"elapsed_ms", elapsed_ms},
                      {"nodes", out.nodes},
                      {"exit_code", out.exit_code}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << out.text;
  }
  return out.exit_code;
}
