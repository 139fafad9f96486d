#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "folkman/errors.hpp"
#include "folkman/known_values.hpp"
#include "folkman/signature.hpp"

namespace folkman {

enum class Rule {
  exists_fail,        // q <= max a_i: no graph qualifies
  q_gt_m,             // F = m for q > m
  q_eq_m,             // F = m + p for q = m
  lower_m_minus_1,    // F >= m + p + 2 for q = m - 1
  upper_m3p,          // F <= m + 3p for q = m - 1
  known_table,        // entry of the known-values table
  theorem_compose,    // sum over a composition of the last part
  monotone_subsume,   // G -> (3, ...) implies G -> (2, 2, ...)
};

inline std::string_view rule_id(Rule r) {
  switch (r) {
    case Rule::exists_fail: return "EXISTS-FAIL";
    case Rule::q_gt_m: return "Q-GT-M";
    case Rule::q_eq_m: return "Q-EQ-M";
    case Rule::lower_m_minus_1: return "LOWER-M-1";
    case Rule::upper_m3p: return "UPPER-M3P";
    case Rule::known_table: return "KNOWN-TABLE";
    case Rule::theorem_compose: return "THEOREM-COMPOSE";
    case Rule::monotone_subsume: return "MONOTONE-SUBSUME";
  }
  return "?";
}

struct Provenance {
  Rule rule;
  std::string detail;
  std::optional<int> lower;
  std::optional<int> upper;
  std::vector<Provenance> children;
};

/// Bounds on F(signature; q) with the rules that produced them.
struct BoundRecord {
  Signature signature;
  int q = 0;
  bool exists = true;
  std::optional<int> lower;
  std::optional<int> upper;
  std::vector<Provenance> provenance;
  std::vector<std::string> notes;

  bool exact() const { return lower && upper && *lower == *upper; }

  /// Folds one contributor in; the tighter side wins.
  void apply(Provenance node) {
    if (node.lower && (!lower || *node.lower > *lower)) lower = node.lower;
    if (node.upper && (!upper || *node.upper < *upper)) upper = node.upper;
    provenance.push_back(std::move(node));
    if (lower && upper && *lower > *upper)
      throw ConsistencyError("contradictory bounds for F(" + signature.to_string() + ";" + std::to_string(q) +
                             "): lower " + std::to_string(*lower) + " > upper " + std::to_string(*upper));
  }

  /// Provenance node that supplied the current upper (first one achieving it).
  const Provenance* upper_source() const {
    for (const auto& node : provenance)
      if (upper && node.upper == upper) return &node;
    return nullptr;
  }

  const Provenance* lower_source() const {
    for (const auto& node : provenance)
      if (lower && node.lower == lower) return &node;
    return nullptr;
  }
};

inline std::string folkman_label(const Signature& sig, int q) {
  return "F(" + sig.to_string() + ";" + std::to_string(q) + ")";
}

/// F(a_1, ..., a_r; q) exists iff q > max a_i.
inline bool folkman_exists(const Signature& sig, int q) {
  if (sig.empty()) throw std::invalid_argument("empty signature");
  return q > sig.p();
}

/// Closed-form rules for one (signature, q), tightened by the known-values table.
inline BoundRecord base_bounds(const Signature& sig, int q, const KnownTable& table) {
  if (sig.empty()) throw std::invalid_argument("bounds need a nonempty signature");
  BoundRecord rec;
  rec.signature = sig;
  rec.q = q;
  const int m = sig.m();
  const int p = sig.p();
  const std::string label = folkman_label(sig, q);

  if (!folkman_exists(sig, q)) {
    rec.exists = false;
    rec.provenance.push_back({Rule::exists_fail, label + " does not exist: q <= max a_i = " + std::to_string(p), {}, {}, {}});
    return rec;
  }

  if (q > m) {
    rec.apply({Rule::q_gt_m, "q > m: " + label + " = m = " + std::to_string(m), m, m, {}});
  } else if (q == m) {
    rec.apply({Rule::q_eq_m, "q = m: " + label + " = m + p = " + std::to_string(m + p), m + p, m + p, {}});
  } else if (q == m - 1) {
    rec.apply({Rule::lower_m_minus_1, "q = m - 1: " + label + " >= m + p + 2 = " + std::to_string(m + p + 2), m + p + 2,
               std::nullopt, {}});
    rec.apply({Rule::upper_m3p, "q = m - 1: " + label + " <= m + 3p = " + std::to_string(m + 3 * p), std::nullopt,
               m + 3 * p, {}});
  } else {
    rec.notes.push_back("no closed-form bound for q < m - 1 (m = " + std::to_string(m) + ")");
  }

  if (const KnownValue* kv = table.find(sig, q)) {
    rec.apply({Rule::known_table, label + ": " + kv->citation, kv->lower, kv->upper, {}});
  }
  return rec;
}

inline BoundRecord base_bounds(const Signature& sig, int q) { return base_bounds(sig, q, KnownTable::bundled()); }

/// A multiset b_1 <= ... <= b_s of the last part with the per-part upper bounds used.
struct Composition {
  std::vector<int> parts;
  std::vector<int> uppers;
  int total = 0;

  /// "4+5: 13+22"
  std::string to_string() const {
    std::string lhs;
    std::string rhs;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) {
        lhs += '+';
        rhs += '+';
      }
      lhs += std::to_string(parts[i]);
      rhs += std::to_string(uppers[i]);
    }
    return lhs + ": " + rhs;
  }
};

namespace detail {

inline Signature with_last(const Signature& sig, int last) {
  std::vector<int> parts(sig.parts().begin(), sig.parts().end());
  parts.back() = last;
  return Signature::normalize(parts);
}

// Cheapest multiset of parts >= lo summing to `total`, ordered by
// (cost, number of parts, parts lexicographically). Fixing the smallest part b
// leaves a subproblem with parts >= b whose own optimum under the same order
// is optimal for the whole, so the memo over (total, lo) is exact.
class CompositionSearch {
 public:
  CompositionSearch(const Signature& sig, const KnownTable& table) : sig_(sig), table_(table) {}

  std::optional<Composition> best(int total, int lo) {
    const auto key = std::pair{total, lo};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::optional<Composition> result;
    for (int b = lo; b <= total; ++b) {
      const auto head = part_upper(b);
      if (!head) continue;
      Composition candidate;
      if (b == total) {
        candidate = Composition{{b}, {*head}, *head};
      } else {
        if (total - b < b) continue;
        const auto tail = best(total - b, b);
        if (!tail) continue;
        candidate.parts = {b};
        candidate.uppers = {*head};
        candidate.parts.insert(candidate.parts.end(), tail->parts.begin(), tail->parts.end());
        candidate.uppers.insert(candidate.uppers.end(), tail->uppers.begin(), tail->uppers.end());
        candidate.total = *head + tail->total;
      }
      if (!result || better(candidate, *result)) result = std::move(candidate);
    }
    memo_.emplace(key, result);
    return result;
  }

  std::optional<int> part_upper(int b) {
    if (auto it = part_memo_.find(b); it != part_memo_.end()) return it->second;
    const auto upper = base_bounds(with_last(sig_, b), b + 1, table_).upper;
    part_memo_.emplace(b, upper);
    return upper;
  }

 private:
  static bool better(const Composition& a, const Composition& b) {
    return std::forward_as_tuple(a.total, a.parts.size(), a.parts) < std::forward_as_tuple(b.total, b.parts.size(), b.parts);
  }

  const Signature& sig_;
  const KnownTable& table_;
  std::map<std::pair<int, int>, std::optional<Composition>> memo_;
  std::map<int, std::optional<int>> part_memo_;
};

}  // namespace detail

/// Best composition a_r = b_1 + ... + b_s (every b_i >= min_part) for the join bound
/// F(a_1..a_r; a_r+1) <= sum F(a_1..a_{r-1}, b_i; b_i+1). min_part = 0 means a_{r-1},
/// the weakest restriction under which the bound holds.
inline std::optional<Composition> best_composition(const Signature& sig, const KnownTable& table, int min_part = 0) {
  if (sig.size() < 2) throw std::invalid_argument("composition bound needs at least two parts");
  const int floor = sig[sig.size() - 2];
  if (min_part == 0) min_part = floor;
  if (min_part < floor)
    throw std::invalid_argument("composition parts must be at least a_{r-1} = " + std::to_string(floor));
  detail::CompositionSearch search(sig, table);
  return search.best(sig.p(), min_part);
}

/// Upper bound on F(a_1..a_r; a_r+1) from the cheapest composition of a_r.
inline BoundRecord theorem_bound(const Signature& sig, int q, const KnownTable& table, int min_part = 0) {
  if (sig.size() < 2) throw std::invalid_argument("composition bound needs r >= 2");
  if (q != sig.p() + 1)
    throw std::invalid_argument("composition bound applies to q = a_r + 1 = " + std::to_string(sig.p() + 1) +
                                ", got q = " + std::to_string(q));
  BoundRecord rec;
  rec.signature = sig;
  rec.q = q;
  const auto comp = best_composition(sig, table, min_part);
  if (!comp) {
    rec.notes.push_back("no composition of " + std::to_string(sig.p()) + " has bounded terms");
    return rec;
  }
  Provenance node{Rule::theorem_compose, comp->to_string(), std::nullopt, comp->total, {}};
  for (std::size_t i = 0; i < comp->parts.size(); ++i) {
    const Signature term = detail::with_last(sig, comp->parts[i]);
    const BoundRecord term_rec = base_bounds(term, comp->parts[i] + 1, table);
    const Provenance* src = term_rec.upper_source();
    node.children.push_back({src->rule, folkman_label(term, comp->parts[i] + 1) + " <= " + std::to_string(comp->uppers[i]) +
                                            " (" + src->detail + ")",
                             std::nullopt, comp->uppers[i], {}});
  }
  rec.apply(std::move(node));
  return rec;
}

inline BoundRecord theorem_bound(const Signature& sig, int q) { return theorem_bound(sig, q, KnownTable::bundled()); }

/// Tightest bounds from every rule: closed forms, table, composition bound (q = a_r + 1),
/// and the merge of two 2-parts into a 3-part (a (3, ...)-arrowing graph arrows (2, 2, ...)).
inline BoundRecord best_bounds(const Signature& sig, int q, const KnownTable& table) {
  BoundRecord rec = base_bounds(sig, q, table);
  if (!rec.exists) return rec;

  if (sig.size() >= 2 && q == sig.p() + 1) {
    const BoundRecord composed = theorem_bound(sig, q, table);
    for (const auto& node : composed.provenance) rec.apply(node);
  }

  if (sig.size() >= 2 && sig[0] == 2 && sig[1] == 2) {
    std::vector<int> merged(sig.parts().begin() + 2, sig.parts().end());
    merged.push_back(3);
    const Signature coarser = Signature::normalize(merged);
    if (folkman_exists(coarser, q)) {
      const BoundRecord other = best_bounds(coarser, q, table);
      if (other.upper) {
        rec.apply({Rule::monotone_subsume,
                   folkman_label(sig, q) + " <= " + folkman_label(coarser, q) + " <= " + std::to_string(*other.upper),
                   std::nullopt, other.upper, other.provenance});
      }
    }
  }
  return rec;
}

inline BoundRecord best_bounds(const Signature& sig, int q) { return best_bounds(sig, q, KnownTable::bundled()); }

// ---------------------------------------------------------------------------
// Closed forms for the boundary families (3, p; p+1) and (2, 2, p; p+1).

/// Upper bound on F(3,p;p+1) by residue of p mod 4: 13p/4, (13p+23)/4, (13p+26)/4, (13p+29)/4.
inline int corollary1_upper(int p) {
  if (p < 4) throw std::invalid_argument("closed form needs p >= 4");
  static constexpr int offset[4] = {0, 23, 26, 29};
  return (13 * p + offset[p % 4]) / 4;
}

/// Upper bound on F(2,2,p;p+1) by residue of p mod 4: 13p/4, (13p+23)/4, (13p+10)/4, (13p+21)/4.
inline int corollary2_upper(int p) {
  if (p < 4) throw std::invalid_argument("closed form needs p >= 4");
  static constexpr int offset[4] = {0, 23, 10, 21};
  return (13 * p + offset[p % 4]) / 4;
}

/// The conjectured bound 13p/4, as a numerator over 4. Reported only; never used as input.
inline int conjectured_upper_times4(int p) { return 13 * p; }

inline Signature boundary_signature(bool three_p, int p) {
  return three_p ? Signature::normalize({3, p}) : Signature::normalize({2, 2, p});
}

struct RecurrenceRow {
  std::string family;  // "3,p" or "2,2,p"
  int p = 0;
  int computed = 0;          // composition bound
  int closed_form = 0;       // corollary formula
  std::optional<int> recurrence_rhs;  // F(.., p-4) + F(.., 4) for p >= 8
};

struct RecurrenceReport {
  std::vector<RecurrenceRow> rows;
  std::vector<std::string> violations;    // computed bound looser than a formula or a recurrence
  std::vector<std::string> improvements;  // computed bound strictly tighter than the closed form

  bool ok() const { return violations.empty(); }
};

/// Checks F(.., p) <= F(.., p-4) + F(.., 4) for 8 <= p <= p_max and compares the
/// composition bound against both closed forms for 4 <= p <= p_max.
inline RecurrenceReport check_recurrences(int p_max, const KnownTable& table) {
  if (p_max < 8) throw std::invalid_argument("recurrence check needs p_max >= 8");
  RecurrenceReport report;
  for (bool three_p : {true, false}) {
    const std::string family = three_p ? "3,p" : "2,2,p";
    auto computed = [&](int p) {
      const auto rec = theorem_bound(boundary_signature(three_p, p), p + 1, table);
      if (!rec.upper) throw ConsistencyError("no composition bound for p = " + std::to_string(p));
      return *rec.upper;
    };
    const int base4 = computed(4);
    for (int p = 4; p <= p_max; ++p) {
      RecurrenceRow row;
      row.family = family;
      row.p = p;
      row.computed = computed(p);
      row.closed_form = three_p ? corollary1_upper(p) : corollary2_upper(p);
      const std::string where = "(" + family + ") p=" + std::to_string(p);
      if (row.computed > row.closed_form)
        report.violations.push_back(where + ": computed " + std::to_string(row.computed) + " > closed form " +
                                    std::to_string(row.closed_form));
      else if (row.computed < row.closed_form)
        report.improvements.push_back(where + ": computed " + std::to_string(row.computed) + " < closed form " +
                                      std::to_string(row.closed_form));
      if (row.computed > 4 * p + 2)
        report.violations.push_back(where + ": computed " + std::to_string(row.computed) + " > 4p+2");
      if (p >= 8) {
        row.recurrence_rhs = computed(p - 4) + base4;
        if (row.computed > *row.recurrence_rhs)
          report.violations.push_back(where + ": computed " + std::to_string(row.computed) + " > F(p-4) + F(4) = " +
                                      std::to_string(*row.recurrence_rhs));
      }
      report.rows.push_back(row);
    }
  }
  return report;
}

}  // namespace folkman
