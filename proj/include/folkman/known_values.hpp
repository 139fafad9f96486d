#pragma once

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "folkman/errors.hpp"
#include "folkman/signature.hpp"

namespace folkman {

/// One cited value or bound for F(signature; q).
struct KnownValue {
  Signature signature;
  int q = 0;
  std::optional<int> lower;
  std::optional<int> upper;
  std::string citation;

  friend bool operator==(const KnownValue&, const KnownValue&) = default;
};

/// Contents of data/known_values.txt, compiled in so the library needs no data path.
inline constexpr std::string_view kBundledKnownValues = R"(# Known vertex Folkman numbers F(a_1,...,a_r;q).
# Format: <a1,a2,...>;q;lower|-;upper|-;citation
# Signatures are normalized on load (1s dropped, parts sorted).
3,4;5;13;13;[6] F(3,4;5) = 13
2,2,4;5;13;13;[7] F(2,2,4;5) = 13
2,2,3;4;14;14;[2] F(2,2,3;4) = 14
2,2,6;7;-;22;[9] F(2,2,6;7) <= 22
2,2,7;8;-;28;[9] F(2,2,7;8) <= 28
2,2;3;5;5;computed by exhaustive search: no graph on 4 vertices, C5 on 5
2,2,2;4;6;6;computed by exhaustive search: no graph on 5 vertices, K1+C5 on 6
)";

/// Environment variable naming a known-values file that replaces the bundled table.
inline constexpr const char* kTableEnvVar = "FOLKMAN_TABLE";

/// Throws std::invalid_argument when an entry contradicts the closed-form rules
/// (nonexistent number, wrong exact value for q >= m, disjoint from [m+p+2, m+3p] at q = m-1).
inline void validate_known_value(const KnownValue& kv) {
  const Signature& sig = kv.signature;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("known value F(" + sig.to_string() + ";" + std::to_string(kv.q) + "): " + why);
  };
  if (sig.empty()) fail("empty signature");
  if (!kv.lower && !kv.upper) fail("neither a lower nor an upper bound");
  if (kv.lower && kv.upper && *kv.lower > *kv.upper) fail("lower bound exceeds upper bound");
  if (kv.q <= sig.p()) fail("the number does not exist for q <= max a_i");
  const int m = sig.m();
  const int p = sig.p();
  auto must_contain = [&](int value, const char* rule) {
    if ((kv.lower && *kv.lower > value) || (kv.upper && *kv.upper < value))
      fail(std::string("contradicts ") + rule + " = " + std::to_string(value));
  };
  if (kv.q > m) must_contain(m, "F = m for q > m");
  if (kv.q == m) must_contain(m + p, "F = m + p for q = m");
  if (kv.q == m - 1) {
    if (kv.upper && *kv.upper < m + p + 2) fail("upper bound below m + p + 2");
    if (kv.lower && *kv.lower > m + 3 * p) fail("lower bound above m + 3p");
  }
}

class KnownTable {
 public:
  KnownTable() = default;

  static KnownTable bundled() { return parse(kBundledKnownValues, "bundled table"); }

  /// Line format "<a1,a2,...>;q;lower|-;upper|-;citation"; blank lines and lines
  /// starting with '#' are ignored. The citation is the rest of the line.
  static KnownTable parse(std::string_view text, const std::string& source = "table") {
    KnownTable table;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      start = end + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string_view::npos || line[first] == '#') continue;

      std::vector<std::string_view> fields;
      std::vector<std::size_t> columns;
      std::size_t field_start = 0;
      for (int i = 0; i < 4; ++i) {
        const auto semi = line.find(';', field_start);
        if (semi == std::string_view::npos)
          throw ParseError(source + ": expected 5 ';'-separated fields", line_no, field_start + 1);
        fields.push_back(trim(line.substr(field_start, semi - field_start)));
        columns.push_back(field_start + 1);
        field_start = semi + 1;
      }
      fields.push_back(trim(line.substr(field_start)));
      columns.push_back(field_start + 1);

      KnownValue kv;
      std::string_view sig_text = fields[0];
      if (sig_text.size() >= 2 && sig_text.front() == '<' && sig_text.back() == '>')
        sig_text = sig_text.substr(1, sig_text.size() - 2);
      try {
        kv.signature = Signature::parse(sig_text);
      } catch (const std::exception& e) {
        throw ParseError(source + ": bad signature: " + e.what(), line_no, columns[0]);
      }
      const auto q = integer(fields[1]);
      if (!q) throw ParseError(source + ": q must be an integer", line_no, columns[1]);
      kv.q = *q;
      for (int side = 0; side < 2; ++side) {
        const auto field = fields[2 + static_cast<std::size_t>(side)];
        std::optional<int> value;
        if (field != "-") {
          value = integer(field);
          if (!value) throw ParseError(source + ": bound must be an integer or '-'", line_no, columns[2 + side]);
        }
        (side == 0 ? kv.lower : kv.upper) = value;
      }
      kv.citation = std::string(fields[4]);
      try {
        table.add(std::move(kv));
      } catch (const std::invalid_argument& e) {
        throw ParseError(source + ": " + e.what(), line_no, 1);
      }
    }
    return table;
  }

  static KnownTable load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open known-values file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path.string());
  }

  /// The table named by `path` if given, else by $FOLKMAN_TABLE, else the bundled one.
  static KnownTable resolve(const std::optional<std::filesystem::path>& path) {
    if (path) return load(*path);
    if (const char* env = std::getenv(kTableEnvVar); env != nullptr && *env != '\0') return load(env);
    return bundled();
  }

  /// Adds a validated entry; a second entry for the same (signature, q) is rejected.
  void add(KnownValue kv) {
    validate_known_value(kv);
    if (find(kv.signature, kv.q))
      throw std::invalid_argument("duplicate entry for F(" + kv.signature.to_string() + ";" + std::to_string(kv.q) + ")");
    entries_.push_back(std::move(kv));
  }

  /// Records a new upper bound, tightening an existing entry or creating one.
  void tighten_upper(const Signature& sig, int q, int upper, const std::string& citation) {
    for (auto& kv : entries_) {
      if (kv.signature == sig && kv.q == q) {
        if (kv.upper && *kv.upper <= upper) return;
        KnownValue updated = kv;
        updated.upper = upper;
        updated.citation = kv.citation + "; upper " + std::to_string(upper) + " from " + citation;
        validate_known_value(updated);
        kv = std::move(updated);
        return;
      }
    }
    add(KnownValue{sig, q, std::nullopt, upper, citation});
  }

  const KnownValue* find(const Signature& sig, int q) const {
    const auto it =
        std::find_if(entries_.begin(), entries_.end(), [&](const KnownValue& kv) { return kv.signature == sig && kv.q == q; });
    return it == entries_.end() ? nullptr : &*it;
  }

  const std::vector<KnownValue>& entries() const { return entries_; }

 private:
  static std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
  }

  static std::optional<int> integer(std::string_view s) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
  }

  std::vector<KnownValue> entries_;
};

}  // namespace folkman
