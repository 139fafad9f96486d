#pragma once

#include <algorithm>
#include <charconv>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "folkman/errors.hpp"

namespace folkman {

/// Normalized parameter list a_1 <= ... <= a_r with every a_i >= 2.
///
/// Entries equal to 1 never affect arrowing and order is irrelevant, so every
/// raw list collapses to this form. The empty signature is what remains after
/// dropping a nonempty all-ones list; it is arrowed by every nonempty graph.
class Signature {
 public:
  Signature() = default;

  static Signature normalize(std::span<const int> raw) {
    if (raw.empty()) throw std::invalid_argument("signature must have at least one part");
    Signature s;
    for (int a : raw) {
      if (a <= 0) throw std::invalid_argument("signature parts must be positive, got " + std::to_string(a));
      if (a > 1) s.parts_.push_back(a);
    }
    std::sort(s.parts_.begin(), s.parts_.end());
    return s;
  }

  static Signature normalize(std::initializer_list<int> raw) {
    return normalize(std::span<const int>(raw.begin(), raw.size()));
  }

  /// Comma-separated integers, e.g. "2,2,5".
  static Signature parse(std::string_view text) { return normalize(parse_parts(text)); }

  static std::vector<int> parse_parts(std::string_view text) {
    std::vector<int> raw;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      const std::string_view token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("expected an integer in signature '" + std::string(text) + "'", 1, start + 1);
      raw.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return raw;
  }

  std::span<const int> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_.at(i); }

  /// 1 + sum (a_i - 1)
  int m() const {
    require_nonempty();
    return 1 + std::accumulate(parts_.begin(), parts_.end(), 0, [](int acc, int a) { return acc + (a - 1); });
  }

  /// max a_i
  int p() const {
    require_nonempty();
    return parts_.back();
  }

  /// "2,2,5"
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  void require_nonempty() const {
    if (parts_.empty()) throw std::invalid_argument("m and p are undefined for the empty signature");
  }

  std::vector<int> parts_;
};

inline int m_of(const Signature& sig) { return sig.m(); }
inline int p_of(const Signature& sig) { return sig.p(); }

}  // namespace folkman
