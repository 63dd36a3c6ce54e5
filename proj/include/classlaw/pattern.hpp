#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace classlaw {

/// Multiset of irreducible-factor degrees, stored as degree -> count.
class SplittingPattern {
 public:
  SplittingPattern() = default;

  /// Adds `count` factors of degree `degree`. Zero arguments are rejected.
  void add(std::uint64_t degree, std::uint64_t count);

  const std::map<std::uint64_t, std::uint64_t>& entries() const { return entries_; }
  std::uint64_t count_of(std::uint64_t degree) const;
  std::uint64_t linear_count() const { return count_of(1); }
  /// Sum of degree * count.
  std::uint64_t total_degree() const;
  bool empty() const { return entries_.empty(); }

  /// Canonical notation: "d^k" terms joined by U+00B7 in ascending degree,
  /// e.g. "1^2·2^3". The empty pattern renders as "".
  std::string to_string() const;
  /// Inverse of to_string(); throws ValidationError on malformed text.
  static SplittingPattern parse(std::string_view text);

  bool operator==(const SplittingPattern&) const = default;

 private:
  std::map<std::uint64_t, std::uint64_t> entries_;
};

}  // namespace classlaw
