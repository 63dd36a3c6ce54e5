#pragma once

#include <cstdint>
#include <vector>

namespace classlaw {

/// A prime q dividing D together with its signed prime discriminant q*:
/// (-1)^((q-1)/2) q for odd q, one of -4, 8, -8 for q = 2.
struct PrimeStarFactor {
  std::uint64_t q;
  std::int64_t qstar;

  bool operator==(const PrimeStarFactor&) const = default;
};

/// A validated negative fundamental discriminant. D = -N or D = -4N with N
/// squarefree, and D is the product of the q* over the primes dividing it.
class FundamentalDiscriminant {
 public:
  /// Throws ValidationError naming the failed condition.
  static FundamentalDiscriminant make(std::int64_t d);

  std::int64_t value() const { return d_; }
  /// Squarefree kernel N; -N is the squarefree part of D.
  std::uint64_t kernel() const { return n_; }
  /// Number of distinct primes dividing D.
  unsigned prime_count() const { return static_cast<unsigned>(stars_.size()); }
  const std::vector<PrimeStarFactor>& stars() const { return stars_; }

  std::uint64_t abs_value() const { return static_cast<std::uint64_t>(-d_); }
  bool divisible_by(std::uint64_t p) const { return abs_value() % p == 0; }

  bool operator==(const FundamentalDiscriminant& o) const { return d_ == o.d_; }

 private:
  FundamentalDiscriminant() = default;

  std::int64_t d_ = 0;
  std::uint64_t n_ = 0;
  std::vector<PrimeStarFactor> stars_;
};

inline FundamentalDiscriminant make_fundamental(std::int64_t d) {
  return FundamentalDiscriminant::make(d);
}

/// True iff d is a negative fundamental discriminant (no exception).
bool is_fundamental(std::int64_t d);

/// All negative fundamental discriminants in [lo, hi], ascending.
std::vector<FundamentalDiscriminant> fundamental_discriminants(std::int64_t lo, std::int64_t hi);

}  // namespace classlaw
