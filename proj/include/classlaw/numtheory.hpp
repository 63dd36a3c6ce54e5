#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace classlaw {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  bool operator==(const PrimePower&) const = default;
};

/// Factorization of a positive integer; `factors` is sorted by prime.
struct PrimeFactorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> factors;

  /// Multiplies the factors back together (wrapping is impossible for
  /// factorizations produced by factorize()).
  std::uint64_t product() const;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Kronecker symbol (a/n). Throws DomainError for n = 0. For negative n the
/// convention (a/-1) = sign(a) is used.
int kronecker(std::int64_t a, std::int64_t n);

/// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Trial division to 10^6, Brent's variant of Pollard rho beyond that.
PrimeFactorization factorize(std::uint64_t n);

/// Square root of a modulo the odd prime p, normalized to the smaller of the
/// two roots. Empty when a is a non-residue. Throws DomainError when p is not
/// an odd prime.
std::optional<std::uint64_t> sqrt_mod(std::int64_t a, std::uint64_t p);

/// Primes in the closed interval [lo, hi], ascending.
std::vector<std::uint64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

/// Non-negative residue of a modulo m.
std::uint64_t mod_floor(std::int64_t a, std::uint64_t m);

}  // namespace classlaw
