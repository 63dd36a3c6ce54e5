#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "classlaw/discriminant.hpp"
#include "classlaw/pattern.hpp"
#include "classlaw/quadforms.hpp"

namespace classlaw {

/// How an odd unramified prime p behaves in the real subfield of the Hilbert
/// class field:
///   split          (D/p) = 1: h/f primes of degree f, f the order of a prime form
///   inert_genus    (D/p) = -1 and (-p/q) = 1 for all odd q | D:
///                  2^(t-1) primes of degree 1, the rest of degree 2
///   inert_nongenus (D/p) = -1 otherwise: h/2 primes of degree 2
enum class SplitCase { split, inert_genus, inert_nongenus };

std::string_view to_string(SplitCase c);

struct Prediction {
  SplitCase case_tag = SplitCase::split;
  SplittingPattern pattern;
  std::optional<std::uint64_t> f_used;  // split case only
};

/// Exact non-negative rational in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t num, std::uint64_t den);
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;  // "n/d", or "n" when d = 1

  bool operator==(const Rational&) const = default;
};

/// True iff (-p/q) = 1 for every odd prime q | N. Vacuously true for N = 1, 2.
/// Throws DomainError if p is 2, not prime, or divides D.
bool genus_root_criterion(const FundamentalDiscriminant& d, std::uint64_t p);

/// Splitting pattern of p in the real subfield, from genus theory alone.
/// `cg` must be the class group of `d`.
Prediction predict(const FundamentalDiscriminant& d, std::uint64_t p, const ClassGroup& cg);

/// 1/(2h) + 1/2^t.
Rational theoretical_density(const FundamentalDiscriminant& d, std::uint64_t h);

/// Checks prod over q | D of (q*/p) == (D/p). Always true; used as a self-test.
bool symbol_product_identity(const FundamentalDiscriminant& d, std::uint64_t p);

}  // namespace classlaw
