#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "classlaw/classpoly.hpp"
#include "classlaw/pattern.hpp"

namespace classlaw {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'c1a5'51a0'0001ULL;

/// Dense polynomial over F_p, p an odd prime. Coefficients ascend by degree
/// and carry no trailing zeros; the zero polynomial has no coefficients.
class FpPoly {
 public:
  /// Reduces `coeffs` mod p. Throws DomainError unless p is an odd prime.
  FpPoly(std::uint64_t p, const std::vector<std::uint64_t>& coeffs);
  /// Signed coefficients, reduced to [0, p).
  static FpPoly from_signed(std::uint64_t p, const std::vector<std::int64_t>& coeffs);
  static FpPoly zero(std::uint64_t p);
  static FpPoly constant(std::uint64_t p, std::uint64_t c);
  static FpPoly x(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
  std::uint64_t operator()(std::uint64_t x) const;

  FpPoly monic() const;
  FpPoly derivative() const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  bool operator==(const FpPoly&) const = default;

  /// Polynomial order: degree, then coefficients from the top down.
  bool operator<(const FpPoly& o) const;

 private:
  struct Unchecked {};
  FpPoly(Unchecked, std::uint64_t p, std::vector<std::uint64_t> coeffs);
  void trim();

  std::uint64_t p_;
  std::vector<std::uint64_t> c_;

  friend std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
};

/// Quotient and remainder. Throws DomainError for division by zero or a
/// modulus mismatch.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
FpPoly operator/(const FpPoly& a, const FpPoly& b);

/// Monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
FpPoly poly_gcd(const FpPoly& f, const FpPoly& g);

/// g^e mod f.
FpPoly powmod(const FpPoly& g, const mpz_class& e, const FpPoly& f);
/// X^e mod f, deg f >= 1.
FpPoly powmod_x(const mpz_class& e, const FpPoly& f);

FpPoly reduce_mod(const ClassPolynomial& poly, std::uint64_t p);

/// gcd(f, f') has degree 0. Requires deg f >= 1.
bool is_squarefree(const FpPoly& f);

/// Distinct-degree factorization of a squarefree polynomial: (d, g_d) with
/// g_d the product of all irreducible factors of degree d, ascending d.
std::vector<std::pair<std::uint64_t, FpPoly>> ddf_stages(const FpPoly& f);

/// Splitting pattern of the squarefree polynomial f. Throws DomainError when
/// f is not squarefree, not monic, or constant.
SplittingPattern ddf(const FpPoly& f);

/// Splits g, a product of distinct monic irreducibles of degree d, into those
/// factors (Cantor-Zassenhaus). Result is sorted.
std::vector<FpPoly> equal_degree_split(const FpPoly& g, std::uint64_t d, std::mt19937_64& rng);

/// Monic irreducible factors of the squarefree polynomial f, sorted.
std::vector<FpPoly> factor_squarefree(const FpPoly& f, std::mt19937_64& rng);

/// Number of distinct roots in F_p: deg gcd(f, X^p - X).
std::uint64_t root_count(const FpPoly& f);

/// Roots of the squarefree polynomial f, ascending. Small moduli are scanned
/// directly; otherwise the linear part gcd(f, X^p - X) is split randomly.
std::vector<std::uint64_t> roots(const FpPoly& f, std::mt19937_64& rng);
std::vector<std::uint64_t> roots(const FpPoly& f);

}  // namespace classlaw
