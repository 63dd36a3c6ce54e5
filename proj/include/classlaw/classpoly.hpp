#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "classlaw/discriminant.hpp"
#include "classlaw/mp.hpp"
#include "classlaw/quadforms.hpp"

namespace classlaw {

inline constexpr std::uint64_t kDefaultMaxBits = std::uint64_t{1} << 18;
inline constexpr std::uint64_t kDefaultMaxAbsDisc = 1'000'000;

struct ClassPolyConfig {
  std::uint64_t max_bits = kDefaultMaxBits;
  std::uint64_t max_abs_disc = kDefaultMaxAbsDisc;
  unsigned max_retries = 3;
  unsigned workers = 1;
};

/// H_D(X) with exact integer coefficients in ascending degree. Monic of
/// degree h(D).
struct ClassPolynomial {
  FundamentalDiscriminant disc;
  std::vector<mpz_class> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  /// e.g. "x^2 + 191025*x - 121287375"
  std::string to_string() const;
};

/// Working precision for H_D: log2 of the expected coefficient height plus a
/// margin of 10 bits per root and 64 bits overall.
std::uint64_t precision_bound(const FundamentalDiscriminant& d, const ClassGroup& cg);

/// (-b + i sqrt|D|) / 2a for a reduced form.
mp::Complex cm_point(const QuadForm& f, mpfr_prec_t prec);

/// Klein's j(tau) = E4(q)^3 / Delta(q), q = exp(2 pi i tau), to relative
/// precision 2^-bits. Delta comes from the pentagonal-number expansion of
/// prod (1 - q^n). Throws ResourceError when bits exceeds max_bits and
/// DomainError when Im(tau) <= 0.
mp::Complex j_invariant(const mp::Complex& tau, std::uint64_t bits,
                        std::uint64_t max_bits = kDefaultMaxBits);

/// j at the CM point of every form of cg, in cg.forms() order.
std::vector<mp::Complex> cm_values(const ClassGroup& cg, std::uint64_t bits, unsigned workers = 1,
                                   std::uint64_t max_bits = kDefaultMaxBits);

/// Expands prod (X - j(tau_f)) at the given precision and rounds. With
/// `paired`, each form with b > 0 whose inverse is a different class
/// contributes the real quadratic X^2 - 2 Re(j) X + |j|^2 for itself and its
/// inverse; otherwise the plain complex product is used. Empty when some
/// coefficient is not within 1/4 of an integer.
std::optional<std::vector<mpz_class>> expand_class_poly(const ClassGroup& cg, std::uint64_t bits,
                                                        bool paired, unsigned workers = 1,
                                                        std::uint64_t max_bits = kDefaultMaxBits);

/// H_D(X). Starts at `start_bits` (precision_bound when zero) and doubles the
/// precision up to config.max_retries times if rounding fails. Throws
/// PrecisionError when it never settles and ResourceError when |D| or the
/// precision exceeds the configured caps.
ClassPolynomial hilbert_class_poly(const FundamentalDiscriminant& d,
                                   const ClassPolyConfig& config = {},
                                   std::uint64_t start_bits = 0);

}  // namespace classlaw
