#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "classlaw/discriminant.hpp"

namespace classlaw {

/// Binary quadratic form a x^2 + b x y + c y^2.
struct QuadForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  std::int64_t discriminant() const;
  bool is_positive_definite() const;
  /// |b| <= a <= c, and b >= 0 whenever |b| = a or a = c.
  bool is_reduced() const;
  std::string to_string() const;  // "(a,b,c)"

  auto operator<=>(const QuadForm&) const = default;
};

/// The unique reduced form equivalent to f. Throws DomainError unless f is
/// positive definite.
QuadForm reduce(QuadForm f);

/// Reduced form of the Gauss composite of f1 and f2 (Shanks' formulation of
/// Dirichlet composition). Throws DomainError on mismatched discriminants.
QuadForm compose(const QuadForm& f1, const QuadForm& f2);

QuadForm inverse(const QuadForm& f);
QuadForm principal_form(std::int64_t discriminant);
bool is_principal(const QuadForm& f);

/// Least k >= 1 with f^k principal.
std::uint64_t element_order(const QuadForm& f);

class ClassGroup {
 public:
  const FundamentalDiscriminant& disc() const { return disc_; }
  /// Reduced forms ordered by a, then |b|, then b > 0 before b < 0.
  const std::vector<QuadForm>& forms() const { return forms_; }
  std::uint64_t h() const { return forms_.size(); }
  QuadForm principal() const { return forms_.front(); }
  bool contains(const QuadForm& f) const;
  /// Position of the reduced form f in forms(); throws DomainError if absent.
  std::size_t index_of(const QuadForm& f) const;

 private:
  friend ClassGroup class_group(const FundamentalDiscriminant& d);
  explicit ClassGroup(FundamentalDiscriminant d) : disc_(std::move(d)) {}

  FundamentalDiscriminant disc_;
  std::vector<QuadForm> forms_;
};

ClassGroup class_group(const FundamentalDiscriminant& d);
std::uint64_t class_number(const FundamentalDiscriminant& d);

/// (p, b, (b^2 - D)/4p) with b the smallest positive solution of
/// b^2 = D (mod 4p) of the parity of D; not reduced.
QuadForm prime_form_unreduced(const FundamentalDiscriminant& d, std::uint64_t p);

/// Reduced form of a prime ideal above the split odd prime p. Throws
/// DomainError unless p is an odd prime with (D/p) = 1.
QuadForm prime_form(const FundamentalDiscriminant& d, std::uint64_t p);

}  // namespace classlaw
