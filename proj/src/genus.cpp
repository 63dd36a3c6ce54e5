#include "classlaw/genus.hpp"

#include <numeric>
#include <optional>
#include <string>

#include "classlaw/error.hpp"
#include "classlaw/numtheory.hpp"

namespace classlaw {

namespace {

// Returns the reason d fails to be a negative fundamental discriminant, or
// nothing when it is one.
std::optional<std::string> fundamental_defect(std::int64_t d, std::uint64_t* kernel) {
  if (d >= 0) return "discriminant must be negative";
  const std::uint64_t r = mod_floor(d, 4);
  std::int64_t m = d;
  if (r == 0) {
    m = d / 4;
    const std::uint64_t mr = mod_floor(m, 4);
    if (mr != 2 && mr != 3)
      return "D/4 = " + std::to_string(m) + " is congruent to " + std::to_string(mr) +
             " mod 4 (need 2 or 3)";
  } else if (r != 1) {
    return "D is congruent to " + std::to_string(r) + " mod 4 (need 0 or 1)";
  }
  const auto n = static_cast<std::uint64_t>(-m);
  for (const auto& pp : factorize(n).factors)
    if (pp.exponent > 1)
      return "not squarefree: " + std::to_string(pp.prime) + "^2 divides " + std::to_string(m);
  if (kernel) *kernel = n;
  return std::nullopt;
}

void require_odd_unramified(const FundamentalDiscriminant& d, std::uint64_t p,
                            const char* op) {
  if (p == 2 || !is_prime(p))
    throw DomainError(std::string(op) + ": p = " + std::to_string(p) + " is not an odd prime");
  if (d.divisible_by(p))
    throw DomainError(std::string(op) + ": p = " + std::to_string(p) + " divides D = " +
                      std::to_string(d.value()));
}

}  // namespace

FundamentalDiscriminant FundamentalDiscriminant::make(std::int64_t d) {
  std::uint64_t n = 0;
  if (auto defect = fundamental_defect(d, &n))
    throw ValidationError("not a fundamental discriminant: " + std::to_string(d) + ": " +
                          *defect);

  FundamentalDiscriminant out;
  out.d_ = d;
  out.n_ = n;

  std::int64_t odd_product = 1;
  for (const auto& pp : factorize(n).factors) {
    if (pp.prime == 2) continue;
    const auto q = static_cast<std::int64_t>(pp.prime);
    const std::int64_t qstar = q % 4 == 1 ? q : -q;
    out.stars_.push_back({pp.prime, qstar});
    odd_product *= qstar;
  }
  if (d % 2 == 0) {
    const std::int64_t two_star = d / odd_product;
    if (two_star != -4 && two_star != 8 && two_star != -8)
      throw ValidationError("inconsistent 2-part " + std::to_string(two_star) + " of " +
                            std::to_string(d));
    out.stars_.insert(out.stars_.begin(), {2, two_star});
  } else if (odd_product != d) {
    throw ValidationError("prime discriminant product mismatch for " + std::to_string(d));
  }
  return out;
}

bool is_fundamental(std::int64_t d) { return !fundamental_defect(d, nullptr).has_value(); }

std::vector<FundamentalDiscriminant> fundamental_discriminants(std::int64_t lo, std::int64_t hi) {
  std::vector<FundamentalDiscriminant> out;
  for (std::int64_t d = lo; d <= hi && d < 0; ++d)
    if (is_fundamental(d)) out.push_back(FundamentalDiscriminant::make(d));
  return out;
}

std::string_view to_string(SplitCase c) {
  switch (c) {
    case SplitCase::split: return "split";
    case SplitCase::inert_genus: return "inert_genus";
    case SplitCase::inert_nongenus: return "inert_nongenus";
  }
  return "?";
}

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

bool genus_root_criterion(const FundamentalDiscriminant& d, std::uint64_t p) {
  require_odd_unramified(d, p, "genus_root_criterion");
  for (const auto& s : d.stars()) {
    if (s.q == 2) continue;
    if (kronecker(-static_cast<std::int64_t>(p), static_cast<std::int64_t>(s.q)) != 1)
      return false;
  }
  return true;
}

Prediction predict(const FundamentalDiscriminant& d, std::uint64_t p, const ClassGroup& cg) {
  require_odd_unramified(d, p, "predict");
  if (!(cg.disc() == d))
    throw DomainError("predict: class group belongs to a different discriminant");

  const std::uint64_t h = cg.h();
  Prediction out;
  if (kronecker(d.value(), static_cast<std::int64_t>(p)) == 1) {
    const std::uint64_t f = element_order(prime_form(d, p));
    out.case_tag = SplitCase::split;
    out.f_used = f;
    out.pattern.add(f, h / f);
  } else if (genus_root_criterion(d, p)) {
    const std::uint64_t genus_count = std::uint64_t{1} << (d.prime_count() - 1);
    out.case_tag = SplitCase::inert_genus;
    out.pattern.add(1, genus_count);
    if (h > genus_count) out.pattern.add(2, (h - genus_count) / 2);
  } else {
    out.case_tag = SplitCase::inert_nongenus;
    out.pattern.add(2, h / 2);
  }
  return out;
}

Rational theoretical_density(const FundamentalDiscriminant& d, std::uint64_t h) {
  if (h == 0) throw DomainError("theoretical_density: class number must be positive");
  const std::uint64_t two_t = std::uint64_t{1} << d.prime_count();
  return Rational::make(two_t + 2 * h, 2 * h * two_t);
}

bool symbol_product_identity(const FundamentalDiscriminant& d, std::uint64_t p) {
  require_odd_unramified(d, p, "symbol_product_identity");
  const auto sp = static_cast<std::int64_t>(p);
  int product = 1;
  for (const auto& s : d.stars()) product *= kronecker(s.qstar, sp);
  return product == kronecker(d.value(), sp);
}

}  // namespace classlaw
