#include "classlaw/quadforms.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>
#include <tuple>

#include "classlaw/error.hpp"
#include "classlaw/numtheory.hpp"

namespace classlaw {

namespace {

using i128 = __int128;

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 floor_mod(i128 a, i128 m) { return a - floor_div(a, m) * m; }

std::int64_t narrow(i128 v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw ResourceError(std::string(what) + ": form coefficient exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

// Returns (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0.
std::tuple<i128, i128, i128> ext_gcd(i128 a, i128 b) {
  i128 old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    const i128 q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_x, x) = std::make_tuple(x, old_x - q * x);
    std::tie(old_y, y) = std::make_tuple(y, old_y - q * y);
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

// (a, b, D) -> (a, b, (b^2 - D) / 4a)
QuadForm complete(i128 a, i128 b, i128 disc, const char* what) {
  const i128 num = b * b - disc;
  if (num % (4 * a) != 0)
    throw DomainError(std::string(what) + ": no integral form with the given a, b, D");
  return {narrow(a, what), narrow(b, what), narrow(num / (4 * a), what)};
}

}  // namespace

std::int64_t QuadForm::discriminant() const {
  return narrow(static_cast<i128>(b) * b - static_cast<i128>(4) * a * c, "discriminant");
}

bool QuadForm::is_positive_definite() const {
  return a > 0 && static_cast<i128>(b) * b - static_cast<i128>(4) * a * c < 0;
}

bool QuadForm::is_reduced() const {
  if (!is_positive_definite()) return false;
  const std::int64_t abs_b = b < 0 ? -b : b;
  if (!(abs_b <= a && a <= c)) return false;
  if ((abs_b == a || a == c) && b < 0) return false;
  return true;
}

std::string QuadForm::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

QuadForm reduce(QuadForm f) {
  if (!f.is_positive_definite())
    throw DomainError("reduce: form " + f.to_string() + " is not positive definite");
  const i128 disc = static_cast<i128>(f.b) * f.b - static_cast<i128>(4) * f.a * f.c;
  i128 a = f.a, b = f.b, c = f.c;

  auto normalize = [&] {
    if (-a < b && b <= a) return;
    const i128 r = floor_div(a - b, 2 * a);
    b += 2 * a * r;
    c = (b * b - disc) / (4 * a);
  };

  normalize();
  while (a > c) {
    std::swap(a, c);
    b = -b;
    normalize();
  }
  if (a == c && b < 0) b = -b;
  return {narrow(a, "reduce"), narrow(b, "reduce"), narrow(c, "reduce")};
}

QuadForm compose(const QuadForm& f1, const QuadForm& f2) {
  const std::int64_t disc = f1.discriminant();
  if (disc != f2.discriminant())
    throw DomainError("compose: discriminants differ (" + std::to_string(disc) + " vs " +
                      std::to_string(f2.discriminant()) + ")");
  if (!f1.is_positive_definite() || !f2.is_positive_definite())
    throw DomainError("compose: forms must be positive definite");

  const QuadForm& g1 = f1.a <= f2.a ? f1 : f2;
  const QuadForm& g2 = f1.a <= f2.a ? f2 : f1;
  const i128 a1 = g1.a, b1 = g1.b, a2 = g2.a, b2 = g2.b, c2 = g2.c;

  const i128 s = (b1 + b2) / 2;
  const i128 n = b2 - s;

  i128 y1, d;
  if (a2 % a1 == 0) {
    y1 = 0;
    d = a1;
  } else {
    auto [g, u, v] = ext_gcd(a2, a1);
    (void)v;
    y1 = u;
    d = g;
  }

  i128 x2, y2, d1;
  if (s % d == 0) {
    y2 = -1;
    x2 = 0;
    d1 = d;
  } else {
    auto [g, x, y] = ext_gcd(s, d);
    x2 = x;
    y2 = -y;
    d1 = g;
  }

  const i128 v1 = a1 / d1;
  const i128 v2 = a2 / d1;
  const i128 r = floor_mod(y1 * y2 * n - x2 * c2, v1);
  const i128 b3 = b2 + 2 * v2 * r;
  const i128 a3 = v1 * v2;
  return reduce(complete(a3, b3, disc, "compose"));
}

QuadForm inverse(const QuadForm& f) { return reduce({f.a, -f.b, f.c}); }

QuadForm principal_form(std::int64_t discriminant) {
  if (discriminant >= 0) throw DomainError("principal_form: discriminant must be negative");
  const std::uint64_t r = mod_floor(discriminant, 4);
  if (r == 0) return {1, 0, -discriminant / 4};
  if (r == 1) return {1, 1, (1 - discriminant) / 4};
  throw DomainError("principal_form: " + std::to_string(discriminant) + " is not a discriminant");
}

bool is_principal(const QuadForm& f) { return reduce(f) == principal_form(f.discriminant()); }

std::uint64_t element_order(const QuadForm& f) {
  const QuadForm base = reduce(f);
  const QuadForm identity = principal_form(base.discriminant());
  // h(D) < |D| for every negative discriminant.
  const auto bound = static_cast<std::uint64_t>(-base.discriminant());
  QuadForm acc = base;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (acc == identity) return k;
    acc = compose(acc, base);
  }
  throw DomainError("element_order: no finite order found for " + base.to_string());
}

bool ClassGroup::contains(const QuadForm& f) const {
  return std::find(forms_.begin(), forms_.end(), f) != forms_.end();
}

std::size_t ClassGroup::index_of(const QuadForm& f) const {
  auto it = std::find(forms_.begin(), forms_.end(), f);
  if (it == forms_.end()) throw DomainError("form " + f.to_string() + " not in class group");
  return static_cast<std::size_t>(it - forms_.begin());
}

ClassGroup class_group(const FundamentalDiscriminant& d) {
  ClassGroup cg(d);
  const std::int64_t disc = d.value();
  const std::int64_t abs_d = -disc;
  const std::int64_t parity = abs_d & 1;
  for (std::int64_t a = 1; 3 * a * a <= abs_d; ++a) {
    for (std::int64_t b = parity; b <= a; b += 2) {
      const std::int64_t num = b * b - disc;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      cg.forms_.push_back({a, b, c});
      if (b != 0 && b != a && a != c) cg.forms_.push_back({a, -b, c});
    }
  }
  return cg;
}

std::uint64_t class_number(const FundamentalDiscriminant& d) { return class_group(d).h(); }

QuadForm prime_form_unreduced(const FundamentalDiscriminant& d, std::uint64_t p) {
  if (p == 2 || !is_prime(p))
    throw DomainError("prime_form: p = " + std::to_string(p) + " is not an odd prime");
  const std::int64_t disc = d.value();
  const auto sp = static_cast<std::int64_t>(p);
  if (kronecker(disc, sp) != 1)
    throw DomainError("prime_form: p = " + std::to_string(p) + " does not split in D = " +
                      std::to_string(disc));
  const auto r = static_cast<std::int64_t>(*sqrt_mod(disc, p));
  const std::int64_t parity = disc & 1;
  const std::array<std::int64_t, 4> candidates = {r, sp - r, sp + r, 2 * sp - r};
  std::int64_t b = 2 * sp;
  for (auto cand : candidates)
    if (cand > 0 && cand < 2 * sp && (cand & 1) == parity) b = std::min(b, cand);
  return complete(sp, b, disc, "prime_form");
}

QuadForm prime_form(const FundamentalDiscriminant& d, std::uint64_t p) {
  return reduce(prime_form_unreduced(d, p));
}

}  // namespace classlaw
