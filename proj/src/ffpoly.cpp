#include "classlaw/ffpoly.hpp"

#include <algorithm>
#include <string>

#include "classlaw/error.hpp"
#include "classlaw/numtheory.hpp"

namespace classlaw {

namespace {

constexpr std::uint64_t kScanLimit = 10'000;

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= p - b ? a - (p - b) : a + b;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

void require_same_modulus(const FpPoly& a, const FpPoly& b) {
  if (a.modulus() != b.modulus())
    throw DomainError("F_p polynomials over different moduli (" + std::to_string(a.modulus()) +
                      " vs " + std::to_string(b.modulus()) + ")");
}

FpPoly random_below(std::uint64_t p, std::int64_t degree_bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  std::vector<std::uint64_t> c(static_cast<std::size_t>(degree_bound));
  for (auto& v : c) v = coeff(rng);
  return FpPoly(p, c);
}

void split_into(const FpPoly& g, std::uint64_t d, const mpz_class& exponent,
                std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (static_cast<std::uint64_t>(g.degree()) == d) {
    out.push_back(g);
    return;
  }
  const std::uint64_t p = g.modulus();
  const FpPoly one = FpPoly::constant(p, 1);
  while (true) {
    const FpPoly a = random_below(p, g.degree(), rng);
    if (a.degree() < 1) continue;
    const FpPoly u = poly_gcd(g, powmod(a, exponent, g) - one);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      split_into(u, d, exponent, rng, out);
      split_into(g / u, d, exponent, rng, out);
      return;
    }
  }
}

}  // namespace

FpPoly::FpPoly(std::uint64_t p, const std::vector<std::uint64_t>& coeffs) : p_(p), c_(coeffs) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw DomainError("F_p polynomial modulus " + std::to_string(p) + " is not an odd prime");
  for (auto& v : c_) v %= p_;
  trim();
}

FpPoly::FpPoly(Unchecked, std::uint64_t p, std::vector<std::uint64_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
  trim();
}

FpPoly FpPoly::from_signed(std::uint64_t p, const std::vector<std::int64_t>& coeffs) {
  FpPoly out(p, {});
  out.c_.reserve(coeffs.size());
  for (auto v : coeffs) out.c_.push_back(mod_floor(v, p));
  out.trim();
  return out;
}

FpPoly FpPoly::zero(std::uint64_t p) { return FpPoly(p, {}); }
FpPoly FpPoly::constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c}); }
FpPoly FpPoly::x(std::uint64_t p) { return FpPoly(p, {0, 1}); }

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t FpPoly::operator()(std::uint64_t x) const {
  x %= p_;
  std::uint64_t acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = add_mod(mul_mod(acc, x, p_), c_[i], p_);
  return acc;
}

FpPoly FpPoly::monic() const {
  if (c_.empty()) return *this;
  const std::uint64_t inv = inv_mod(c_.back(), p_);
  std::vector<std::uint64_t> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = mul_mod(c_[i], inv, p_);
  return FpPoly(Unchecked{}, p_, std::move(out));
}

FpPoly FpPoly::derivative() const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(mul_mod(c_[i], i % p_, p_));
  return FpPoly(Unchecked{}, p_, std::move(out));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  require_same_modulus(a, b);
  std::vector<std::uint64_t> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = add_mod(out[i], b.c_[i], a.p_);
  return FpPoly(FpPoly::Unchecked{}, a.p_, std::move(out));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  require_same_modulus(a, b);
  std::vector<std::uint64_t> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = sub_mod(out[i], b.c_[i], a.p_);
  return FpPoly(FpPoly::Unchecked{}, a.p_, std::move(out));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  require_same_modulus(a, b);
  if (a.c_.empty() || b.c_.empty()) return FpPoly(FpPoly::Unchecked{}, a.p_, {});
  std::vector<std::uint64_t> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out[i + j] = add_mod(out[i + j], mul_mod(a.c_[i], b.c_[j], a.p_), a.p_);
  }
  return FpPoly(FpPoly::Unchecked{}, a.p_, std::move(out));
}

bool FpPoly::operator<(const FpPoly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  require_same_modulus(a, b);
  if (b.is_zero()) throw DomainError("F_p polynomial division by zero");
  const std::uint64_t p = a.p_;
  if (a.degree() < b.degree())
    return {FpPoly(FpPoly::Unchecked{}, p, {}), a};
  std::vector<std::uint64_t> rem = a.c_;
  const std::size_t db = b.c_.size() - 1;
  std::vector<std::uint64_t> quot(rem.size() - db, 0);
  const std::uint64_t inv = inv_mod(b.c_.back(), p);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const std::uint64_t coef = mul_mod(rem[k + db], inv, p);
    quot[k] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= db; ++j)
      rem[k + j] = sub_mod(rem[k + j], mul_mod(coef, b.c_[j], p), p);
  }
  rem.resize(db);
  return {FpPoly(FpPoly::Unchecked{}, p, std::move(quot)),
          FpPoly(FpPoly::Unchecked{}, p, std::move(rem))};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }
FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }

FpPoly poly_gcd(const FpPoly& f, const FpPoly& g) {
  require_same_modulus(f, g);
  FpPoly a = f, b = g;
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly powmod(const FpPoly& g, const mpz_class& e, const FpPoly& f) {
  require_same_modulus(g, f);
  if (f.degree() < 1) throw DomainError("powmod: modulus polynomial must have degree >= 1");
  if (e < 0) throw DomainError("powmod: negative exponent");
  const FpPoly base = g % f;
  FpPoly acc = FpPoly::constant(f.modulus(), 1);
  for (std::size_t bit = mpz_sizeinbase(e.get_mpz_t(), 2); bit-- > 0;) {
    acc = (acc * acc) % f;
    if (mpz_tstbit(e.get_mpz_t(), bit)) acc = (acc * base) % f;
  }
  return acc % f;
}

FpPoly powmod_x(const mpz_class& e, const FpPoly& f) {
  return powmod(FpPoly::x(f.modulus()), e, f);
}

FpPoly reduce_mod(const ClassPolynomial& poly, std::uint64_t p) {
  std::vector<std::uint64_t> c;
  c.reserve(poly.coeffs.size());
  for (const auto& v : poly.coeffs) c.push_back(mpz_fdiv_ui(v.get_mpz_t(), p));
  return FpPoly(p, c);
}

bool is_squarefree(const FpPoly& f) {
  if (f.degree() < 1) throw DomainError("is_squarefree: polynomial must have degree >= 1");
  return poly_gcd(f, f.derivative()).degree() == 0;
}

std::vector<std::pair<std::uint64_t, FpPoly>> ddf_stages(const FpPoly& f) {
  const std::uint64_t p = f.modulus();
  const mpz_class pz(std::to_string(p));
  const FpPoly x = FpPoly::x(p);
  std::vector<std::pair<std::uint64_t, FpPoly>> stages;
  FpPoly rest = f.monic();
  FpPoly h = x % rest;
  for (std::uint64_t d = 1; rest.degree() >= static_cast<std::int64_t>(2 * d); ++d) {
    h = powmod(h, pz, rest);
    FpPoly g = poly_gcd(rest, h - x);
    if (g.degree() > 0) {
      rest = rest / g;
      h = h % rest;
      stages.emplace_back(d, std::move(g));
    }
  }
  if (rest.degree() > 0) stages.emplace_back(static_cast<std::uint64_t>(rest.degree()), rest);
  return stages;
}

SplittingPattern ddf(const FpPoly& f) {
  if (f.degree() < 1) throw DomainError("ddf: polynomial must have degree >= 1");
  if (!f.is_monic()) throw DomainError("ddf: polynomial must be monic");
  if (!is_squarefree(f)) throw DomainError("ddf: polynomial is not squarefree");
  SplittingPattern out;
  for (const auto& [d, g] : ddf_stages(f)) out.add(d, static_cast<std::uint64_t>(g.degree()) / d);
  return out;
}

std::vector<FpPoly> equal_degree_split(const FpPoly& g, std::uint64_t d, std::mt19937_64& rng) {
  if (d == 0 || g.degree() < 1 || static_cast<std::uint64_t>(g.degree()) % d != 0)
    throw DomainError("equal_degree_split: degree must be a positive multiple of d");
  mpz_class exponent;
  mpz_ui_pow_ui(exponent.get_mpz_t(), g.modulus(), d);
  exponent = (exponent - 1) / 2;
  std::vector<FpPoly> out;
  split_into(g.monic(), d, exponent, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FpPoly> factor_squarefree(const FpPoly& f, std::mt19937_64& rng) {
  if (f.degree() < 1) throw DomainError("factor_squarefree: polynomial must have degree >= 1");
  if (!is_squarefree(f)) throw DomainError("factor_squarefree: polynomial is not squarefree");
  std::vector<FpPoly> out;
  for (const auto& [d, g] : ddf_stages(f)) {
    auto part = equal_degree_split(g, d, rng);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t root_count(const FpPoly& f) {
  if (f.is_zero()) throw DomainError("root_count: zero polynomial");
  if (f.degree() < 1) return 0;
  const mpz_class pz(std::to_string(f.modulus()));
  const FpPoly g = poly_gcd(f, powmod_x(pz, f) - FpPoly::x(f.modulus()));
  return static_cast<std::uint64_t>(g.degree());
}

std::vector<std::uint64_t> roots(const FpPoly& f, std::mt19937_64& rng) {
  if (f.is_zero()) throw DomainError("roots: zero polynomial");
  std::vector<std::uint64_t> out;
  if (f.degree() < 1) return out;
  const std::uint64_t p = f.modulus();
  if (p < kScanLimit) {
    for (std::uint64_t x = 0; x < p; ++x)
      if (f(x) == 0) out.push_back(x);
    return out;
  }
  const mpz_class pz(std::to_string(p));
  const FpPoly linear = poly_gcd(f, powmod_x(pz, f) - FpPoly::x(p));
  if (linear.degree() < 1) return out;
  for (const auto& factor : equal_degree_split(linear, 1, rng))
    out.push_back(factor.coeffs()[0] == 0 ? 0 : p - factor.coeffs()[0]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> roots(const FpPoly& f) {
  std::mt19937_64 rng(kDefaultSeed);
  return roots(f, rng);
}

}  // namespace classlaw
