#include "classlaw/numtheory.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "classlaw/error.hpp"

namespace classlaw {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= m - b ? a - (m - b) : a + b;
}

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

std::uint64_t magnitude(std::int64_t a) {
  return a < 0 ? static_cast<std::uint64_t>(-(a + 1)) + 1 : static_cast<std::uint64_t>(a);
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = pow_mod(a % n, d, n);
  if (x == 0 || x == 1 || x == n - 1) return false;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's cycle detection with batched gcds. Returns a non-trivial divisor of
// the odd composite n; the polynomial constant is bumped until one is found.
std::uint64_t pollard_brent(std::uint64_t n) {
  constexpr std::uint64_t kBatch = 128;
  for (std::uint64_t c = 1;; ++c) {
    auto step = [&](std::uint64_t v) { return add_mod(mul_mod(v, v, n), c, n); };
    std::uint64_t y = 2, x = 2, ys = 2, g = 1, q = 1;
    std::uint64_t r = 1;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = step(y);
          q = mul_mod(q, abs_diff(x, y), n);
        }
        g = std::gcd(q, n);
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(abs_diff(x, ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_large(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = pollard_brent(n);
  split_large(d, out);
  split_large(n / d, out);
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::uint64_t PrimeFactorization::product() const {
  std::uint64_t v = 1;
  for (const auto& f : factors)
    for (unsigned e = 0; e < f.exponent; ++e) v *= f.prime;
  return v;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t mod_floor(std::int64_t a, std::uint64_t m) {
  if (a >= 0) return static_cast<std::uint64_t>(a) % m;
  std::uint64_t r = magnitude(a) % m;
  return r == 0 ? 0 : m - r;
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) throw DomainError("kronecker: modulus must be nonzero");
  int result = 1;
  std::uint64_t m = magnitude(n);
  if (n < 0 && a < 0) result = -result;

  int v = std::countr_zero(m);
  if (v > 0) {
    if ((a & 1) == 0) return 0;
    m >>= v;
    if (v & 1) {
      std::uint64_t r = mod_floor(a, 8);
      if (r == 3 || r == 5) result = -result;
    }
  }

  // Jacobi symbol for odd m.
  std::uint64_t x = mod_floor(a, m);
  while (x != 0) {
    int s = std::countr_zero(x);
    x >>= s;
    if (s & 1) {
      std::uint64_t r = m & 7;
      if (r == 3 || r == 5) result = -result;
    }
    if ((x & 3) == 3 && (m & 3) == 3) result = -result;
    std::swap(x, m);
    x %= m;
  }
  return m == 1 ? result : 0;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {2,  3,  5,  7,  11, 13,
                                                           17, 19, 23, 29, 31, 37};
  for (auto b : kBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = std::countr_zero(d);
  d >>= s;
  for (auto b : kBases)
    if (miller_rabin_witness(n, b, d, s)) return false;
  return true;
}

PrimeFactorization factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: input must be positive");
  PrimeFactorization out;
  out.value = n;
  std::uint64_t rest = n;
  for (std::uint64_t p : small_primes()) {
    if (p * p > rest) break;
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  }
  if (rest == 1) return out;

  std::vector<std::uint64_t> large;
  if (rest <= kTrialLimit * kTrialLimit)
    large.push_back(rest);  // no factor below 10^6, so rest is prime
  else
    split_large(rest, large);
  std::sort(large.begin(), large.end());
  for (std::uint64_t p : large) {
    if (!out.factors.empty() && out.factors.back().prime == p)
      ++out.factors.back().exponent;
    else
      out.factors.push_back({p, 1});
  }
  return out;
}

std::optional<std::uint64_t> sqrt_mod(std::int64_t a, std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw DomainError("sqrt_mod: modulus " + std::to_string(p) + " is not an odd prime");
  std::uint64_t x = mod_floor(a, p);
  if (x == 0) return 0;
  if (pow_mod(x, (p - 1) / 2, p) != 1) return std::nullopt;

  std::uint64_t r;
  if (p % 4 == 3) {
    r = pow_mod(x, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks
    std::uint64_t q = p - 1;
    int s = std::countr_zero(q);
    q >>= s;
    std::uint64_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t c = pow_mod(z, q, p);
    std::uint64_t t = pow_mod(x, q, p);
    r = pow_mod(x, (q + 1) / 2, p);
    int m = s;
    while (t != 1) {
      int i = 0;
      std::uint64_t t2 = t;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, p);
        ++i;
      }
      std::uint64_t b = c;
      for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
      r = mul_mod(r, b, p);
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      m = i;
    }
  }
  return std::min(r, p - r);
}

std::vector<std::uint64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw DomainError("primes_in_range: lo must not exceed hi");
  std::vector<std::uint64_t> out;
  if (hi < 2) return out;
  const auto first = static_cast<std::uint64_t>(std::max<std::int64_t>(lo, 2));
  const auto last = static_cast<std::uint64_t>(hi);

  constexpr std::uint64_t kSieveCeiling = 1'000'000'000'000ULL;
  if (last > kSieveCeiling) {
    for (std::uint64_t n = first; n <= last && n >= first; ++n)
      if (is_prime(n)) out.push_back(n);
    return out;
  }

  const std::uint64_t root = isqrt(last);
  std::vector<std::uint64_t> base;
  {
    std::vector<bool> composite(root + 1, false);
    for (std::uint64_t i = 2; i <= root; ++i) {
      if (composite[i]) continue;
      base.push_back(i);
      for (std::uint64_t j = i * i; j <= root; j += i) composite[j] = true;
    }
  }

  constexpr std::uint64_t kSegment = 1 << 18;
  std::vector<bool> composite(kSegment);
  for (std::uint64_t start = first; start <= last; start += kSegment) {
    const std::uint64_t end = std::min(last, start + kSegment - 1);
    std::fill(composite.begin(), composite.end(), false);
    for (std::uint64_t p : base) {
      std::uint64_t j = std::max(p * p, (start + p - 1) / p * p);
      for (; j <= end; j += p) composite[j - start] = true;
    }
    for (std::uint64_t n = start; n <= end; ++n)
      if (!composite[n - start]) out.push_back(n);
    if (end == last) break;
  }
  return out;
}

}  // namespace classlaw
