#include <numeric>
#include <random>
#include <set>

#include "classlaw/error.hpp"
#include "classlaw/numtheory.hpp"
#include "doctest.h"

using namespace classlaw;

namespace {

// Legendre symbol by exhaustive search of the squares mod p.
int legendre_by_squares(std::int64_t a, std::uint64_t p) {
  const std::uint64_t r = mod_floor(a, p);
  if (r == 0) return 0;
  for (std::uint64_t x = 1; x < p; ++x)
    if (x * x % p == r) return 1;
  return -1;
}

bool prime_by_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("kronecker examples") {
  CHECK(kronecker(-15, 11) == -1);
  CHECK(kronecker(-11, 3) == 1);
  CHECK(kronecker(-4, 2) == 0);
  for (std::int64_t a : {-100, -7, -1, 0, 1, 2, 99}) CHECK(kronecker(a, 1) == 1);
  CHECK_THROWS_AS(kronecker(3, 0), DomainError);
}

TEST_CASE("kronecker matches exhaustive square search for odd p < 200") {
  for (std::uint64_t p = 3; p < 200; p += 2) {
    if (!prime_by_trial(p)) continue;
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(p); ++a)
      REQUIRE(kronecker(a, static_cast<std::int64_t>(p)) == legendre_by_squares(a, p));
  }
}

TEST_CASE("kronecker at 2 and -1") {
  // (a/2) depends on a mod 8.
  for (std::int64_t a = -40; a <= 40; ++a) {
    const std::uint64_t r = mod_floor(a, 8);
    const int expected = a % 2 == 0 ? 0 : (r == 1 || r == 7 ? 1 : -1);
    CHECK(kronecker(a, 2) == expected);
    CHECK(kronecker(a, -1) == (a < 0 ? -1 : 1));
  }
}

TEST_CASE("kronecker is multiplicative and periodic") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> small(-3000, 3000);
  std::uniform_int_distribution<std::int64_t> modulus(1, 3000);
  for (int i = 0; i < 20000; ++i) {
    const std::int64_t a = small(rng), b = small(rng);
    const std::int64_t m = modulus(rng), n = modulus(rng);
    REQUIRE(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
    REQUIRE(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
    REQUIRE((kronecker(a, n) == 0) == (std::gcd(a < 0 ? -a : a, n) != 1));
  }
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 101ULL, 997ULL}) {
    for (int i = 0; i < 500; ++i) {
      const std::int64_t a = small(rng);
      CHECK(kronecker(a, static_cast<std::int64_t>(p)) ==
            kronecker(static_cast<std::int64_t>(mod_floor(a, p)), static_cast<std::int64_t>(p)));
    }
  }
}

TEST_CASE("is_prime") {
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(191025));
  for (std::uint64_t n = 0; n < 100000; ++n) REQUIRE(is_prime(n) == prime_by_trial(n));
  CHECK(is_prime((1ULL << 61) - 1));
  CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime(3215031751ULL));      // strong pseudoprime to bases 2, 3, 5, 7
  CHECK_FALSE(is_prime(3825123056546413051ULL));
  CHECK_FALSE(is_prime(18446744073709551615ULL));
}

TEST_CASE("factorize examples") {
  CHECK(factorize(15).factors == std::vector<PrimePower>{{3, 1}, {5, 1}});
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(20).factors == std::vector<PrimePower>{{2, 2}, {5, 1}});
  CHECK_THROWS_AS(factorize(0), DomainError);
}

TEST_CASE("factorize then multiply is the identity on [1, 10^6]") {
  for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
    const auto f = factorize(n);
    std::uint64_t last = 0;
    for (const auto& pp : f.factors) {
      REQUIRE(pp.prime > last);
      REQUIRE(pp.exponent > 0);
      last = pp.prime;
    }
    REQUIRE(f.product() == n);
  }
}

TEST_CASE("factorize large composites via Pollard rho") {
  const std::uint64_t p1 = 1000003, p2 = 1000033, p3 = 1000037;
  auto f = factorize(p1 * p2 * p3);
  CHECK(f.factors == std::vector<PrimePower>{{p1, 1}, {p2, 1}, {p3, 1}});

  const std::uint64_t m61 = (1ULL << 31) - 1;
  f = factorize(m61 * m61);
  CHECK(f.factors == std::vector<PrimePower>{{m61, 2}});

  const std::uint64_t big = 4294967291ULL;  // largest 32-bit prime
  f = factorize(big * 4294967279ULL);
  CHECK(f.factors == std::vector<PrimePower>{{4294967279ULL, 1}, {big, 1}});

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t n = rng() | 1;
    const auto g = factorize(n);
    REQUIRE(g.product() == n);
    for (const auto& pp : g.factors) REQUIRE(is_prime(pp.prime));
  }
}

TEST_CASE("sqrt_mod examples") {
  CHECK(sqrt_mod(2, 7) == 3u);
  CHECK(sqrt_mod(0, 7) == 0u);
  CHECK_FALSE(sqrt_mod(3, 7).has_value());
  CHECK_THROWS_AS(sqrt_mod(1, 2), DomainError);
  CHECK_THROWS_AS(sqrt_mod(1, 15), DomainError);
}

TEST_CASE("sqrt_mod agrees with exhaustive search") {
  for (std::uint64_t p = 3; p < 400; p += 2) {
    if (!prime_by_trial(p)) continue;
    for (std::int64_t a = -static_cast<std::int64_t>(p); a < static_cast<std::int64_t>(p); ++a) {
      const auto r = sqrt_mod(a, p);
      std::set<std::uint64_t> squares_to_a;
      for (std::uint64_t x = 0; x < p; ++x)
        if (x * x % p == mod_floor(a, p)) squares_to_a.insert(x);
      REQUIRE(r.has_value() == (kronecker(a, static_cast<std::int64_t>(p)) >= 0));
      REQUIRE(r.has_value() == !squares_to_a.empty());
      if (r) {
        REQUIRE(*r == *squares_to_a.begin());
        REQUIRE(*r <= p - *r);
      }
    }
  }
}

TEST_CASE("sqrt_mod on large primes needing Tonelli-Shanks") {
  std::mt19937_64 rng(3);
  for (std::uint64_t p : {1000000009ULL, 998244353ULL, 18446744069414584321ULL}) {
    REQUIRE(is_prime(p));
    for (int i = 0; i < 200; ++i) {
      const auto a = static_cast<std::int64_t>(rng() >> 2);
      const auto r = sqrt_mod(a, p);
      if (!r) continue;
      REQUIRE(mul_mod(*r, *r, p) == mod_floor(a, p));
      REQUIRE(*r <= p - *r);
    }
  }
}

TEST_CASE("primes_in_range") {
  CHECK(primes_in_range(3, 11) == std::vector<std::uint64_t>{3, 5, 7, 11});
  CHECK(primes_in_range(14, 16).empty());
  CHECK(primes_in_range(2, 2) == std::vector<std::uint64_t>{2});
  CHECK(primes_in_range(-10, 1).empty());
  CHECK_THROWS_AS(primes_in_range(5, 4), DomainError);

  const auto ps = primes_in_range(1, 100000);
  CHECK(ps.size() == 9592);
  std::vector<std::uint64_t> brute;
  for (std::uint64_t n = 999000; n <= 1001000; ++n)
    if (prime_by_trial(n)) brute.push_back(n);
  CHECK(primes_in_range(999000, 1001000) == brute);
}
