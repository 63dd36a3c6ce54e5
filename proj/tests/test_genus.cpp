#include <random>

#include "classlaw/error.hpp"
#include "classlaw/genus.hpp"
#include "classlaw/numtheory.hpp"
#include "doctest.h"

using namespace classlaw;

TEST_CASE("make_fundamental examples") {
  auto d15 = make_fundamental(-15);
  CHECK(d15.kernel() == 15);
  CHECK(d15.prime_count() == 2);
  CHECK(d15.stars() == std::vector<PrimeStarFactor>{{3, -3}, {5, 5}});

  auto d4 = make_fundamental(-4);
  CHECK(d4.kernel() == 1);
  CHECK(d4.prime_count() == 1);
  CHECK(d4.stars() == std::vector<PrimeStarFactor>{{2, -4}});

  auto d24 = make_fundamental(-24);
  CHECK(d24.kernel() == 6);
  CHECK(d24.stars() == std::vector<PrimeStarFactor>{{2, 8}, {3, -3}});

  CHECK(make_fundamental(-8).stars() == std::vector<PrimeStarFactor>{{2, -8}});
  CHECK(make_fundamental(-3).stars() == std::vector<PrimeStarFactor>{{3, -3}});

  for (std::int64_t bad : {-12, -16, -9, -1, -2, 0, 5, -27, -36, -100})
    CHECK_THROWS_AS(make_fundamental(bad), ValidationError);
  try {
    make_fundamental(-12);
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("mod 4") != std::string::npos);
  }
}

TEST_CASE("prime discriminants multiply to D") {
  std::uint64_t count = 0;
  for (const auto& d : fundamental_discriminants(-5000, -3)) {
    ++count;
    std::int64_t product = 1;
    for (const auto& s : d.stars()) {
      product *= s.qstar;
      if (s.q == 2) {
        REQUIRE((s.qstar == -4 || s.qstar == 8 || s.qstar == -8));
      } else {
        const auto q = static_cast<std::int64_t>(s.q);
        REQUIRE(s.qstar == ((q - 1) / 2 % 2 == 0 ? q : -q));
      }
    }
    REQUIRE(product == d.value());
    REQUIRE((d.value() == -static_cast<std::int64_t>(d.kernel()) ||
             d.value() == -4 * static_cast<std::int64_t>(d.kernel())));
  }
  // Fundamental discriminants in [-5000, -1] number about 3/pi^2 of the range.
  CHECK(count > 1400);
  CHECK(count < 1650);
}

TEST_CASE("genus_root_criterion") {
  const auto d15 = make_fundamental(-15);
  CHECK(genus_root_criterion(d15, 11));
  CHECK_FALSE(genus_root_criterion(d15, 43));
  CHECK(genus_root_criterion(make_fundamental(-4), 7));
  CHECK(genus_root_criterion(make_fundamental(-8), 5));
  CHECK_THROWS_AS(genus_root_criterion(d15, 5), DomainError);
  CHECK_THROWS_AS(genus_root_criterion(d15, 2), DomainError);
  CHECK_THROWS_AS(genus_root_criterion(d15, 9), DomainError);
}

TEST_CASE("predict examples") {
  const auto d15 = make_fundamental(-15);
  const auto g15 = class_group(d15);

  auto p11 = predict(d15, 11, g15);
  CHECK(p11.case_tag == SplitCase::inert_genus);
  CHECK(p11.pattern.to_string() == "1^2");
  CHECK_FALSE(p11.f_used.has_value());

  auto p17 = predict(d15, 17, g15);
  CHECK(p17.case_tag == SplitCase::split);
  CHECK(p17.f_used == 2u);
  CHECK(p17.pattern.to_string() == "2^1");

  auto p43 = predict(d15, 43, g15);
  CHECK(p43.case_tag == SplitCase::inert_nongenus);
  CHECK(p43.pattern.to_string() == "2^1");

  const auto d4 = make_fundamental(-4);
  auto p7 = predict(d4, 7, class_group(d4));
  CHECK(p7.case_tag == SplitCase::inert_genus);
  CHECK(p7.pattern.to_string() == "1^1");

  CHECK_THROWS_AS(predict(d15, 3, g15), DomainError);
  CHECK_THROWS_AS(predict(d15, 2, g15), DomainError);
  CHECK_THROWS_AS(predict(make_fundamental(-23), 7, g15), DomainError);
}

TEST_CASE("theoretical_density") {
  CHECK(theoretical_density(make_fundamental(-15), 2) == Rational{1, 2});
  CHECK(theoretical_density(make_fundamental(-4), 1) == Rational{1, 1});
  CHECK(theoretical_density(make_fundamental(-23), 3) == Rational{2, 3});
  CHECK(theoretical_density(make_fundamental(-20), 2) == Rational{1, 2});
  CHECK(Rational{2, 3}.to_string() == "2/3");
  CHECK(Rational{1, 1}.to_string() == "1");
}

TEST_CASE("symbol_product_identity examples") {
  CHECK(symbol_product_identity(make_fundamental(-15), 7));
  CHECK(symbol_product_identity(make_fundamental(-24), 5));
  CHECK(symbol_product_identity(make_fundamental(-4), 3));
  // (-3/7) = 1 and (5/7) = -1, so (-15/7) = -1.
  CHECK(kronecker(-3, 7) == 1);
  CHECK(kronecker(5, 7) == -1);
  CHECK(kronecker(-15, 7) == -1);
  CHECK_THROWS_AS(symbol_product_identity(make_fundamental(-15), 3), DomainError);
}

TEST_CASE("genus invariants for |D| <= 500, odd p <= 1000") {
  const auto primes = primes_in_range(3, 1000);
  for (const auto& d : fundamental_discriminants(-500, -3)) {
    const auto cg = class_group(d);
    const std::uint64_t h = cg.h();
    const std::uint64_t genus = std::uint64_t{1} << (d.prime_count() - 1);
    CAPTURE(d.value());
    for (std::uint64_t p : primes) {
      if (d.divisible_by(p)) continue;
      CAPTURE(p);
      REQUIRE(symbol_product_identity(d, p));

      const auto sp = static_cast<std::int64_t>(p);
      const bool inert = kronecker(d.value(), sp) == -1;
      if (inert && d.prime_count() == 1) REQUIRE(genus_root_criterion(d, p));

      const auto pred = predict(d, p, cg);
      REQUIRE(pred.pattern.total_degree() == h);
      switch (pred.case_tag) {
        case SplitCase::split:
          REQUIRE(pred.pattern.entries().size() == 1);
          REQUIRE(pred.pattern.count_of(*pred.f_used) * *pred.f_used == h);
          break;
        case SplitCase::inert_genus:
          REQUIRE(pred.pattern.linear_count() == genus);
          break;
        case SplitCase::inert_nongenus:
          REQUIRE(pred.pattern.count_of(2) == h / 2);
          break;
      }

      if (inert && genus_root_criterion(d, p) && d.value() % 2 == 0) {
        const std::int64_t two_star = d.stars().front().qstar;
        const std::uint64_t n = d.kernel();
        const int expected = (n % 4 == 1 || n % 8 == 2) ? -1 : 1;
        if (n % 8 == 6) REQUIRE(two_star == 8);
        REQUIRE(kronecker(two_star, sp) == expected);
      }
    }
  }
}

TEST_CASE("splitting pattern notation") {
  SplittingPattern p;
  p.add(2, 3);
  p.add(1, 2);
  CHECK(p.to_string() == "1^2\xC2\xB7" "2^3");
  CHECK(SplittingPattern::parse(p.to_string()) == p);
  CHECK(SplittingPattern::parse("").empty());
  for (const char* bad : {"1", "1^", "^2", "2^1\xC2\xB7" "1^1", "1^0", "0^3", "1^2,2^1", "1^2\xC2\xB7"})
    CHECK_THROWS_AS(SplittingPattern::parse(bad), ValidationError);
  CHECK_THROWS_AS(p.add(0, 1), DomainError);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    SplittingPattern q;
    const int terms = static_cast<int>(rng() % 5);
    for (int k = 0; k < terms; ++k) q.add(1 + rng() % 40, 1 + rng() % 1000);
    REQUIRE(SplittingPattern::parse(q.to_string()) == q);
  }
}
