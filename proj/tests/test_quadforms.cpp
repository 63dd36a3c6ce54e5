#include <cmath>
#include <numeric>
#include <set>

#include "classlaw/error.hpp"
#include "classlaw/numtheory.hpp"
#include "classlaw/quadforms.hpp"
#include "doctest.h"

using namespace classlaw;

namespace {

// Dirichlet's class number formula, an oracle independent of form
// enumeration: h = -(w / 2|D|) * sum_{n=1}^{|D|-1} (D/n) n.
std::int64_t class_number_formula(std::int64_t d) {
  const std::int64_t abs_d = -d;
  std::int64_t sum = 0;
  for (std::int64_t n = 1; n < abs_d; ++n) sum += kronecker(d, n) * n;
  const std::int64_t w = d == -3 ? 6 : (d == -4 ? 4 : 2);
  return -w * sum / (2 * abs_d);
}

// Whether f represents m, searching |x|, |y| within the bound forced by
// positive definiteness.
bool represents(const QuadForm& f, std::int64_t m) {
  const double abs_d = static_cast<double>(-f.discriminant());
  const auto ybound = static_cast<std::int64_t>(std::sqrt(4.0 * f.a * m / abs_d)) + 1;
  const auto xbound = static_cast<std::int64_t>(std::sqrt(4.0 * f.c * m / abs_d)) + 1;
  for (std::int64_t x = -xbound; x <= xbound; ++x)
    for (std::int64_t y = -ybound; y <= ybound; ++y)
      if (f.a * x * x + f.b * x * y + f.c * y * y == m) return true;
  return false;
}

}  // namespace

TEST_CASE("reduce examples") {
  CHECK(reduce({17, 11, 2}) == QuadForm{2, 1, 2});
  CHECK(reduce({1, 1, 4}) == QuadForm{1, 1, 4});
  CHECK(reduce({4, -1, 1}) == QuadForm{1, 1, 4});
  CHECK(reduce({2, -2, 3}) == QuadForm{2, 2, 3});
  CHECK(reduce({3, -1, 3}) == QuadForm{3, 1, 3});
  CHECK_THROWS_AS(reduce({1, 3, 1}), DomainError);   // indefinite
  CHECK_THROWS_AS(reduce({-1, 1, -4}), DomainError);  // negative definite
}

TEST_CASE("reduce is idempotent and preserves the discriminant") {
  for (std::int64_t a = 1; a <= 30; ++a)
    for (std::int64_t b = -40; b <= 40; ++b)
      for (std::int64_t c = 1; c <= 30; ++c) {
        const QuadForm f{a, b, c};
        if (!f.is_positive_definite()) continue;
        const QuadForm r = reduce(f);
        REQUIRE(r.is_reduced());
        REQUIRE(r.discriminant() == f.discriminant());
        REQUIRE(reduce(r) == r);
      }
}

TEST_CASE("compose examples") {
  CHECK(compose({2, 1, 2}, {2, 1, 2}) == QuadForm{1, 1, 4});
  CHECK(compose({2, 1, 3}, {2, -1, 3}) == QuadForm{1, 1, 6});
  CHECK(compose(principal_form(-15), {17, 11, 2}) == QuadForm{2, 1, 2});
  CHECK_THROWS_AS(compose({2, 1, 2}, {2, 1, 3}), DomainError);
}

TEST_CASE("class_group examples") {
  auto g4 = class_group(make_fundamental(-4));
  CHECK(g4.forms() == std::vector<QuadForm>{{1, 0, 1}});
  auto g15 = class_group(make_fundamental(-15));
  CHECK(g15.forms() == std::vector<QuadForm>{{1, 1, 4}, {2, 1, 2}});
  auto g23 = class_group(make_fundamental(-23));
  CHECK(g23.forms() == std::vector<QuadForm>{{1, 1, 6}, {2, 1, 3}, {2, -1, 3}});
  CHECK(class_number(make_fundamental(-4)) == 1);
  CHECK(class_number(make_fundamental(-15)) == 2);
  CHECK(class_number(make_fundamental(-23)) == 3);
  CHECK(class_number(make_fundamental(-163)) == 1);
}

TEST_CASE("class numbers agree with the analytic formula") {
  for (const auto& d : fundamental_discriminants(-2000, -3))
    REQUIRE(class_number(d) == static_cast<std::uint64_t>(class_number_formula(d.value())));
}

TEST_CASE("class groups satisfy the group axioms for |D| <= 500") {
  for (const auto& d : fundamental_discriminants(-500, -3)) {
    const auto cg = class_group(d);
    const auto& forms = cg.forms();
    const QuadForm e = principal_form(d.value());
    CAPTURE(d.value());

    REQUIRE(forms.front() == e);
    REQUIRE(std::set<QuadForm>(forms.begin(), forms.end()).size() == forms.size());
    std::size_t identities = 0;
    for (const auto& f : forms) {
      REQUIRE(f.is_reduced());
      REQUIRE(f.discriminant() == d.value());
      if (compose(f, forms[1 % forms.size()]) == forms[1 % forms.size()]) ++identities;
      REQUIRE(compose(e, f) == f);
      REQUIRE(cg.contains(inverse(f)));
      REQUIRE(compose(f, inverse(f)) == e);
    }
    REQUIRE(identities == 1);

    for (const auto& f : forms)
      for (const auto& g : forms) {
        const QuadForm fg = compose(f, g);
        REQUIRE(cg.contains(fg));
        REQUIRE(fg == compose(g, f));
        for (const auto& k : forms) REQUIRE(compose(fg, k) == compose(f, compose(g, k)));
      }
  }
}

TEST_CASE("composition respects represented values") {
  for (const auto& d : fundamental_discriminants(-300, -3)) {
    const auto cg = class_group(d);
    for (const auto& f : cg.forms())
      for (const auto& g : cg.forms()) {
        if (std::gcd(f.a, g.a) != 1) continue;
        REQUIRE(represents(compose(f, g), f.a * g.a));
      }
  }
}

TEST_CASE("element_order") {
  CHECK(element_order(principal_form(-15)) == 1);
  CHECK(element_order({2, 1, 2}) == 2);
  CHECK(element_order({2, 1, 3}) == 3);
  for (const auto& d : fundamental_discriminants(-500, -3)) {
    const auto cg = class_group(d);
    for (const auto& f : cg.forms()) REQUIRE(cg.h() % element_order(f) == 0);
  }
}

TEST_CASE("2^(t-1) divides h(D)") {
  for (const auto& d : fundamental_discriminants(-500, -3))
    REQUIRE(class_number(d) % (std::uint64_t{1} << (d.prime_count() - 1)) == 0);
}

TEST_CASE("prime_form") {
  const auto d15 = make_fundamental(-15);
  CHECK(prime_form_unreduced(d15, 17) == QuadForm{17, 11, 2});
  CHECK(prime_form(d15, 17) == QuadForm{2, 1, 2});
  CHECK(prime_form(make_fundamental(-4), 5) == QuadForm{1, 0, 1});
  CHECK_THROWS_AS(prime_form(make_fundamental(-23), 2), DomainError);
  CHECK_THROWS_AS(prime_form(d15, 11), DomainError);  // inert
  CHECK_THROWS_AS(prime_form(d15, 5), DomainError);   // ramified

  for (const auto& d : fundamental_discriminants(-300, -3)) {
    for (std::uint64_t p : primes_in_range(3, 300)) {
      if (kronecker(d.value(), static_cast<std::int64_t>(p)) != 1) continue;
      const QuadForm raw = prime_form_unreduced(d, p);
      REQUIRE(raw.discriminant() == d.value());
      REQUIRE(raw.b > 0);
      REQUIRE(raw.b < 2 * static_cast<std::int64_t>(p));
      const QuadForm other{raw.a, 2 * raw.a - raw.b, 0};
      const QuadForm other_full{other.a, other.b,
                                (other.b * other.b - d.value()) / (4 * other.a)};
      REQUIRE(other_full.discriminant() == d.value());
      const auto k = element_order(prime_form(d, p));
      REQUIRE(k == element_order(reduce(other_full)));
      QuadForm acc = principal_form(d.value());
      for (std::uint64_t i = 0; i < k; ++i) acc = compose(acc, prime_form(d, p));
      REQUIRE(acc == principal_form(d.value()));
    }
  }
}
