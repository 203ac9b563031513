#include <cmath>
#include <random>

#include "doctest.h"
#include "h4/golden.hpp"
#include "h4/properties.hpp"

using h4::GoldenNumber;
using h4::Rational;

namespace {

// Oracle: both real embeddings of Q(tau). Two numbers are equal iff both
// embeddings agree, so products and inverses can be checked numerically.
struct Embedded {
  long double hi;  // tau = (1 + sqrt 5) / 2
  long double lo;  // tau = (1 - sqrt 5) / 2
};

Embedded embed(const GoldenNumber& x) {
  const long double s5 = std::sqrt(5.0L);
  const long double a = x.rational_part().get_d();
  const long double b = x.tau_part().get_d();
  return {a + b * (1 + s5) / 2, a + b * (1 - s5) / 2};
}

GoldenNumber g(long a, long b) { return GoldenNumber(Rational(a), Rational(b)); }
GoldenNumber q(long an, long ad, long bn, long bd) { return GoldenNumber(Rational(an, ad), Rational(bn, bd)); }

}  // namespace

TEST_CASE("addition examples") {
  CHECK(GoldenNumber(1) + GoldenNumber::tau() == g(1, 1));
  CHECK(g(3, -2) + GoldenNumber(0) == g(3, -2));
  CHECK(q(1, 2, 1, 1) + q(1, 2, -1, 1) == GoldenNumber(1));
}

TEST_CASE("multiplication reduces by tau^2 = tau + 1") {
  const GoldenNumber t = GoldenNumber::tau();
  CHECK(t * t == g(1, 1));
  CHECK(t * (GoldenNumber(1) - t) == GoldenNumber(-1));
  const GoldenNumber t2 = t * t;
  CHECK(t2 * t2 == g(2, 3));
  // oracle: numeric value of tau^4
  const long double tau = (1 + std::sqrt(5.0L)) / 2;
  CHECK(std::fabs(embed(t2 * t2).hi - tau * tau * tau * tau) < 1e-15L);
}

TEST_CASE("inverse") {
  CHECK(GoldenNumber(1).inverse() == GoldenNumber(1));
  CHECK(GoldenNumber::tau().inverse() == g(-1, 1));
  CHECK(g(2, 1).inverse() == q(3, 5, -1, 5));
  CHECK_THROWS_AS(GoldenNumber(0).inverse(), h4::DomainError);
  CHECK_THROWS_AS(GoldenNumber(1) / GoldenNumber(0), h4::DomainError);
}

TEST_CASE("sign is exact") {
  CHECK(GoldenNumber(0).sign() == 0);
  CHECK(GoldenNumber::tau().sign() == 1);
  CHECK((GoldenNumber(1) - GoldenNumber::tau()).sign() == -1);
  // Close to zero: F(n+1) - F(n) tau = (1 - tau)^n, tiny but nonzero.
  CHECK(g(4181, -2584).sign() == 1);  // n = 18
  CHECK(g(6765, -4181).sign() == -1);  // n = 19
  CHECK(g(-6765, 4181).sign() == 1);
}

TEST_CASE("sign agrees with the real embedding away from zero") {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int i = 0; i < 20000; ++i) {
    const GoldenNumber x = h4::random_golden(rng);
    const long double v = embed(x).hi;
    if (std::fabs(v) < 1e-9L) {
      CHECK(x.is_zero());
      continue;
    }
    CHECK(x.sign() == (v > 0 ? 1 : -1));
    ++checked;
  }
  CHECK(checked > 15000);
}

TEST_CASE("products and inverses match both embeddings") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    const GoldenNumber x = h4::random_golden(rng);
    const GoldenNumber y = h4::random_golden(rng);
    const Embedded p = embed(x * y);
    const Embedded ex = embed(x);
    const Embedded ey = embed(y);
    REQUIRE(std::fabs(p.hi - ex.hi * ey.hi) < 1e-9L);
    REQUIRE(std::fabs(p.lo - ex.lo * ey.lo) < 1e-9L);
    if (!x.is_zero()) {
      const Embedded inv = embed(x.inverse());
      REQUIRE(std::fabs(inv.hi * ex.hi - 1) < 1e-9L);
      REQUIRE(std::fabs(inv.lo * ex.lo - 1) < 1e-9L);
    }
  }
}

TEST_CASE("conjugation") {
  const GoldenNumber t = GoldenNumber::tau();
  CHECK(t.conj() == GoldenNumber(1) - t);
  CHECK((t * t).conj() == g(2, -1));
  CHECK(g(3, 5).conj().conj() == g(3, 5));
  // conj swaps the two embeddings
  const Embedded e = embed(g(3, 5));
  const Embedded c = embed(g(3, 5).conj());
  CHECK(std::fabs(e.hi - c.lo) < 1e-12L);
  CHECK(std::fabs(e.lo - c.hi) < 1e-12L);
}

TEST_CASE("norm") {
  CHECK(g(2, 1).norm() == 5);
  CHECK(GoldenNumber::tau().norm() == -1);
  CHECK((g(2, 1) * g(2, 1).conj()).tau_part() == 0);
}

TEST_CASE("ordering follows the real line") {
  const GoldenNumber t = GoldenNumber::tau();
  CHECK(GoldenNumber(1) < t);
  CHECK(t < GoldenNumber(2));
  CHECK(g(1, 1) > GoldenNumber(2));
  CHECK((g(0, 0) <=> g(0, 0)) == 0);
}

TEST_CASE("text round trip") {
  CHECK(q(3, 2, -1, 2).to_string() == "3/2+-1/2*t");
  CHECK(GoldenNumber(0).to_string() == "0+0*t");
  CHECK(GoldenNumber::parse("3/2+-1/2*t") == q(3, 2, -1, 2));
  CHECK(GoldenNumber::parse("-4+6/4*t") == q(-4, 1, 3, 2));
  CHECK_THROWS_AS(GoldenNumber::parse("1+t"), std::invalid_argument);
  CHECK_THROWS_AS(GoldenNumber::parse("1/0+0*t"), std::invalid_argument);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const GoldenNumber x = h4::random_golden(rng);
    REQUIRE(GoldenNumber::parse(x.to_string()) == x);
  }
}

TEST_CASE("coefficients stay canonical") {
  const GoldenNumber x = GoldenNumber(Rational(6, 4), Rational(-10, 4));
  CHECK(x.rational_part().get_num() == 3);
  CHECK(x.rational_part().get_den() == 2);
  CHECK(x.tau_part().get_den() == 2);
  CHECK((q(1, 3, 0, 1) * GoldenNumber(3)).rational_part().get_den() == 1);
}
