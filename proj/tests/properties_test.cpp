#include "doctest.h"
#include "fixture.hpp"
#include "h4/properties.hpp"

namespace {
constexpr std::uint64_t kCases = 10000;
}

TEST_CASE("field laws over random golden numbers") {
  for (std::uint64_t seed : {1u, 60u, 2024u}) {
    const auto r = h4::golden_field_properties(seed, kCases);
    CHECK(r.cases >= kCases);
    CHECK_MESSAGE(r.passed(), r.first_failure);
  }
}

TEST_CASE("rank is monotone and submodular") {
  const auto r = h4::rank_properties(fixture::matroid(), 7, kCases);
  CHECK(r.cases >= kCases);
  CHECK_MESSAGE(r.passed(), r.first_failure);
}

TEST_CASE("closure is extensive, idempotent and monotone") {
  const auto r = h4::closure_properties(fixture::matroid(), 8, kCases);
  CHECK(r.cases >= kCases);
  CHECK_MESSAGE(r.passed(), r.first_failure);
}

TEST_CASE("orthoplanes commute with automorphisms") {
  const auto r = h4::duality_commutation_properties(fixture::matroid(), fixture::frames(), fixture::aut().group, 9, kCases);
  CHECK(r.cases >= kCases);
  CHECK_MESSAGE(r.passed(), r.first_failure);
}

TEST_CASE("generators are seeded and in range") {
  std::mt19937_64 a(5), b(5);
  int zeros = 0;
  int rational = 0;
  for (int i = 0; i < 4000; ++i) {
    const auto x = h4::random_golden(a);
    CHECK(x == h4::random_golden(b));
    zeros += x.is_zero();
    rational += x.tau_part() == 0;
  }
  // about one in eight of each kind, with plenty of slack
  CHECK(zeros > 250);
  CHECK(rational > 2 * zeros);
  for (int i = 0; i < 4000; ++i) {
    const auto s = h4::random_subset(a, 60, 2, 5);
    CHECK(h4::count(s) >= 2);
    CHECK(h4::count(s) <= 5);
    CHECK((s >> 60) == 0);
  }
}

TEST_CASE("failures are recorded with the first counterexample") {
  h4::PropertyResult r;
  CHECK_FALSE(r.passed());
  r.check(true, "fine");
  r.check(false, "first");
  r.check(false, "second");
  CHECK(r.cases == 3);
  CHECK(r.failures == 2);
  CHECK(r.first_failure == "first");
  CHECK_FALSE(r.passed());
}
