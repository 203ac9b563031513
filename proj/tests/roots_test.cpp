#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "doctest.h"
#include "fixture.hpp"
#include "h4/properties.hpp"
#include "h4/roots.hpp"

using h4::GoldenNumber;
using h4::Vec4;
using fixture::t;
using fixture::t2;

TEST_CASE("column order and first entries") {
  const auto& rs = fixture::roots();
  CHECK(rs.size() == 60);
  CHECK(rs.coords(0) == Vec4{1, 0, 0, 0});
  CHECK(rs.coords(4) == Vec4{1, 1, 1, 1});
  CHECK(rs.coords(12) == Vec4{0, t(), t2(), 1});
  for (h4::PointId i = 0; i < 60; ++i) CHECK(rs[i].id == i);
}

TEST_CASE("dot products") {
  CHECK(h4::dot(Vec4{1, 0, 0, 0}, Vec4{0, 1, 0, 0}) == GoldenNumber(0));
  CHECK(h4::dot(Vec4{1, 1, 1, 1}, Vec4{1, 1, 1, 1}) == GoldenNumber(4));
  CHECK(h4::dot(Vec4{0, t(), t2(), 1}, Vec4{0, t(), t2(), 1}) == GoldenNumber(4) * t() + GoldenNumber(4));
}

TEST_CASE("canonicalize") {
  const GoldenNumber one(1);
  CHECK(h4::canonicalize(Vec4{-1, 0, 0, 0}) == Vec4{1, 0, 0, 0});
  CHECK(h4::canonicalize(Vec4{1, -1, -1, -1}) == Vec4{1, -1, -1, -1});
  CHECK(h4::canonicalize(Vec4{0, one - t(), 1, t() - one}) == Vec4{0, t() - one, -1, one - t()});
  CHECK_THROWS_AS(h4::canonicalize(Vec4{0, 0, 0, 0}), h4::DomainError);
}

TEST_CASE("canonicalize is idempotent and picks a positive leading entry") {
  for (const auto& p : fixture::roots().points()) CHECK(h4::canonicalize(p.coords) == p.coords);
  std::mt19937_64 rng(5);
  int nonzero = 0;
  for (int i = 0; i < 10000; ++i) {
    Vec4 v{h4::random_golden(rng), h4::random_golden(rng), h4::random_golden(rng), h4::random_golden(rng)};
    if (h4::is_zero(v)) continue;
    ++nonzero;
    const Vec4 c = h4::canonicalize(v);
    REQUIRE(h4::canonicalize(c) == c);
    REQUIRE(h4::canonicalize(h4::scale(v, -1)) == c);
    const auto lead = std::find_if(c.begin(), c.end(), [](const GoldenNumber& x) { return !x.is_zero(); });
    REQUIRE(lead->sign() == 1);
  }
  CHECK(nonzero > 9000);
}

TEST_CASE("lookup") {
  const auto& rs = fixture::roots();
  CHECK(rs.lookup(Vec4{2, 0, 0, 0}) == 0);
  const GoldenNumber half(h4::Rational(1, 2), 0);
  CHECK(rs.lookup(Vec4{half, half, -half, half}) == rs.lookup(Vec4{1, 1, -1, 1}));
  CHECK(rs.lookup(Vec4{1, 1, -1, 1}).has_value());
  CHECK_FALSE(rs.lookup(Vec4{1, 1, 0, 0}).has_value());
  for (h4::PointId p = 0; p < 60; ++p) {
    CHECK(rs.lookup(rs.coords(p)) == p);
    CHECK(rs.lookup(h4::scale(rs.coords(p), -1)) == p);
    CHECK(rs.lookup(h4::scale(rs.coords(p), t())) == p);
  }
}

TEST_CASE("no two columns are parallel") {
  const auto& rs = fixture::roots();
  int parallel = 0;
  for (h4::PointId a = 0; a < 60; ++a) {
    for (h4::PointId b = a + 1; b < 60; ++b) {
      // parallel iff all 2x2 minors vanish
      bool all_zero = true;
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
          all_zero &= (rs.coords(a)[i] * rs.coords(b)[j] - rs.coords(a)[j] * rs.coords(b)[i]).is_zero();
        }
      }
      parallel += all_zero;
    }
  }
  CHECK(parallel == 0);
}

TEST_CASE("parallel or zero columns are rejected") {
  auto cols = h4::h4_columns();
  cols[7] = h4::scale(cols[3], t());
  CHECK_THROWS_AS(h4::RootSystem{cols}, h4::ConsistencyError);
  cols = h4::h4_columns();
  cols[0] = Vec4{0, 0, 0, 0};
  CHECK_THROWS(h4::RootSystem{cols});
}

// Oracle: the 60 directions of H4 from the textbook description (unit
// vectors, (1,+-1,+-1,+-1), and even permutations of (0, 1, tau, tau^2)
// with all signs), generated without the transcribed matrix.
TEST_CASE("columns match an independent generation of the H4 directions") {
  std::vector<Vec4> oracle;
  for (int i = 0; i < 4; ++i) {
    Vec4 e{0, 0, 0, 0};
    e[static_cast<std::size_t>(i)] = 1;
    oracle.push_back(e);
  }
  for (int s = 0; s < 8; ++s) oracle.push_back(Vec4{1, s & 1 ? -1 : 1, s & 2 ? -1 : 1, s & 4 ? -1 : 1});
  const std::array<GoldenNumber, 4> vals{0, 1, t(), t2()};
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    }
    if (inversions % 2) continue;
    for (int s = 0; s < 8; ++s) {
      Vec4 v;
      for (std::size_t i = 0; i < 4; ++i) v[i] = vals[static_cast<std::size_t>(perm[i])];
      int k = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        if (v[i].is_zero()) continue;
        if (s >> k & 1) v[i] = -v[i];
        ++k;
      }
      oracle.push_back(v);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  CHECK(oracle.size() == 4 + 8 + 96);
  std::set<h4::PointId> hit;
  for (const Vec4& v : oracle) {
    const auto id = fixture::roots().lookup(v);
    REQUIRE(id.has_value());
    hit.insert(*id);
  }
  CHECK(hit.size() == 60);
}
