#include "doctest.h"
#include "fixture.hpp"
#include "h4/duality.hpp"

using h4::Perm;

TEST_CASE("point-plane graph") {
  const auto g = h4::duality_graph(fixture::matroid(), fixture::frames());
  CHECK(g.vertices() == 120);
  int edges = 0;
  for (int u = 0; u < 120; ++u) {
    CHECK(g.adjacency[static_cast<std::size_t>(u)].size() == 15);
    for (int v : g.adjacency[static_cast<std::size_t>(u)]) {
      CHECK((u < 60) != (v < 60));
      CHECK(g.adjacent(v, u));
      ++edges;
    }
  }
  CHECK(edges == 2 * 900);
  // x in P_y iff y in P_x
  for (int x = 0; x < 60; ++x) {
    for (int y = 0; y < 60; ++y) CHECK(h4::contains(g.planes[static_cast<std::size_t>(y)], x) == h4::contains(g.planes[static_cast<std::size_t>(x)], y));
  }
}

TEST_CASE("swap and lifts") {
  const auto g = h4::duality_graph(fixture::matroid(), fixture::frames());
  const Perm s = h4::swap_perm(g);
  CHECK((s * s).is_identity());
  CHECK(s.fixed_points() == 0);
  CHECK(h4::is_graph_automorphism(s, g));
  for (const Perm& a : fixture::aut().generators) {
    const Perm l = h4::lift(a, g);
    CHECK(h4::is_graph_automorphism(l, g));
    CHECK(l * s == s * l);
  }
  std::vector<int> img(60);
  for (int i = 0; i < 60; ++i) img[static_cast<std::size_t>(i)] = i;
  std::swap(img[0], img[1]);
  CHECK_THROWS_AS(h4::lift(Perm(img), g), std::invalid_argument);
  // swapping two vertices on one side is not an automorphism
  std::vector<int> big(120);
  for (int i = 0; i < 120; ++i) big[static_cast<std::size_t>(i)] = i;
  std::swap(big[0], big[1]);
  CHECK_FALSE(h4::is_graph_automorphism(Perm(big), g));
}

TEST_CASE("duality report") {
  const auto r = h4::duality_report(fixture::matroid(), fixture::frames(), fixture::aut().group);
  CHECK(r.vertices == 120);
  CHECK(r.edges == 900);
  CHECK(r.bipartite);
  CHECK(r.regular);
  CHECK(r.connected);
  CHECK(r.adjacency_symmetric);
  CHECK(r.swap_is_automorphism);
  CHECK(r.swap_involution);
  CHECK(r.commutes_with_aut);
  CHECK(r.side_preserving_order == 14400);
  CHECK(r.side_equals_aut);
  CHECK(r.swap_central);
  CHECK(r.total_order == 28800);
}
