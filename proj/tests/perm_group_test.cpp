#include <random>
#include <set>

#include "doctest.h"
#include "h4/blocks.hpp"
#include "h4/cayley.hpp"
#include "h4/perm_group.hpp"

using h4::Perm;
using h4::PermGroup;

namespace {

Perm cycle(std::size_t n, std::vector<int> c) {
  std::vector<int> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < c.size(); ++i) img[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
  return Perm(img);
}

// Oracle: closure of the generators under composition by breadth-first search.
std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t n) {
  std::set<Perm> seen{Perm::identity(n)};
  std::vector<Perm> queue{Perm::identity(n)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const Perm& g : gens) {
      Perm h = g * queue[i];
      if (seen.insert(h).second) queue.push_back(h);
    }
  }
  return seen;
}

Perm random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<int> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<int>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(img);
}

}  // namespace

TEST_CASE("composition applies the right factor first") {
  const Perm p({1, 2, 0});
  const Perm q({0, 2, 1});
  CHECK((p * q)(1) == p(q(1)));
  CHECK((p * q).images() == std::vector<int>{1, 0, 2});
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.order() == 3);
  CHECK(q.order() == 2);
  CHECK(q.parity() == -1);
  CHECK(p.parity() == 1);
  CHECK(q.fixed_points() == 1);
  CHECK(p.apply(h4::make_set({0, 1})) == h4::make_set({1, 2}));
  CHECK(cycle(6, {0, 1}).order() * cycle(6, {2, 3, 4}).order() == (cycle(6, {0, 1}) * cycle(6, {2, 3, 4})).order());
}

TEST_CASE("perm validation") {
  CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({-1, 0}), std::invalid_argument);
  CHECK_NOTHROW(Perm(std::vector<int>{}));
  CHECK_THROWS_AS(PermGroup(3, {Perm({1, 0})}), std::invalid_argument);
}

TEST_CASE("trivial and symmetric groups") {
  CHECK(PermGroup(5, {Perm::identity(5)}).order() == 1);
  CHECK(PermGroup(5, {}).order() == 1);
  std::uint64_t fact = 1;
  for (std::size_t n = 2; n <= 12; ++n) {
    fact *= n;
    std::vector<int> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<int>(i);
    const PermGroup s(n, {cycle(n, {0, 1}), cycle(n, c)});
    CHECK(s.order() == fact);
    CHECK(s.is_transitive());
  }
  // alternating group from 3-cycles
  const PermGroup a5(5, {cycle(5, {0, 1, 2}), cycle(5, {0, 3, 4}), cycle(5, {1, 3, 2})});
  CHECK(a5.order() == 60);
}

TEST_CASE("Schreier-Sims agrees with brute-force closure") {
  std::mt19937_64 rng(1789);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 5);
    std::vector<Perm> gens;
    const int k = 1 + trial % 3;
    for (int i = 0; i < k; ++i) gens.push_back(random_perm(rng, n));
    // also sparse generators, which give small groups
    if (trial % 2) gens = {cycle(n, {0, 1}) * cycle(n, {2, static_cast<int>(n) - 1})};
    const auto elems = closure(gens, n);
    const PermGroup g(n, gens);
    REQUIRE(g.order() == elems.size());
    const auto listed = g.elements();
    REQUIRE(std::set<Perm>(listed.begin(), listed.end()) == elems);
    for (int i = 0; i < 20; ++i) {
      const Perm r = random_perm(rng, n);
      REQUIRE(g.contains(r) == (elems.count(r) == 1));
      REQUIRE(elems.count(g.random_element(rng)) == 1);
    }
  }
}

TEST_CASE("base prefix does not change the group") {
  const Perm a = cycle(8, {0, 1, 2, 3, 4, 5, 6, 7});
  const Perm b = cycle(8, {1, 7}) * cycle(8, {2, 6}) * cycle(8, {3, 5});
  const PermGroup d8(8, {a, b});
  const PermGroup rebased(8, {a, b}, {5, 2});
  CHECK(d8.order() == 16);
  CHECK(rebased.order() == 16);
  CHECK(rebased.base().front() == 5);
  const auto stab = d8.point_stabilizer(3);
  CHECK(stab.order() == 2);
  for (const Perm& g : stab.elements()) CHECK(g(3) == 3);
}

TEST_CASE("orbits") {
  const PermGroup g(6, {cycle(6, {0, 1, 2}), cycle(6, {3, 4})});
  CHECK(g.orbit(0).size() == 3);
  CHECK(g.orbit(4).size() == 2);
  CHECK(g.orbit(5).size() == 1);
  CHECK_FALSE(g.is_transitive());
  const std::vector<h4::PointSet> items{h4::make_set({0, 3}), h4::make_set({1, 4}), h4::make_set({2, 3}),
                                        h4::make_set({0, 4}), h4::make_set({1, 3}), h4::make_set({2, 4})};
  const auto orbits = h4::orbits_on<h4::PointSet>(g.generators(), items, [](const Perm& p, h4::PointSet s) { return p.apply(s); });
  CHECK(orbits.size() == 1);
  CHECK_THROWS_AS(h4::orbits_on<h4::PointSet>(g.generators(), {h4::make_set({0})},
                                              [](const Perm& p, h4::PointSet s) { return p.apply(s); }),
                  std::logic_error);
}

TEST_CASE("block systems") {
  std::vector<int> c(60);
  for (int i = 0; i < 60; ++i) c[static_cast<std::size_t>(i)] = i;
  const PermGroup cyc(60, {cycle(60, c)});
  const auto r = h4::minimal_blocks(cyc);
  CHECK_FALSE(r.primitive);
  // for the regular cyclic group the block of {0, y} is the subgroup
  // generated by y, so every proper divisor of 60 shows up
  std::set<std::size_t> sizes;
  for (const auto& s : r.nontrivial) {
    sizes.insert(s.block_size());
    for (const Perm& g : cyc.generators()) CHECK(h4::permutes_blocks(g, s));
  }
  CHECK(sizes == std::set<std::size_t>{2, 3, 4, 5, 6, 10, 12, 15, 20, 30});
  const auto pairs = h4::minimal_block_system(cyc.generators(), 60, 0, 30);
  CHECK(pairs.blocks.size() == 30);
  CHECK(pairs.blocks[1] == std::vector<int>{1, 31});

  const PermGroup s6(6, {cycle(6, {0, 1}), cycle(6, {0, 1, 2, 3, 4, 5})});
  CHECK(h4::minimal_blocks(s6).primitive);
  CHECK_THROWS_AS(h4::minimal_blocks(PermGroup(4, {cycle(4, {0, 1})})), std::invalid_argument);
  CHECK_FALSE(h4::permutes_blocks(cycle(4, {1, 2}), h4::BlockSystem{{{0, 1}, {2, 3}}}));
}

TEST_CASE("isomorphism of small groups") {
  using h4::isomorphic;
  const auto z2 = h4::cyclic_group_table(2);
  CHECK_FALSE(isomorphic(h4::direct_product(z2, z2), h4::cyclic_group_table(4)));
  CHECK(isomorphic(h4::direct_product(h4::cyclic_group_table(2), h4::cyclic_group_table(3)), h4::cyclic_group_table(6)));
  CHECK_FALSE(isomorphic(h4::symmetric_group_table(3), h4::cyclic_group_table(6)));
  CHECK_FALSE(isomorphic(h4::symmetric_group_table(4), h4::direct_product(h4::symmetric_group_table(3), h4::cyclic_group_table(4))));
  CHECK(h4::symmetric_group_table(5).n == 120);

  // S5 x Z2 realised on 7 points vs the abstract product
  const PermGroup g(7, {cycle(7, {0, 1}), cycle(7, {0, 1, 2, 3, 4}), cycle(7, {5, 6})});
  const auto table = h4::cayley_table(g.elements());
  CHECK(table.n == 240);
  CHECK(isomorphic(table, h4::direct_product(h4::symmetric_group_table(5), z2)));
  // same order, different group: S4 x Z10
  CHECK_FALSE(isomorphic(table, h4::direct_product(h4::symmetric_group_table(4), h4::cyclic_group_table(10))));
  CHECK_THROWS_AS(h4::cayley_table({Perm({1, 2, 0})}), std::invalid_argument);
  const auto orders = h4::element_orders(h4::cyclic_group_table(6));
  CHECK(std::count(orders.begin(), orders.end(), 6) == 2);
}
