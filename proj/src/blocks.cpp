#include "h4/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace h4 {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
};

}  // namespace

BlockSystem minimal_block_system(std::span<const Perm> gens, std::size_t degree, int a, int b) {
  UnionFind uf(degree);
  std::vector<std::pair<int, int>> queue;
  auto merge = [&](int x, int y) {
    x = uf.find(x);
    y = uf.find(y);
    if (x == y) return;
    uf.parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
    queue.emplace_back(x, y);
  };
  merge(a, b);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const auto [x, y] = queue[q];
    for (const Perm& g : gens) merge(g(x), g(y));
  }
  std::vector<std::vector<int>> by_root(degree);
  for (std::size_t i = 0; i < degree; ++i) by_root[static_cast<std::size_t>(uf.find(static_cast<int>(i)))].push_back(static_cast<int>(i));
  BlockSystem s;
  for (auto& blk : by_root) {
    if (!blk.empty()) s.blocks.push_back(std::move(blk));
  }
  return s;
}

bool permutes_blocks(const Perm& g, const BlockSystem& system) {
  std::vector<int> block_of(g.degree(), -1);
  for (std::size_t k = 0; k < system.blocks.size(); ++k) {
    for (int x : system.blocks[k]) block_of[static_cast<std::size_t>(x)] = static_cast<int>(k);
  }
  for (const auto& blk : system.blocks) {
    const int target = block_of[static_cast<std::size_t>(g(blk.front()))];
    for (int x : blk) {
      if (block_of[static_cast<std::size_t>(g(x))] != target) return false;
    }
  }
  return true;
}

PrimitivityReport minimal_blocks(const PermGroup& g) {
  if (!g.is_transitive()) throw std::invalid_argument("block systems are computed for transitive groups only");
  PrimitivityReport r;
  for (std::size_t y = 1; y < g.degree(); ++y) {
    BlockSystem s = minimal_block_system(g.generators(), g.degree(), 0, static_cast<int>(y));
    if (s.trivial(g.degree())) continue;
    if (std::find(r.nontrivial.begin(), r.nontrivial.end(), s) == r.nontrivial.end()) {
      r.nontrivial.push_back(std::move(s));
    }
  }
  r.primitive = r.nontrivial.empty();
  return r;
}

}  // namespace h4
