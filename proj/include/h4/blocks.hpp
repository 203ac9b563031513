#pragma once

#include <vector>

#include "h4/perm_group.hpp"

namespace h4 {

/// A partition of the points into blocks, each block sorted, blocks
/// ordered by their smallest point.
struct BlockSystem {
  std::vector<std::vector<int>> blocks;

  bool trivial(std::size_t degree) const { return blocks.size() == degree || blocks.size() == 1; }
  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
};

/// Finest block system of <gens> in which a and b share a block.
BlockSystem minimal_block_system(std::span<const Perm> gens, std::size_t degree, int a, int b);

/// Image of a block system under g is again a block system of the group;
/// checks g maps every block onto some block.
bool permutes_blocks(const Perm& g, const BlockSystem& system);

struct PrimitivityReport {
  bool primitive = false;
  /// Distinct nontrivial systems among the minimal blocks of {0, y}.
  std::vector<BlockSystem> nontrivial;
};

/// Throws std::invalid_argument if the group is not transitive.
PrimitivityReport minimal_blocks(const PermGroup& g);

}  // namespace h4
