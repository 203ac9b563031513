#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "h4/matroid.hpp"

namespace h4 {

/// Basis flag for every 4-subset of the ground set, indexed in colex order.
class BasisTable {
 public:
  /// Scans all 4-subsets with exact elimination, skipping every extension of
  /// a dependent triple. Work is split by smallest element across `jobs`
  /// threads; the result does not depend on `jobs`.
  static BasisTable compute(const Matroid& m, int jobs = 1);

  int points() const { return n_; }
  std::uint64_t total() const { return flags_.size(); }
  std::uint64_t count() const { return count_; }

  bool is_basis(std::array<PointId, 4> ids) const;
  bool is_basis(PointSet s) const;

  /// Colex rank of a strictly increasing 4-tuple.
  static std::uint64_t index(const std::array<PointId, 4>& sorted);

 private:
  int n_ = 0;
  std::uint64_t count_ = 0;
  std::vector<std::uint8_t> flags_;
};

std::uint64_t binomial(int n, int k);

}  // namespace h4
