#pragma once

#include <vector>

#include "h4/roots.hpp"

namespace h4 {

/// Row space of a set of 4-vectors in reduced row echelon form.
///
/// Pivots are the first nonzero entry of each reduced vector, so the
/// echelon form depends only on insertion order.
class Span {
 public:
  /// Adds v; returns true iff the rank went up.
  bool add(const Vec4& v);
  bool contains(const Vec4& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  Vec4 reduce(Vec4 v) const;

  std::vector<Vec4> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace h4
