#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace h4 {

/// Subset of a ground set of at most 64 points, one bit per point id.
using PointSet = std::uint64_t;

constexpr PointSet bit(int id) { return PointSet{1} << id; }

inline PointSet make_set(std::initializer_list<int> ids) {
  PointSet s = 0;
  for (int i : ids) s |= bit(i);
  return s;
}

template <class Range>
PointSet make_set(const Range& ids) {
  PointSet s = 0;
  for (int i : ids) s |= bit(static_cast<int>(i));
  return s;
}

inline int count(PointSet s) { return std::popcount(s); }
inline bool contains(PointSet s, int id) { return (s >> id) & 1U; }
inline bool is_subset(PointSet a, PointSet b) { return (a & ~b) == 0; }

/// Sorted member ids.
inline std::vector<int> members(PointSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count(s)));
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

inline PointSet full_set(int n) { return n >= 64 ? ~PointSet{0} : (PointSet{1} << n) - 1; }

}  // namespace h4
