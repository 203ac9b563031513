#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "h4/point_set.hpp"

namespace h4 {

/// A permutation of {0, ..., degree-1}.
class Perm {
 public:
  Perm() = default;
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Perm(std::vector<int> images);
  static Perm identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Perm inverse() const;
  bool is_identity() const;
  /// Least common multiple of the cycle lengths.
  std::uint64_t order() const;
  int fixed_points() const;
  /// Sign of the permutation: +1 even, -1 odd.
  int parity() const;

  /// Image of a point set (degree <= 64).
  PointSet apply(PointSet s) const;

  std::string to_string() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

/// (p o q)(i) = p(q(i)).
Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace h4
