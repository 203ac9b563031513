#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "h4/golden.hpp"

namespace h4 {

using Vec4 = std::array<GoldenNumber, 4>;
using PointId = int;

/// Raised when a point table is internally inconsistent (duplicate or
/// parallel columns).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RootPoint {
  PointId id = 0;
  Vec4 coords;
};

GoldenNumber dot(const Vec4& u, const Vec4& v);
Vec4 scale(const Vec4& v, const GoldenNumber& s);
Vec4 subtract(const Vec4& u, const Vec4& v);
bool is_zero(const Vec4& v);

/// Returns v or -v, whichever has a positive first nonzero coordinate.
/// Throws DomainError on the zero vector.
Vec4 canonicalize(const Vec4& v);

std::string to_string(const Vec4& v);

/// The 60 columns of the H4 matrix, in column order, exactly as written.
std::vector<Vec4> h4_columns();

/// An immutable table of pairwise non-parallel points with stable ids.
class RootSystem {
 public:
  /// Canonicalizes every column; ids follow input order. Throws
  /// ConsistencyError on parallel or zero columns.
  explicit RootSystem(const std::vector<Vec4>& columns);

  /// load_h4: the 60 columns of H.
  static RootSystem h4() { return RootSystem(h4_columns()); }

  std::size_t size() const { return points_.size(); }
  const RootPoint& operator[](PointId id) const { return points_.at(static_cast<std::size_t>(id)); }
  const Vec4& coords(PointId id) const { return (*this)[id].coords; }
  std::span<const RootPoint> points() const { return points_; }

  /// Id of the point proportional to v by any nonzero golden scalar.
  std::optional<PointId> lookup(const Vec4& v) const;

  GoldenNumber dot(PointId u, PointId v) const { return h4::dot(coords(u), coords(v)); }

 private:
  static std::string direction_key(const Vec4& v);

  std::vector<RootPoint> points_;
  std::map<std::string, PointId> by_direction_;
};

}  // namespace h4
