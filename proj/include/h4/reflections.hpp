#pragma once

#include <array>
#include <functional>

#include "h4/perm_group.hpp"
#include "h4/roots.hpp"

namespace h4 {

/// Point permutation induced by a linear map that permutes the lines
/// through the points. Throws ConsistencyError if some image is not a point.
Perm induced_perm(const RootSystem& roots, const std::function<Vec4(const Vec4&)>& map);

/// v -> v - 2 (v.x / x.x) x, for x the root of point r.
Vec4 reflect(const Vec4& v, const Vec4& x);

/// Reflection through the hyperplane orthogonal to point r.
Perm reflection_perm(const RootSystem& roots, PointId r);

struct GeometricWitness {
  PointId root = 0;
  Perm perm;
};

/// The point perm induced by permuting coordinates: new coordinate i is old
/// coordinate rows[i].
Perm coordinate_perm(const RootSystem& roots, const std::array<int, 4>& rows);

/// Group generated by all reflection perms.
PermGroup geometric_group(const RootSystem& roots);

}  // namespace h4
