#include "h4/reflections.hpp"

#include <string>

namespace h4 {

Perm induced_perm(const RootSystem& roots, const std::function<Vec4(const Vec4&)>& map) {
  std::vector<int> images(roots.size());
  for (const RootPoint& p : roots.points()) {
    const auto id = roots.lookup(map(p.coords));
    if (!id) throw ConsistencyError("image of point " + std::to_string(p.id) + " is not a point");
    images[static_cast<std::size_t>(p.id)] = *id;
  }
  return Perm(std::move(images));
}

Vec4 reflect(const Vec4& v, const Vec4& x) {
  const GoldenNumber c = GoldenNumber(2) * dot(v, x) / dot(x, x);
  return subtract(v, scale(x, c));
}

Perm reflection_perm(const RootSystem& roots, PointId r) {
  const Vec4 x = roots.coords(r);
  return induced_perm(roots, [&](const Vec4& v) { return reflect(v, x); });
}

Perm coordinate_perm(const RootSystem& roots, const std::array<int, 4>& rows) {
  return induced_perm(roots, [&](const Vec4& v) {
    Vec4 w;
    for (std::size_t i = 0; i < 4; ++i) w[i] = v[static_cast<std::size_t>(rows[i])];
    return w;
  });
}

PermGroup geometric_group(const RootSystem& roots) {
  std::vector<Perm> gens;
  for (PointId r = 0; r < static_cast<PointId>(roots.size()); ++r) gens.push_back(reflection_perm(roots, r));
  return PermGroup(roots.size(), std::move(gens));
}

}  // namespace h4
