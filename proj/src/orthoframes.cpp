#include "h4/orthoframes.hpp"

#include <algorithm>
#include <string>

namespace h4 {

std::vector<Orthoframe> enumerate_orthoframes(const Matroid& m) {
  const int n = m.size();
  std::vector<PointSet> adj(static_cast<std::size_t>(n), 0);
  for (const Flat& line : m.lines()) {
    if (line.cls != FlatClass::Line2) continue;
    const auto ab = line.ids();
    adj[static_cast<std::size_t>(ab[0])] |= bit(ab[1]);
    adj[static_cast<std::size_t>(ab[1])] |= bit(ab[0]);
  }
  auto above = [](PointSet s, int x) { return s & ~full_set(x + 1); };
  std::vector<Orthoframe> out;
  for (PointId a = 0; a < n; ++a) {
    for (PointId b : members(above(adj[static_cast<std::size_t>(a)], a))) {
      const PointSet ab = adj[static_cast<std::size_t>(a)] & adj[static_cast<std::size_t>(b)];
      for (PointId c : members(above(ab, b))) {
        for (PointId d : members(above(ab & adj[static_cast<std::size_t>(c)], c))) {
          if (m.rank(make_set({a, b, c, d})) == 4) out.push_back({{a, b, c, d}});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_orthoframe_by_lines(const Matroid& m, const BasisTable& bases, PointSet s) {
  if (!bases.is_basis(s)) return false;
  const auto v = members(s);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (m.line_through(v[i], v[j]).cls != FlatClass::Line2) return false;
    }
  }
  return true;
}

bool is_orthoframe_by_dots(const RootSystem& roots, PointSet s) {
  if (count(s) != 4) return false;
  const auto v = members(s);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (!roots.dot(v[i], v[j]).is_zero()) return false;
    }
  }
  return true;
}

CharacterizationReport compare_orthoframe_characterizations(const Matroid& m, const BasisTable& bases,
                                                            const std::vector<Orthoframe>& frames) {
  const int n = m.size();
  std::vector<std::uint8_t> orth(static_cast<std::size_t>(n * n), 0);
  std::vector<std::uint8_t> two(static_cast<std::size_t>(n * n), 0);
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = 0; b < n; ++b) {
      if (a == b) continue;
      orth[static_cast<std::size_t>(a * n + b)] = m.roots().dot(a, b).is_zero();
      two[static_cast<std::size_t>(a * n + b)] = m.line_through(a, b).cls == FlatClass::Line2;
    }
  }
  std::vector<PointSet> listed;
  for (const auto& f : frames) listed.push_back(f.set());
  std::sort(listed.begin(), listed.end());

  CharacterizationReport r;
  r.enumerated = static_cast<int>(frames.size());
  auto all_pairs = [&](const std::vector<std::uint8_t>& rel, const std::array<PointId, 4>& q) {
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        if (!rel[static_cast<std::size_t>(q[i] * n + q[j])]) return false;
      }
    }
    return true;
  };
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = a + 1; b < n; ++b) {
      for (PointId c = b + 1; c < n; ++c) {
        for (PointId d = c + 1; d < n; ++d) {
          const std::array<PointId, 4> q{a, b, c, d};
          const bool by_dots = all_pairs(orth, q);
          const bool by_lines = all_pairs(two, q) && bases.is_basis(q);
          const bool in_list = std::binary_search(listed.begin(), listed.end(), make_set(q));
          ++r.subsets;
          r.by_dots += by_dots;
          r.by_lines += by_lines;
          if (by_dots == by_lines && by_lines == in_list) ++r.agreeing;
        }
      }
    }
  }
  return r;
}

PointSet orthogonal_set(const RootSystem& roots, PointId x) {
  PointSet s = 0;
  for (PointId y = 0; y < static_cast<PointId>(roots.size()); ++y) {
    if (y != x && roots.dot(x, y).is_zero()) s |= bit(y);
  }
  return s;
}

Flat orthoplane(const Matroid& m, const std::vector<Orthoframe>& frames, PointId x) {
  PointSet u = 0;
  for (const auto& f : frames) {
    if (contains(f.set(), x)) u |= f.set();
  }
  u &= ~bit(x);
  const auto idx = m.find_plane(u);
  if (!idx || m.planes()[*idx].cls != FlatClass::Pi15) {
    throw ConsistencyError("frames through point " + std::to_string(x) + " do not span a 15-point plane");
  }
  if (u != orthogonal_set(m.roots(), x)) {
    throw ConsistencyError("orthoplane of point " + std::to_string(x) + " differs from its orthogonal set");
  }
  return m.planes()[*idx];
}

PointId orthopoint(const std::vector<Orthoframe>& frames, PointSet plane) {
  PointId found = -1;
  for (const auto& f : frames) {
    const PointSet rest = f.set() & ~plane;
    if (count(f.set() & plane) != 3) continue;
    const PointId x = members(rest).front();
    if (found >= 0 && found != x) throw ConsistencyError("partial frames of a plane disagree on its orthopoint");
    found = x;
  }
  if (found < 0) throw ConsistencyError("plane contains no partial orthoframe");
  return found;
}

}  // namespace h4
