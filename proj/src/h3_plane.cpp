#include "h4/h3_plane.hpp"

#include <algorithm>
#include <stdexcept>

namespace h4 {

H3Report pi15_as_h3(const Matroid& m, const Flat& plane) {
  if (plane.cls != FlatClass::Pi15) throw std::invalid_argument("pi15_as_h3 needs a 15-point plane");
  H3Report r;
  const auto ids = members(plane.points);
  r.points = static_cast<int>(ids.size());

  std::vector<PointSet> lines;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      Span span;
      span.add(m.roots().coords(ids[i]));
      span.add(m.roots().coords(ids[j]));
      PointSet line = bit(ids[i]) | bit(ids[j]);
      for (PointId c : ids) {
        if (!contains(line, c) && span.contains(m.roots().coords(c))) line |= bit(c);
      }
      lines.push_back(line);
    }
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  std::vector<PointSet> two;
  for (PointSet l : lines) {
    switch (count(l)) {
      case 2: ++r.lines2; two.push_back(l); break;
      case 3: ++r.lines3; break;
      case 5: ++r.lines5; break;
      default: ++r.other_lines; break;
    }
  }
  auto is_two = [&](PointId a, PointId b) { return std::binary_search(two.begin(), two.end(), bit(a) | bit(b)); };

  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (!is_two(ids[i], ids[j])) continue;
      for (std::size_t k = j + 1; k < ids.size(); ++k) {
        if (is_two(ids[i], ids[k]) && is_two(ids[j], ids[k]) && m.rank(make_set({ids[i], ids[j], ids[k]})) == 3) {
          r.partial_frames.push_back({ids[i], ids[j], ids[k]});
        }
      }
    }
  }
  PointSet covered = 0;
  r.frames_partition = true;
  r.frames_orthogonal = true;
  for (const auto& f : r.partial_frames) {
    const PointSet s = make_set(f);
    if (covered & s) r.frames_partition = false;
    covered |= s;
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        if (!m.roots().dot(f[a], f[b]).is_zero()) r.frames_orthogonal = false;
      }
    }
  }
  if (covered != plane.points) r.frames_partition = false;
  return r;
}

}  // namespace h4
