#include "h4/reconstruct.hpp"

#include <algorithm>

namespace h4 {

namespace {

void sort_unique(std::vector<PointSet>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Reconstruction reconstruct_from_orthoframes(const std::vector<Orthoframe>& frames) {
  Reconstruction r;
  auto& out = r.flats;
  PointSet ground = 0;
  for (const auto& f : frames) ground |= f.set();

  // 15-point planes, remembering each one's orthopoint.
  std::vector<std::pair<PointSet, PointId>> pi15;
  for (PointId x : members(ground)) {
    PointSet u = 0;
    for (const auto& f : frames) {
      if (contains(f.set(), x)) u |= f.set();
    }
    pi15.emplace_back(u & ~bit(x), x);
    out[FlatClass::Pi15].push_back(u & ~bit(x));
  }

  for (const auto& f : frames) {
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) out[FlatClass::Line2].push_back(bit(f.points[i]) | bit(f.points[j]));
    }
  }

  for (std::size_t i = 0; i < pi15.size(); ++i) {
    for (std::size_t j = i + 1; j < pi15.size(); ++j) {
      const PointSet meet = pi15[i].first & pi15[j].first;
      switch (count(meet)) {
        case 2: break;
        case 3: out[FlatClass::Line3].push_back(meet); break;
        case 5: out[FlatClass::Line5].push_back(meet); break;
        default:
          r.anomalies.push_back("two 15-point planes meet in " + std::to_string(count(meet)) + " points");
      }
    }
  }
  sort_unique(out[FlatClass::Line2]);
  sort_unique(out[FlatClass::Line3]);
  sort_unique(out[FlatClass::Line5]);

  for (const auto& [plane, x] : pi15) {
    for (PointSet l : out[FlatClass::Line3]) {
      if (is_subset(l, plane)) out[FlatClass::Pi3].push_back(l | bit(x));
    }
    for (PointSet l : out[FlatClass::Line5]) {
      if (is_subset(l, plane)) out[FlatClass::Pi5].push_back(l | bit(x));
    }
  }

  const auto& l3 = out[FlatClass::Line3];
  auto in_common_pi15 = [&](PointSet s) {
    return std::any_of(pi15.begin(), pi15.end(), [&](const auto& p) { return is_subset(s, p.first); });
  };
  for (std::size_t i = 0; i < l3.size(); ++i) {
    for (std::size_t j = i + 1; j < l3.size(); ++j) {
      const PointSet common = l3[i] & l3[j];
      if (count(common) != 1 || in_common_pi15(l3[i] | l3[j])) continue;
      const PointSet rest_i = l3[i] & ~common;
      const PointSet rest_j = l3[j] & ~common;
      PointSet plane = l3[i] | l3[j];
      int joining = 0;
      for (PointSet k : l3) {
        if (count(k & rest_i) == 1 && count(k & rest_j) == 1) {
          plane |= k;
          ++joining;
        }
      }
      if (joining != 2 || count(plane) != 6) {
        r.anomalies.push_back("meeting 3-pt lines do not close up into a 6-point plane");
        continue;
      }
      out[FlatClass::Pi6].push_back(plane);
    }
  }

  for (auto& [cls, v] : out) sort_unique(v);
  return r;
}

FlatLists flat_lists(const Matroid& m) {
  FlatLists out;
  for (auto c : kLineClasses) out[c];
  for (auto c : kPlaneClasses) out[c];
  for (const auto* list : {&m.lines(), &m.planes()}) {
    for (const Flat& f : *list) out[f.cls].push_back(f.points);
  }
  for (auto& [cls, v] : out) std::sort(v.begin(), v.end());
  return out;
}

}  // namespace h4
