#include "h4/incidence.hpp"

#include <algorithm>
#include <stdexcept>

namespace h4 {

void IncidenceCount::add(int value, PointSet witness) {
  if (samples == 0 || value < min) {
    min = value;
    min_witness = witness;
  }
  if (samples == 0 || value > max) {
    max = value;
    max_witness = witness;
  }
  ++samples;
}

PointId apex(const Matroid& m, const Flat& plane) {
  if (plane.cls != FlatClass::Pi3 && plane.cls != FlatClass::Pi5) {
    throw std::invalid_argument("only Pi3 and Pi5 planes have an apex");
  }
  const FlatClass big = plane.cls == FlatClass::Pi3 ? FlatClass::Line3 : FlatClass::Line5;
  for (const Flat& line : m.lines()) {
    if (line.cls == big && is_subset(line.points, plane.points)) {
      return members(plane.points & ~line.points).front();
    }
  }
  throw std::logic_error("plane has no spine line");
}

IncidenceTable incidence_table(const Matroid& m) {
  IncidenceTable t;
  std::vector<Flat> uppers = m.lines();
  uppers.insert(uppers.end(), m.planes().begin(), m.planes().end());

  std::vector<PointId> apexes(m.planes().size(), -1);
  for (std::size_t i = 0; i < m.planes().size(); ++i) {
    const Flat& p = m.planes()[i];
    if (p.cls == FlatClass::Pi3 || p.cls == FlatClass::Pi5) apexes[i] = apex(m, p);
  }

  for (FlatClass lower : kIncidenceRows) {
    for (const Flat& f : m.flats(lower)) {
      std::map<FlatClass, int> n;
      for (const Flat& u : uppers) {
        if (is_subset(f.points, u.points)) ++n[u.cls];
      }
      for (FlatClass upper : kIncidenceColumns) t.cells[{lower, upper}].add(n[upper], f.points);
      if (lower == FlatClass::Point) {
        const PointId x = members(f.points).front();
        int a3 = 0;
        int a5 = 0;
        for (std::size_t i = 0; i < m.planes().size(); ++i) {
          if (apexes[i] != x) continue;
          (m.planes()[i].cls == FlatClass::Pi3 ? a3 : a5)++;
        }
        t.apex_pi3.add(a3, f.points);
        t.apex_pi5.add(a5, f.points);
      }
    }
  }
  return t;
}

CoveringReport check_flat_covering(const Matroid& m, const Flat& flat) {
  CoveringReport r;
  r.flat = flat;
  const std::vector<Flat>* covers = nullptr;
  if (flat.rank == 1) {
    covers = &m.lines();
  } else if (flat.rank == 2) {
    covers = &m.planes();
  } else {
    throw std::invalid_argument("flat covering is checked for points and lines only");
  }
  PointSet seen = 0;
  r.disjoint = true;
  for (const Flat& c : *covers) {
    if (!is_subset(flat.points, c.points)) continue;
    ++r.covers[c.cls];
    const PointSet residual = c.points & ~flat.points;
    r.residual_points += count(residual);
    if (seen & residual) r.disjoint = false;
    seen |= residual;
  }
  r.exhaustive = seen == (m.ground_set() & ~flat.points);
  return r;
}

Pi15IntersectionReport pi15_pairwise_intersections(const Matroid& m) {
  Pi15IntersectionReport r;
  const auto planes = m.flats(FlatClass::Pi15);
  r.planes = static_cast<int>(planes.size());
  const std::size_t n = planes.size();
  std::vector<int> meet(n * n, -1);  // intersection size, seen from row plane
  std::vector<std::array<int, 3>> profiles;
  for (std::size_t i = 0; i < n; ++i) {
    std::array<int, 3> profile{0, 0, 0};
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const PointSet both = planes[i].points & planes[j].points;
      meet[i * n + j] = count(both);
      switch (count(both)) {
        case 5: ++profile[0]; break;
        case 3: ++profile[1]; break;
        case 2: ++profile[2]; break;
        default: break;
      }
      if (j < i) continue;
      ++r.pairs;
      const int rk = m.rank(both);
      const auto line = m.find_line(both);
      if (rk == 2 && line) {
        ++r.modular_pairs;
      } else {
        r.problems.push_back("Pi15 #" + std::to_string(i) + " and #" + std::to_string(j) + " meet in " +
                             std::to_string(count(both)) + " points of rank " + std::to_string(rk));
      }
    }
    if (std::find(profiles.begin(), profiles.end(), profile) == profiles.end()) profiles.push_back(profile);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (meet[i * n + j] != meet[j * n + i]) r.symmetric = false;
    }
  }
  std::sort(profiles.begin(), profiles.end());
  r.profiles = profiles;
  return r;
}

}  // namespace h4
