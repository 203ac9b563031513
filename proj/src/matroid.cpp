#include "h4/matroid.hpp"

#include <algorithm>
#include <string>

namespace h4 {

std::string_view tag(FlatClass c) {
  switch (c) {
    case FlatClass::Empty: return "empty";
    case FlatClass::Point: return "point";
    case FlatClass::Line2: return "line2";
    case FlatClass::Line3: return "line3";
    case FlatClass::Line5: return "line5";
    case FlatClass::Pi3: return "pi3";
    case FlatClass::Pi5: return "pi5";
    case FlatClass::Pi6: return "pi6";
    case FlatClass::Pi15: return "pi15";
    case FlatClass::Whole: return "whole";
  }
  return "?";
}

std::string_view display_name(FlatClass c) {
  switch (c) {
    case FlatClass::Empty: return "empty";
    case FlatClass::Point: return "Points";
    case FlatClass::Line2: return "2-pt lines";
    case FlatClass::Line3: return "3-pt lines";
    case FlatClass::Line5: return "5-pt lines";
    case FlatClass::Pi3: return "Π3";
    case FlatClass::Pi5: return "Π5";
    case FlatClass::Pi6: return "Π6";
    case FlatClass::Pi15: return "Π15";
    case FlatClass::Whole: return "E";
  }
  return "?";
}

std::optional<FlatClass> flat_class_from_tag(std::string_view t) {
  for (auto c : {FlatClass::Empty, FlatClass::Point, FlatClass::Line2, FlatClass::Line3, FlatClass::Line5,
                 FlatClass::Pi3, FlatClass::Pi5, FlatClass::Pi6, FlatClass::Pi15, FlatClass::Whole}) {
    if (tag(c) == t) return c;
  }
  return std::nullopt;
}

bool flat_less(const Flat& a, const Flat& b) {
  if (a.cls != b.cls) return a.cls < b.cls;
  return a.ids() < b.ids();
}

Matroid::Matroid(RootSystem roots) : roots_(std::move(roots)) {
  if (roots_.size() > 64) throw std::invalid_argument("at most 64 points are supported");
  enumerate_lines();
  enumerate_planes();
}

PointSet Matroid::to_set(std::span<const PointId> ids) const {
  PointSet s = 0;
  for (PointId id : ids) {
    if (id < 0 || id >= size()) throw std::out_of_range("point id " + std::to_string(id) + " out of range");
    s |= bit(id);
  }
  return s;
}

void Matroid::check(PointSet s) const {
  if (!is_subset(s, ground_set())) throw std::out_of_range("point set has ids outside the ground set");
}

Span Matroid::span_of(PointSet s) const {
  check(s);
  Span span;
  for (PointId id : members(s)) {
    span.add(roots_.coords(id));
    if (span.rank() == 4) break;
  }
  return span;
}

int Matroid::rank(std::span<const PointId> ids) const { return rank(to_set(ids)); }

int Matroid::rank(PointSet s) const { return span_of(s).rank(); }

PointSet Matroid::closure_points(const Span& span, PointSet seed) const {
  if (span.rank() == 4) return ground_set();
  PointSet out = seed;
  for (PointId id = 0; id < size(); ++id) {
    if (!contains(out, id) && span.contains(roots_.coords(id))) out |= bit(id);
  }
  return out;
}

LineProfile Matroid::internal_lines(PointSet s) const {
  LineProfile p;
  std::vector<int> seen;
  const auto ids = members(s);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      const int li = line_of_pair_[static_cast<std::size_t>(ids[i] * size() + ids[j])];
      if (std::find(seen.begin(), seen.end(), li) != seen.end()) continue;
      seen.push_back(li);
      const Flat& line = lines_[static_cast<std::size_t>(li)];
      if (!is_subset(line.points, s)) continue;
      switch (line.size()) {
        case 2: ++p.two; break;
        case 3: ++p.three; break;
        case 5: ++p.five; break;
        default: ++p.other; break;
      }
    }
  }
  return p;
}

FlatClass Matroid::classify_plane(PointSet s) const {
  const LineProfile p = internal_lines(s);
  const int n = count(s);
  if (p.other == 0) {
    if (n == 4 && p.three == 1 && p.five == 0) return FlatClass::Pi3;
    if (n == 6 && p.five == 1 && p.three == 0) return FlatClass::Pi5;
    if (n == 6 && p.three == 4 && p.five == 0) return FlatClass::Pi6;
    if (n == 15 && p.two == 15 && p.three == 10 && p.five == 6) return FlatClass::Pi15;
  }
  throw ClassificationError("plane {" + [&] {
    std::string t;
    for (int id : members(s)) t += (t.empty() ? "" : ",") + std::to_string(id);
    return t;
  }() + "} with " + std::to_string(n) + " points matches no known plane type");
}

void Matroid::enumerate_lines() {
  const int n = size();
  line_of_pair_.assign(static_cast<std::size_t>(n * n), -1);
  std::vector<Flat> found;
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = a + 1; b < n; ++b) {
      if (line_of_pair_[static_cast<std::size_t>(a * n + b)] >= 0) continue;
      Span span;
      span.add(roots_.coords(a));
      span.add(roots_.coords(b));
      const PointSet pts = closure_points(span, bit(a) | bit(b));
      FlatClass cls;
      switch (count(pts)) {
        case 2: cls = FlatClass::Line2; break;
        case 3: cls = FlatClass::Line3; break;
        case 5: cls = FlatClass::Line5; break;
        default:
          throw ClassificationError("line through " + std::to_string(a) + "," + std::to_string(b) + " has " +
                                    std::to_string(count(pts)) + " points");
      }
      const int idx = static_cast<int>(found.size());
      found.push_back({pts, 2, cls});
      for (int x : members(pts)) {
        for (int y : members(pts)) {
          if (x != y) line_of_pair_[static_cast<std::size_t>(x * n + y)] = idx;
        }
      }
    }
  }
  // Re-index in canonical order.
  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return flat_less(found[i], found[j]); });
  std::vector<int> remap(found.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    remap[order[k]] = static_cast<int>(k);
    lines_.push_back(found[order[k]]);
    line_index_.emplace(lines_.back().points, k);
  }
  for (auto& li : line_of_pair_) {
    if (li >= 0) li = remap[static_cast<std::size_t>(li)];
  }
}

void Matroid::enumerate_planes() {
  const int n = size();
  std::vector<PointSet> found;
  std::vector<std::vector<std::size_t>> pair_planes(static_cast<std::size_t>(n * n));
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = a + 1; b < n; ++b) {
      const PointSet line = line_through(a, b).points;
      for (PointId c = b + 1; c < n; ++c) {
        if (contains(line, c)) continue;
        const auto& known = pair_planes[static_cast<std::size_t>(a * n + b)];
        if (std::any_of(known.begin(), known.end(), [&](std::size_t p) { return contains(found[p], c); })) continue;
        Span span;
        span.add(roots_.coords(a));
        span.add(roots_.coords(b));
        span.add(roots_.coords(c));
        const PointSet pts = closure_points(span, bit(a) | bit(b) | bit(c));
        const std::size_t idx = found.size();
        found.push_back(pts);
        const auto ids = members(pts);
        for (std::size_t i = 0; i < ids.size(); ++i) {
          for (std::size_t j = i + 1; j < ids.size(); ++j) {
            pair_planes[static_cast<std::size_t>(ids[i] * n + ids[j])].push_back(idx);
          }
        }
      }
    }
  }
  for (PointSet pts : found) planes_.push_back({pts, 3, classify_plane(pts)});
  std::sort(planes_.begin(), planes_.end(), flat_less);
  for (std::size_t k = 0; k < planes_.size(); ++k) plane_index_.emplace(planes_[k].points, k);
}

Flat Matroid::closure(PointSet s) const {
  const Span span = span_of(s);
  const PointSet pts = closure_points(span, s);
  Flat f{pts, span.rank(), FlatClass::Empty};
  switch (f.rank) {
    case 0: f.cls = FlatClass::Empty; break;
    case 1: f.cls = FlatClass::Point; break;
    case 2: f.cls = lines_[*find_line(pts)].cls; break;
    case 3: f.cls = planes_[*find_plane(pts)].cls; break;
    default: f.cls = FlatClass::Whole; break;
  }
  return f;
}

std::vector<Flat> Matroid::flats(FlatClass c) const {
  std::vector<Flat> out;
  if (c == FlatClass::Point) {
    for (PointId id = 0; id < size(); ++id) out.push_back({bit(id), 1, FlatClass::Point});
    return out;
  }
  for (const auto* list : {&lines_, &planes_}) {
    for (const Flat& f : *list) {
      if (f.cls == c) out.push_back(f);
    }
  }
  return out;
}

std::map<FlatClass, int> Matroid::flat_counts() const {
  std::map<FlatClass, int> counts;
  counts[FlatClass::Point] = size();
  for (auto c : kLineClasses) counts[c] = 0;
  for (auto c : kPlaneClasses) counts[c] = 0;
  for (const Flat& f : lines_) ++counts[f.cls];
  for (const Flat& f : planes_) ++counts[f.cls];
  return counts;
}

const Flat& Matroid::line_through(PointId a, PointId b) const {
  if (a == b || a < 0 || b < 0 || a >= size() || b >= size()) {
    throw std::out_of_range("line_through needs two distinct valid points");
  }
  return lines_[static_cast<std::size_t>(line_of_pair_[static_cast<std::size_t>(a * size() + b)])];
}

std::optional<std::size_t> Matroid::find_line(PointSet s) const {
  auto it = line_index_.find(s);
  if (it == line_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Matroid::find_plane(PointSet s) const {
  auto it = plane_index_.find(s);
  if (it == plane_index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace h4
