#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "h4/point_set.hpp"
#include "h4/roots.hpp"
#include "h4/span.hpp"

namespace h4 {

/// Isomorphism classes of flats. Planes are told apart by their internal
/// line structure, not by size (Pi5 and Pi6 both have six points).
enum class FlatClass { Empty, Point, Line2, Line3, Line5, Pi3, Pi5, Pi6, Pi15, Whole };

inline constexpr FlatClass kLineClasses[] = {FlatClass::Line2, FlatClass::Line3, FlatClass::Line5};
inline constexpr FlatClass kPlaneClasses[] = {FlatClass::Pi3, FlatClass::Pi5, FlatClass::Pi6,
                                              FlatClass::Pi15};

/// Stable ASCII tag used in JSON/CSV ("line2", "pi15", ...).
std::string_view tag(FlatClass c);
/// Human-readable name used in text tables ("2-pt lines", "Π15", ...).
std::string_view display_name(FlatClass c);
std::optional<FlatClass> flat_class_from_tag(std::string_view tag);

/// A rank-2 or rank-3 closed set that fits none of the known shapes.
class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flat {
  PointSet points = 0;
  int rank = 0;
  FlatClass cls = FlatClass::Empty;

  int size() const { return count(points); }
  std::vector<PointId> ids() const { return members(points); }
  friend bool operator==(const Flat&, const Flat&) = default;
};

/// Orders flats by class, then by sorted id list.
bool flat_less(const Flat& a, const Flat& b);

/// Counts of internal lines of a point set, by line size.
struct LineProfile {
  int two = 0;
  int three = 0;
  int five = 0;
  int other = 0;
};

/// The linear matroid of a RootSystem: rank oracle plus every line and
/// plane, enumerated and classified at construction.
class Matroid {
 public:
  /// Throws ClassificationError if a line or plane has an unknown shape.
  explicit Matroid(RootSystem roots);

  const RootSystem& roots() const { return roots_; }
  int size() const { return static_cast<int>(roots_.size()); }
  PointSet ground_set() const { return full_set(size()); }

  /// Exact rank via elimination. Throws std::out_of_range on bad ids.
  int rank(std::span<const PointId> ids) const;
  int rank(PointSet s) const;

  Flat closure(PointSet s) const;
  Flat closure(std::span<const PointId> ids) const { return closure(to_set(ids)); }

  /// All rank-2 / rank-3 flats, sorted by flat_less.
  const std::vector<Flat>& lines() const { return lines_; }
  const std::vector<Flat>& planes() const { return planes_; }
  std::vector<Flat> flats(FlatClass c) const;
  std::map<FlatClass, int> flat_counts() const;

  const Flat& line_through(PointId a, PointId b) const;
  std::optional<std::size_t> find_line(PointSet s) const;
  std::optional<std::size_t> find_plane(PointSet s) const;

  LineProfile internal_lines(PointSet s) const;
  FlatClass classify_plane(PointSet s) const;

  Span span_of(PointSet s) const;

 private:
  PointSet to_set(std::span<const PointId> ids) const;
  void check(PointSet s) const;
  PointSet closure_points(const Span& span, PointSet seed) const;
  void enumerate_lines();
  void enumerate_planes();

  RootSystem roots_;
  std::vector<Flat> lines_;
  std::vector<Flat> planes_;
  std::vector<int> line_of_pair_;  // size*size, index into lines_
  std::unordered_map<PointSet, std::size_t> line_index_;
  std::unordered_map<PointSet, std::size_t> plane_index_;
};

}  // namespace h4
