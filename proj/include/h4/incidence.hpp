#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "h4/matroid.hpp"

namespace h4 {

/// Range of "number of upper flats containing a lower flat" over all lower
/// flats of one class, with a witness flat for each extreme.
struct IncidenceCount {
  int min = 0;
  int max = 0;
  int samples = 0;
  PointSet min_witness = 0;
  PointSet max_witness = 0;

  void add(int value, PointSet witness);
  bool uniform() const { return samples > 0 && min == max; }
};

/// Replica of the flat-incidence table: rows are points and the three line
/// classes, columns the line and plane classes.
struct IncidenceTable {
  std::map<std::pair<FlatClass, FlatClass>, IncidenceCount> cells;
  /// Points counted only as the apex of a Pi3 / Pi5.
  IncidenceCount apex_pi3;
  IncidenceCount apex_pi5;

  const IncidenceCount& at(FlatClass lower, FlatClass upper) const { return cells.at({lower, upper}); }
};

inline constexpr FlatClass kIncidenceRows[] = {FlatClass::Point, FlatClass::Line2, FlatClass::Line3,
                                               FlatClass::Line5};
inline constexpr FlatClass kIncidenceColumns[] = {FlatClass::Line2, FlatClass::Line3, FlatClass::Line5,
                                                  FlatClass::Pi3,   FlatClass::Pi5,   FlatClass::Pi6,
                                                  FlatClass::Pi15};

IncidenceTable incidence_table(const Matroid& m);

/// The point not on the 3- or 5-point line of a Pi3 / Pi5.
PointId apex(const Matroid& m, const Flat& plane);

/// Flat covering property for a point or a line: the covers' residuals
/// (cover minus flat) must partition E minus the flat.
struct CoveringReport {
  Flat flat;
  std::map<FlatClass, int> covers;  // by class
  int residual_points = 0;          // sum of |cover - flat|
  bool disjoint = false;
  bool exhaustive = false;

  bool is_partition() const { return disjoint && exhaustive; }
};

/// Throws std::invalid_argument unless the flat is a point or a line.
CoveringReport check_flat_covering(const Matroid& m, const Flat& flat);

/// Pairwise intersections of the 15-point planes.
struct Pi15IntersectionReport {
  int planes = 0;
  int pairs = 0;
  int modular_pairs = 0;  // intersection of rank exactly 2 and a line flat
  bool symmetric = true;
  /// Distinct per-plane profiles {#meets in 5-pt, 3-pt, 2-pt lines}.
  std::vector<std::array<int, 3>> profiles;
  std::vector<std::string> problems;

  bool all_modular() const { return pairs > 0 && modular_pairs == pairs; }
};

Pi15IntersectionReport pi15_pairwise_intersections(const Matroid& m);

}  // namespace h4
