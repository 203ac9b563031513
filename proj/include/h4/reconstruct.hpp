#pragma once

#include <map>
#include <string>
#include <vector>

#include "h4/orthoframes.hpp"

namespace h4 {

/// Every line and plane, as sorted point sets, keyed by class.
using FlatLists = std::map<FlatClass, std::vector<PointSet>>;

/// Rebuilds all lines and planes from the orthoframes alone (no rank
/// oracle, no coordinates):
///   Pi15  = union of the frames through a point, minus the point;
///   2-pt lines = pairs inside a frame;
///   3-/5-pt lines = pairwise Pi15 intersections of that size;
///   Pi3 / Pi5 = a 3-/5-pt line of a Pi15 plus the Pi15's orthopoint;
///   Pi6 = two meeting 3-pt lines outside any common Pi15, completed by
///         the 3-pt lines joining their remaining points.
struct Reconstruction {
  FlatLists flats;
  std::vector<std::string> anomalies;
};

Reconstruction reconstruct_from_orthoframes(const std::vector<Orthoframe>& frames);

/// The oracle-side lists in the same shape, for comparison.
FlatLists flat_lists(const Matroid& m);

}  // namespace h4
