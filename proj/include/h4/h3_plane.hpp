#pragma once

#include <array>
#include <vector>

#include "h4/matroid.hpp"

namespace h4 {

/// Internal census of the restriction of the matroid to a 15-point plane.
struct H3Report {
  int points = 0;
  int lines2 = 0;
  int lines3 = 0;
  int lines5 = 0;
  int other_lines = 0;
  /// Triples of the plane whose pairs are 2-point lines and which span it.
  std::vector<std::array<PointId, 3>> partial_frames;
  bool frames_orthogonal = false;
  bool frames_partition = false;

  bool matches_h3() const {
    return points == 15 && lines2 == 15 && lines3 == 10 && lines5 == 6 && other_lines == 0 &&
           partial_frames.size() == 5 && frames_orthogonal && frames_partition;
  }
};

/// Recomputes the plane's lines with the rank oracle, independently of the
/// enumerated line list. Throws std::invalid_argument if not a Pi15.
H3Report pi15_as_h3(const Matroid& m, const Flat& plane);

}  // namespace h4
