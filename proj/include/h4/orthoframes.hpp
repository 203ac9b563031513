#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "h4/bases.hpp"
#include "h4/matroid.hpp"

namespace h4 {

/// A basis whose six pairs are all 2-point lines.
struct Orthoframe {
  std::array<PointId, 4> points{};  // sorted

  PointSet set() const { return make_set(points); }
  friend auto operator<=>(const Orthoframe&, const Orthoframe&) = default;
};

/// All orthoframes, sorted. Found as 4-cliques of the 2-point-line graph
/// that are bases.
std::vector<Orthoframe> enumerate_orthoframes(const Matroid& m);

bool is_orthoframe_by_lines(const Matroid& m, const BasisTable& bases, PointSet s);
bool is_orthoframe_by_dots(const RootSystem& roots, PointSet s);

/// How the three orthoframe characterizations compare on all 4-subsets:
/// membership in the enumerated list, pairwise orthogonality, and
/// "basis with all pairs 2-point lines".
struct CharacterizationReport {
  std::uint64_t subsets = 0;
  std::uint64_t agreeing = 0;
  int enumerated = 0;
  int by_dots = 0;
  int by_lines = 0;

  bool all_agree() const { return subsets > 0 && agreeing == subsets; }
};

CharacterizationReport compare_orthoframe_characterizations(const Matroid& m, const BasisTable& bases,
                                                            const std::vector<Orthoframe>& frames);

/// Points orthogonal to x: { y : dot(x, y) = 0 }.
PointSet orthogonal_set(const RootSystem& roots, PointId x);

/// Union of the orthoframes through x, minus x. Throws ConsistencyError
/// unless it is a Pi15 equal to orthogonal_set(x).
Flat orthoplane(const Matroid& m, const std::vector<Orthoframe>& frames, PointId x);

/// The point completing every orthoframe that meets `plane` in three
/// points. Throws ConsistencyError if those frames disagree.
PointId orthopoint(const std::vector<Orthoframe>& frames, PointSet plane);

}  // namespace h4
