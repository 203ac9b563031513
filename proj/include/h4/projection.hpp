#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "h4/matroid.hpp"

namespace h4 {

class ProjectionError : public std::runtime_error {
 public:
  ProjectionError(const std::string& what, PointId point) : std::runtime_error(what), point_(point) {}
  /// Offending point, or -1 for a singular transform.
  PointId point() const { return point_; }

 private:
  PointId point_;
};

/// Change of basis applied before projecting onto x1 = 1; rows of the matrix.
struct ProjectionSpec {
  std::array<Vec4, 4> matrix;
  int width = 800;
  int height = 800;
  double margin = 40.0;
  double point_radius = 4.0;
  double stroke_width = 0.8;

  /// First row (7, 3, 2, 1), other rows the identity's.
  static ProjectionSpec standard();

  /// Sixteen golden numbers ("a+b*t" or a bare rational) in row-major
  /// order, separated by commas.
  static ProjectionSpec parse_matrix(const std::string& text);
};

/// Affine coordinates after the change of basis and division by the new
/// first coordinate. Throws ProjectionError on a singular matrix or a zero
/// first coordinate.
std::vector<std::array<GoldenNumber, 3>> affine_points(const RootSystem& roots, const ProjectionSpec& spec);

struct ProjectionOptions {
  std::optional<int> lines;        // overlay lines of this size (2, 3 or 5)
  std::optional<PointId> plane;    // highlight P_x and x
  bool labels = true;
};

struct SvgFigure {
  std::string svg;
  int points = 0;
  int segments = 0;
  int highlighted = 0;
};

SvgFigure render_svg(const Matroid& m, const ProjectionSpec& spec, const ProjectionOptions& options);

}  // namespace h4
