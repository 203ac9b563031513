#include "h4/projection.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

#include "h4/orthoframes.hpp"
#include "h4/span.hpp"

namespace h4 {

ProjectionSpec ProjectionSpec::standard() {
  ProjectionSpec s;
  s.matrix = {Vec4{7, 3, 2, 1}, Vec4{0, 1, 0, 0}, Vec4{0, 0, 1, 0}, Vec4{0, 0, 0, 1}};
  return s;
}

ProjectionSpec ProjectionSpec::parse_matrix(const std::string& text) {
  std::vector<GoldenNumber> entries;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    item = first == std::string::npos ? "" : item.substr(first, last - first + 1);
    // bare rationals are accepted as shorthand for q+0*t
    if (item.find('t') == std::string::npos) item += "+0*t";
    entries.push_back(GoldenNumber::parse(item));
  }
  if (entries.size() != 16) throw std::invalid_argument("projection matrix needs 16 entries");
  ProjectionSpec s = standard();
  for (std::size_t i = 0; i < 16; ++i) s.matrix[i / 4][i % 4] = entries[i];
  return s;
}

std::vector<std::array<GoldenNumber, 3>> affine_points(const RootSystem& roots, const ProjectionSpec& spec) {
  Span rows;
  for (const Vec4& row : spec.matrix) rows.add(row);
  if (rows.rank() != 4) throw ProjectionError("projection matrix is singular", -1);

  std::vector<std::array<GoldenNumber, 3>> out;
  for (PointId p = 0; p < static_cast<PointId>(roots.size()); ++p) {
    Vec4 w;
    for (std::size_t i = 0; i < 4; ++i) w[i] = dot(spec.matrix[i], roots.coords(p));
    if (w[0].is_zero()) throw ProjectionError("point " + std::to_string(p) + " has zero first coordinate", p);
    const GoldenNumber inv = w[0].inverse();
    out.push_back({w[1] * inv, w[2] * inv, w[3] * inv});
  }
  return out;
}

namespace {

// Fixed oblique view of the affine 3-space.
std::array<double, 2> view(const std::array<GoldenNumber, 3>& p) {
  const GoldenNumber x = p[0] + p[2] * GoldenNumber(Rational(2, 5), 0);
  const GoldenNumber y = p[1] + p[2] * GoldenNumber(Rational(1, 7), 0);
  return {x.to_double(), y.to_double()};
}

std::string num(double v) {
  std::string s = fmt::format("{:.6f}", v);
  return s == "-0.000000" ? "0.000000" : s;
}

}  // namespace

SvgFigure render_svg(const Matroid& m, const ProjectionSpec& spec, const ProjectionOptions& options) {
  if (options.lines && *options.lines != 2 && *options.lines != 3 && *options.lines != 5) {
    throw std::invalid_argument("line overlay size must be 2, 3 or 5");
  }
  if (options.plane && (*options.plane < 0 || *options.plane >= m.size())) {
    throw std::out_of_range("plane id out of range");
  }
  const auto affine = affine_points(m.roots(), spec);
  std::vector<std::array<double, 2>> raw;
  for (const auto& p : affine) raw.push_back(view(p));

  double lo_x = raw[0][0], hi_x = raw[0][0], lo_y = raw[0][1], hi_y = raw[0][1];
  for (const auto& [x, y] : raw) {
    lo_x = std::min(lo_x, x);
    hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y);
    hi_y = std::max(hi_y, y);
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double scale = std::min(spec.width, spec.height) - 2 * spec.margin;
  std::vector<std::array<double, 2>> at;
  for (const auto& [x, y] : raw) {
    at.push_back({spec.margin + (x - lo_x) / span * scale, spec.height - spec.margin - (y - lo_y) / span * scale});
  }

  SvgFigure fig;
  std::string& out = fig.svg;
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n", spec.width,
      spec.height);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (options.lines) {
    const FlatClass cls = *options.lines == 2 ? FlatClass::Line2
                          : *options.lines == 3 ? FlatClass::Line3
                                                : FlatClass::Line5;
    out += fmt::format("<g stroke=\"{}\" stroke-width=\"{}\" fill=\"none\">\n",
                       *options.lines == 5 ? "#b03030" : *options.lines == 3 ? "#3050b0" : "#909090",
                       num(spec.stroke_width));
    for (const Flat& line : m.flats(cls)) {
      // Points of a line stay collinear, so the farthest pair spans the segment.
      const auto ids = line.ids();
      std::size_t a = 0, b = 1;
      double best = -1;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
          const auto& p = at[static_cast<std::size_t>(ids[i])];
          const auto& q = at[static_cast<std::size_t>(ids[j])];
          const double d = std::hypot(p[0] - q[0], p[1] - q[1]);
          if (d > best + 1e-9) {
            best = d;
            a = i;
            b = j;
          }
        }
      }
      const auto& p = at[static_cast<std::size_t>(ids[a])];
      const auto& q = at[static_cast<std::size_t>(ids[b])];
      out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", num(p[0]), num(p[1]), num(q[0]),
                         num(q[1]));
      ++fig.segments;
    }
    out += "</g>\n";
  }

  const PointSet plane = options.plane ? orthogonal_set(m.roots(), *options.plane) : 0;
  out += "<g stroke=\"black\" stroke-width=\"0.5\">\n";
  for (PointId p = 0; p < m.size(); ++p) {
    const auto& c = at[static_cast<std::size_t>(p)];
    std::string fill = "black";
    if (options.plane && p == *options.plane) {
      fill = "#e0a000";
    } else if (contains(plane, p)) {
      fill = "#20a040";
      ++fig.highlighted;
    }
    out += fmt::format("<circle id=\"p{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>\n", p, num(c[0]), num(c[1]),
                       num(spec.point_radius), fill);
    ++fig.points;
  }
  out += "</g>\n";
  if (options.labels) {
    out += "<g font-family=\"sans-serif\" font-size=\"9\" fill=\"#333333\">\n";
    for (PointId p = 0; p < m.size(); ++p) {
      const auto& c = at[static_cast<std::size_t>(p)];
      out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", num(c[0] + spec.point_radius + 1),
                         num(c[1] - spec.point_radius - 1), p);
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return fig;
}

}  // namespace h4
