#include <regex>
#include <set>

#include "doctest.h"
#include "fixture.hpp"
#include "h4/projection.hpp"

using h4::GoldenNumber;
using h4::ProjectionError;
using h4::ProjectionOptions;
using h4::ProjectionSpec;

namespace {

using P3 = std::array<GoldenNumber, 3>;

P3 minus(const P3& a, const P3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

P3 cross(const P3& a, const P3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool zero(const P3& a) { return a[0].is_zero() && a[1].is_zero() && a[2].is_zero(); }

std::size_t occurrences(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("affine images keep lines collinear and planes coplanar") {
  const auto pts = h4::affine_points(fixture::roots(), ProjectionSpec::standard());
  REQUIRE(pts.size() == 60);
  for (const auto& l : fixture::matroid().lines()) {
    const auto ids = h4::members(l.points);
    for (std::size_t k = 2; k < ids.size(); ++k) {
      const auto& a = pts[static_cast<std::size_t>(ids[0])];
      REQUIRE(zero(cross(minus(pts[static_cast<std::size_t>(ids[1])], a), minus(pts[static_cast<std::size_t>(ids[k])], a))));
    }
  }
  for (const auto& p : fixture::matroid().flats(h4::FlatClass::Pi15)) {
    const auto ids = h4::members(p.points);
    const auto& a = pts[static_cast<std::size_t>(ids[0])];
    // normal from the first two independent directions
    P3 normal{};
    for (std::size_t j = 2; j < ids.size() && zero(normal); ++j) {
      normal = cross(minus(pts[static_cast<std::size_t>(ids[1])], a), minus(pts[static_cast<std::size_t>(ids[j])], a));
    }
    REQUIRE_FALSE(zero(normal));
    for (int q : ids) {
      const P3 d = minus(pts[static_cast<std::size_t>(q)], a);
      REQUIRE((d[0] * normal[0] + d[1] * normal[1] + d[2] * normal[2]).is_zero());
    }
  }
  // distinct points stay distinct
  std::set<std::string> seen;
  for (const auto& p : pts) seen.insert(p[0].to_string() + "," + p[1].to_string() + "," + p[2].to_string());
  CHECK(seen.size() == 60);
}

TEST_CASE("segment counts follow the line census") {
  const auto& m = fixture::matroid();
  const auto spec = ProjectionSpec::standard();
  CHECK(h4::render_svg(m, spec, {}).segments == 0);
  const std::map<int, int> expected{{2, 450}, {3, 200}, {5, 72}};
  for (const auto& [size, count] : expected) {
    ProjectionOptions o;
    o.lines = size;
    const auto fig = h4::render_svg(m, spec, o);
    CHECK(fig.points == 60);
    CHECK(fig.segments == count);
    CHECK(occurrences(fig.svg, "<line ") == static_cast<std::size_t>(count));
    CHECK(occurrences(fig.svg, "<circle ") == 60);
  }
  ProjectionOptions bad;
  bad.lines = 4;
  CHECK_THROWS_AS(h4::render_svg(m, spec, bad), std::invalid_argument);
}

TEST_CASE("plane highlighting and labels") {
  ProjectionOptions o;
  o.plane = 0;
  o.labels = false;
  const auto fig = h4::render_svg(fixture::matroid(), ProjectionSpec::standard(), o);
  CHECK(fig.highlighted == 15);
  CHECK(occurrences(fig.svg, "<text") == 0);
  CHECK(occurrences(h4::render_svg(fixture::matroid(), ProjectionSpec::standard(), {}).svg, "<text") == 60);
  o.plane = 60;
  CHECK_THROWS_AS(h4::render_svg(fixture::matroid(), ProjectionSpec::standard(), o), std::out_of_range);
}

TEST_CASE("output is byte-deterministic with six-decimal coordinates") {
  ProjectionOptions o;
  o.lines = 3;
  o.plane = 7;
  const auto a = h4::render_svg(fixture::matroid(), ProjectionSpec::standard(), o).svg;
  const auto b = h4::render_svg(fixture::matroid(), ProjectionSpec::standard(), o).svg;
  CHECK(a == b);
  CHECK(a.rfind("<svg", 0) == 0);
  const std::regex number(R"re((?:x|y|x1|y1|x2|y2|cx|cy)="(-?\d+\.\d+)")re");
  for (auto it = std::sregex_iterator(a.begin(), a.end(), number); it != std::sregex_iterator(); ++it) {
    const std::string v = (*it)[1];
    REQUIRE(v.size() - v.find('.') - 1 == 6);
    REQUIRE(v.rfind("-0.000000", 0) == std::string::npos);
  }
}

TEST_CASE("matrix parsing") {
  const auto s = ProjectionSpec::parse_matrix("1,0,0,0, 0,1,0,0, 0,0,1,0, 0,0,0,1");
  CHECK(s.matrix[2][2] == GoldenNumber(1));
  CHECK(s.matrix[0][1] == GoldenNumber(0));
  const auto t = ProjectionSpec::parse_matrix("2+1*t,0,0,0,0,1,0,0,0,0,1,0,0,0,0,1");
  CHECK(t.matrix[0][0] == GoldenNumber(2) + fixture::t());
  CHECK_THROWS_AS(ProjectionSpec::parse_matrix("1,2,3"), std::invalid_argument);
  CHECK_THROWS(ProjectionSpec::parse_matrix("1,0,0,0,0,1,0,0,0,0,1,0,0,0,0,x"));
  CHECK_THROWS(ProjectionSpec::parse_matrix("1,0,0,0,0,1,0,0,0,0,1,0,0,0,0,"));
}

TEST_CASE("bad matrices are rejected") {
  const auto singular = ProjectionSpec::parse_matrix("1,0,0,0,1,0,0,0,0,0,1,0,0,0,0,1");
  try {
    h4::affine_points(fixture::roots(), singular);
    FAIL("singular matrix accepted");
  } catch (const ProjectionError& e) {
    CHECK(e.point() == -1);
  }
  // new first coordinate is the old second one, which vanishes on (1,0,0,0)
  const auto vanishing = ProjectionSpec::parse_matrix("0,1,0,0,1,0,0,0,0,0,1,0,0,0,0,1");
  try {
    h4::render_svg(fixture::matroid(), vanishing, {});
    FAIL("zero first coordinate accepted");
  } catch (const ProjectionError& e) {
    CHECK(e.point() == fixture::id({1, 0, 0, 0}));
  }
}
