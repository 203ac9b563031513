#include "fixture.hpp"

#include <stdexcept>

#include "h4/reflections.hpp"

namespace fixture {

const h4::RootSystem& roots() { return matroid().roots(); }

const h4::Matroid& matroid() {
  static const h4::Matroid m(h4::RootSystem::h4());
  return m;
}

const h4::BasisTable& bases() {
  static const h4::BasisTable b = h4::BasisTable::compute(matroid(), 1);
  return b;
}

const std::vector<h4::Orthoframe>& frames() {
  static const auto f = h4::enumerate_orthoframes(matroid());
  return f;
}

const h4::AutGroup& aut() {
  static const h4::AutGroup a = h4::aut_group(matroid(), bases());
  return a;
}

const h4::PermGroup& geometric() {
  static const h4::PermGroup g = h4::geometric_group(roots());
  return g;
}

h4::PointId id(const h4::Vec4& v) {
  const auto p = roots().lookup(v);
  if (!p) throw std::invalid_argument("not a point: " + h4::to_string(v));
  return *p;
}

h4::GoldenNumber t() { return h4::GoldenNumber::tau(); }
h4::GoldenNumber t2() { return h4::GoldenNumber(1, 1); }

}  // namespace fixture
