#pragma once

// Shared, lazily built objects for the tests. Built once per test binary.

#include <vector>

#include "h4/autos.hpp"
#include "h4/bases.hpp"
#include "h4/orthoframes.hpp"

namespace fixture {

const h4::RootSystem& roots();
const h4::Matroid& matroid();
const h4::BasisTable& bases();
const std::vector<h4::Orthoframe>& frames();
const h4::AutGroup& aut();
const h4::PermGroup& geometric();

h4::PointId id(const h4::Vec4& v);

// tau and tau^2
h4::GoldenNumber t();
h4::GoldenNumber t2();

}  // namespace fixture
