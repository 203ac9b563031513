#include <set>

#include "doctest.h"
#include "fixture.hpp"
#include "h4/census_report.hpp"
#include "h4/export.hpp"
#include "h4/reflections.hpp"
#include "h4/verify.hpp"

using h4::Json;

namespace {

h4::Census full_census() {
  auto c = h4::compute_census(fixture::matroid());
  c.bases = fixture::bases().count();
  c.subsets = fixture::bases().total();
  c.orthoframes = static_cast<int>(fixture::frames().size());
  return c;
}

h4::VerifyOptions quick() {
  h4::VerifyOptions o;
  o.property_cases = 300;
  return o;
}

}  // namespace

TEST_CASE("census formats") {
  const auto c = full_census();
  CHECK(h4::census_mismatches(c).empty());
  const auto text = h4::render_census(c, h4::Format::Text);
  CHECK(text.find("Π15: 60") != std::string::npos);
  CHECK(text.find("3-pt lines: 200") != std::string::npos);
  CHECK(text.find("10 (40)") != std::string::npos);
  CHECK(text.find("6 (36)") != std::string::npos);

  const auto csv = h4::render_census(c, h4::Format::Csv);
  CHECK(csv.rfind("table,row,column,value\n", 0) == 0);
  CHECK(csv.find("flats,line5,count,72") != std::string::npos);

  const auto j = Json::parse(h4::render_census(c, h4::Format::Json));
  CHECK(j.dump().find("398475") != std::string::npos);
  CHECK(h4::parse_format("csv") == h4::Format::Csv);
  CHECK_THROWS_AS(h4::parse_format("xml"), std::invalid_argument);
}

TEST_CASE("census mismatches are reported") {
  auto c = full_census();
  c.counts[h4::FlatClass::Pi15] = 59;
  c.orthoframes = 74;
  CHECK(h4::census_mismatches(c).size() == 2);
  c = full_census();
  c.bases = 0;  // not computed: not compared
  CHECK(h4::census_mismatches(c).empty());
}

TEST_CASE("reference data is self-consistent") {
  // double counting point-line incidences against the flat counts
  const auto& f = h4::reference_flat_counts();
  const auto& i = h4::reference_incidence();
  using F = h4::FlatClass;
  for (auto l : {F::Line2, F::Line3, F::Line5}) {
    const int size = l == F::Line2 ? 2 : l == F::Line3 ? 3 : 5;
    CHECK(f.at(F::Point) * i.at({F::Point, l}) == f.at(l) * size);
  }
  CHECK(f.at(F::Point) * h4::kPointPi3Total == f.at(F::Pi3) * 4);
  CHECK(f.at(F::Point) * h4::kPointPi5Total == f.at(F::Pi5) * 6);
  CHECK(f.at(F::Point) * i.at({F::Point, F::Pi15}) == f.at(F::Pi15) * 15);
}

TEST_CASE("exports") {
  const auto roots = h4::roots_json(fixture::roots());
  REQUIRE(roots.size() == 60);
  for (const auto& r : roots) {
    const auto id = r["id"].get<int>();
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(h4::GoldenNumber::parse(r["coords"][k].get<std::string>()) == fixture::roots().coords(id)[k]);
    }
  }
  const auto frames = h4::orthoframes_json(fixture::frames());
  CHECK(frames.size() == 75);
  CHECK(frames[0] == Json::array({0, 1, 2, 3}));

  const auto flats = h4::flats_json(fixture::matroid(), fixture::frames());
  CHECK(flats["lines"].size() == 450 + 200 + 72);
  CHECK(flats["planes"].size() == 600 + 360 + 300 + 60);

  const auto g = h4::group_json(fixture::aut(), fixture::geometric(), h4::Perm::identity(60));
  CHECK(g["order"] == 14400);
  CHECK(g["geometric_order"] == 7200);
  // generators read back generate the same group
  std::vector<h4::Perm> gens;
  for (const auto& p : g["generators"]) gens.emplace_back(p.get<std::vector<int>>());
  CHECK(h4::PermGroup(60, gens).order() == 14400);

  const auto doc = h4::with_manifest("x", Json::array(), {{"a", "1", "1", true}, {"b", "2", "3", false}});
  CHECK(doc["manifest"]["artifact"] == h4::kArtifactName);
  CHECK(doc["manifest"]["all_pass"] == false);
  CHECK(doc["manifest"]["checks"].size() == 2);
}

TEST_CASE("compact array dumping") {
  const Json j = Json{{"a", Json::array({1, 2, 3})}, {"b", Json::array({Json{{"c", Json::array({4})}}})}};
  const auto s = h4::dump_compact_arrays(j);
  CHECK(s.find("[1, 2, 3]") != std::string::npos);
  CHECK(s.find("[4]") != std::string::npos);
  CHECK(Json::parse(s) == j);
  CHECK(h4::dump_compact_arrays(Json::array()) == "[]\n");
}

TEST_CASE("verification is deterministic and passes on the true columns") {
  const auto a = h4::run_verify_all(h4::h4_columns(), quick());
  CHECK(a.all_pass());
  CHECK(a.failures() == 0);
  CHECK(a.claims.size() == 33);
  std::set<int> criteria;
  for (const auto& c : a.claims) criteria.insert(c.criterion);
  CHECK(criteria.size() == 21);
  CHECK(*criteria.begin() == 1);
  CHECK(*criteria.rbegin() == 21);
  auto o = quick();
  o.jobs = 2;
  const auto b = h4::run_verify_all(h4::h4_columns(), o);
  CHECK(a.to_json(false) == b.to_json(false));
  CHECK(Json::parse(a.to_json(true)).contains("stage_ms"));
  CHECK_FALSE(Json::parse(a.to_json(false)).contains("stage_ms"));
  CHECK(a.to_text().find("33 of 33 claims passed") != std::string::npos);
}

TEST_CASE("tampered columns fail verification") {
  // one altered entry adds a fourth point to a 3-point line
  auto cols = h4::h4_columns();
  cols[12][3] = cols[12][3] + h4::GoldenNumber(1);
  const auto r = h4::run_verify_all(cols, quick());
  CHECK_FALSE(r.all_pass());
  CHECK(r.failures() >= 1);

  // a negated entry makes two columns parallel; the run still completes and
  // only the field-arithmetic claim, which ignores the columns, survives
  auto neg = h4::h4_columns();
  neg[20][1] = -neg[20][1];
  const auto n = h4::run_verify_all(neg, quick());
  CHECK(n.claims.size() == 33);
  for (const auto& c : n.claims) CHECK_MESSAGE(c.pass == (c.id == "properties.golden_field"), c.id);
}
