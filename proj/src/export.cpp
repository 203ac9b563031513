#include "h4/export.hpp"

namespace h4 {

Json perm_json(const Perm& p) {
  Json a = Json::array();
  for (std::size_t i = 0; i < p.degree(); ++i) a.push_back(p(static_cast<int>(i)));
  return a;
}

Json roots_json(const RootSystem& roots) {
  Json out = Json::array();
  for (const RootPoint& p : roots.points()) {
    Json coords = Json::array();
    for (const GoldenNumber& c : p.coords) coords.push_back(c.to_string());
    out.push_back(Json{{"id", p.id}, {"coords", coords}});
  }
  return out;
}

Json orthoframes_json(const std::vector<Orthoframe>& frames) {
  Json out = Json::array();
  for (const auto& f : frames) out.push_back(f.points);
  return out;
}

Json flats_json(const Matroid& m, const std::vector<Orthoframe>& frames) {
  auto list = [](const std::vector<Flat>& flats) {
    Json a = Json::array();
    for (const Flat& f : flats) a.push_back(Json{{"class", std::string(tag(f.cls))}, {"points", f.ids()}});
    return a;
  };
  return Json{{"lines", list(m.lines())}, {"planes", list(m.planes())}, {"orthoframes", orthoframes_json(frames)}};
}

Json group_json(const AutGroup& aut, const PermGroup& geometric, const Perm& coset_witness) {
  Json gens = Json::array();
  for (const Perm& g : aut.generators) gens.push_back(perm_json(g));
  return Json{{"degree", aut.group.degree()},
              {"order", aut.group.order()},
              {"base", aut.group.base()},
              {"orbit_lengths", aut.group.orbit_lengths()},
              {"generators", gens},
              {"geometric_order", geometric.order()},
              {"coset_witness", perm_json(coset_witness)}};
}

Json with_manifest(const std::string& what, Json payload, const std::vector<ManifestCheck>& checks) {
  Json list = Json::array();
  bool all = true;
  for (const auto& c : checks) {
    list.push_back(Json{{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
    all = all && c.pass;
  }
  Json manifest{{"artifact", kArtifactName}, {"version", kArtifactVersion}, {"export", what}, {"checks", list},
                {"all_pass", all}};
  return Json{{"manifest", manifest}, {"data", std::move(payload)}};
}

namespace {

bool scalar_array(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& e : j) {
    if (e.is_structured()) return false;
  }
  return true;
}

void write(const Json& j, int indent, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(indent * depth), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + Json(it.key()).dump() + ": ";
      write(it.value(), indent, depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
  } else if (j.is_array() && !j.empty() && !scalar_array(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      write(j[i], indent, depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
  } else if (scalar_array(j)) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump_compact_arrays(const Json& j, int indent) {
  std::string out;
  write(j, indent, 0, out);
  return out + "\n";
}

}  // namespace h4
