// Command-line front end: censuses, group reports, exports, the projection
// figure and the full verification run.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "CLI11.hpp"

#include "h4/autos.hpp"
#include "h4/census_report.hpp"
#include "h4/export.hpp"
#include "h4/projection.hpp"
#include "h4/reflections.hpp"
#include "h4/verify.hpp"

namespace {

using namespace h4;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Common {
  std::string format = "text";
  std::string out;
  int jobs = 1;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write to " + path + " failed");
}

struct World {
  Matroid m{RootSystem::h4()};
  std::vector<Orthoframe> frames = enumerate_orthoframes(m);
};

int cmd_census(const Common& c) {
  const Format format = parse_format(c.format);
  World w;
  Census census = compute_census(w.m);
  const BasisTable bases = BasisTable::compute(w.m, c.jobs);
  census.bases = bases.count();
  census.subsets = bases.total();
  census.orthoframes = static_cast<int>(w.frames.size());
  emit(render_census(census, format), c.out);
  const auto bad = census_mismatches(census);
  for (const auto& b : bad) std::cerr << "mismatch: " << b << "\n";
  return bad.empty() ? kPass : kFail;
}

int cmd_verify(const Common& c, std::uint64_t seed, std::uint64_t cases, bool timing) {
  const Format format = parse_format(c.format);
  if (format == Format::Csv) throw CLI::ValidationError("--format", "verify-all supports text or json");
  VerifyOptions options;
  options.jobs = c.jobs;
  options.seed = seed;
  options.property_cases = cases;
  const VerificationReport r = run_verify_all(h4_columns(), options);
  if (format == Format::Json) {
    emit(r.to_json(timing), c.out);
  } else {
    std::cout << r.to_text();
    if (!c.out.empty()) emit(r.to_json(timing), c.out);
  }
  return r.all_pass() ? kPass : kFail;
}

int cmd_orthoframes(const Common& c) {
  const Format format = parse_format(c.format);
  World w;
  std::string text;
  if (format == Format::Json) {
    text = dump_compact_arrays(orthoframes_json(w.frames));
  } else {
    if (format == Format::Csv) text = "frame,p0,p1,p2,p3\n";
    for (std::size_t i = 0; i < w.frames.size(); ++i) {
      const auto& p = w.frames[i].points;
      text += format == Format::Csv ? fmt::format("{},{},{},{},{}\n", i, p[0], p[1], p[2], p[3])
                                    : fmt::format("{:>2}: {}\n", i, fmt::join(p, " "));
    }
    if (format == Format::Text) text += fmt::format("{} orthoframes\n", w.frames.size());
  }
  emit(text, c.out);
  return w.frames.size() == kReferenceOrthoframes ? kPass : kFail;
}

int cmd_bases(const Common& c) {
  const Format format = parse_format(c.format);
  const Matroid m(RootSystem::h4());
  const BasisTable b = BasisTable::compute(m, c.jobs);
  std::string text;
  switch (format) {
    case Format::Text:
      text = fmt::format("bases: {} of {} 4-subsets ({:.1f}%)\n", b.count(), b.total(),
                         100.0 * static_cast<double>(b.count()) / static_cast<double>(b.total()));
      break;
    case Format::Csv: text = fmt::format("bases,subsets\n{},{}\n", b.count(), b.total()); break;
    case Format::Json: text = Json{{"bases", b.count()}, {"subsets", b.total()}}.dump(2) + "\n"; break;
  }
  emit(text, c.out);
  return b.count() == kReferenceBases ? kPass : kFail;
}

int cmd_aut(const Common& c) {
  const Format format = parse_format(c.format);
  World w;
  const BasisTable bases = BasisTable::compute(w.m, c.jobs);
  const AutGroup aut = aut_group(w.m, bases);
  const PermGroup geo = geometric_group(w.m.roots());
  const NongeometricReport ng = nongeometric_witness(w.m, w.frames, aut.group, geo);
  const bool ok = aut.group.order() == 14400 && geo.order() == 7200 && ng.kernel_is_geometric;

  if (format == Format::Json || !c.out.empty()) {
    const std::vector<ManifestCheck> checks{
        {"order", "14400", std::to_string(aut.group.order()), aut.group.order() == 14400},
        {"geometric_order", "7200", std::to_string(geo.order()), geo.order() == 7200},
        {"generators_certified", "true", "true", true},
        {"witness_outside_geometric", "true", ng.witness_outside_geometric ? "true" : "false",
         ng.witness_outside_geometric}};
    const std::string doc = dump_compact_arrays(with_manifest("group", group_json(aut, geo, ng.witness), checks));
    emit(doc, c.out);
    if (format == Format::Json) return ok ? kPass : kFail;
  }
  std::cout << fmt::format("|Aut| = {} ({} generators, all certified basis-preserving)\n", aut.group.order(),
                           aut.generators.size());
  std::cout << fmt::format("search: {} perms fixing point 0, point 0 reaches {} points, {} nodes\n",
                           aut.stabilizer_found, aut.transversal_found, aut.search_nodes);
  std::cout << fmt::format("geometric subgroup: order {}, index {}\n", geo.order(), aut.group.order() / geo.order());
  std::cout << fmt::format("coset witness: {}\n", ng.witness.to_string());
  std::cout << fmt::format("  frame parity inside P_0: {}\n", ng.frame_parity);
  return ok ? kPass : kFail;
}

int cmd_stab(const Common& c, int x) {
  World w;
  if (x < 0 || x >= w.m.size()) throw CLI::ValidationError("id", "point id must be in 0..59");
  const BasisTable bases = BasisTable::compute(w.m, c.jobs);
  const AutGroup aut = aut_group(w.m, bases);
  const StabilizerReport r = stabilizer_report(w.m, w.frames, aut.group, x, true);
  const bool iso = r.isomorphic_s5_z2.value_or(false);
  const bool ok = r.order == 240 && r.reflection_central && r.restriction_image == 120 && r.kernel_is_reflection &&
                  r.frame_image == 120 && r.equals_plane_stabilizer(aut.group.order()) && iso;
  const auto yes = [](bool b) { return b ? "yes" : "no"; };
  std::string text;
  if (parse_format(c.format) == Format::Json) {
    text = Json{{"point", x},
                {"order", r.order},
                {"reflection_central", r.reflection_central},
                {"restriction_image", r.restriction_image},
                {"kernel_is_reflection", r.kernel_is_reflection},
                {"frame_image", r.frame_image},
                {"equals_plane_stabilizer", r.equals_plane_stabilizer(aut.group.order())},
                {"isomorphic_s5_z2", iso}}
               .dump(2) +
           "\n";
  } else {
    text += fmt::format("stab({}): order {}\n", x, r.order);
    text += fmt::format("  reflection r_{} central: {}\n", x, yes(r.reflection_central));
    text += fmt::format("  action on P_{}: image order {}, kernel {{1, r_{}}}: {}\n", x, r.restriction_image, x,
                        yes(r.kernel_is_reflection));
    text += fmt::format("  action on the 5 frames through {}: {} arrangements\n", x, r.frame_image);
    text += fmt::format("  stab({0}) = stab(P_{0}): {1} (orbit of P_{0} has {2} planes)\n", x,
                        yes(r.equals_plane_stabilizer(aut.group.order())), r.orthoplane_orbit);
    text += fmt::format("  isomorphic to S5 x Z2: {}\n", yes(iso));
  }
  emit(text, c.out);
  return ok ? kPass : kFail;
}

int cmd_primitivity(const Common& c) {
  World w;
  const BasisTable bases = BasisTable::compute(w.m, c.jobs);
  const AutGroup aut = aut_group(w.m, bases);
  const PrimitivityCheck r = primitivity_check(w.m, w.frames, aut.group);
  std::string text;
  if (parse_format(c.format) == Format::Json) {
    Json systems = Json::array();
    for (const auto& s : r.restriction_systems) systems.push_back(s.blocks);
    text = dump_compact_arrays(Json{{"primitive", r.primitive},
                                    {"candidate_block_sizes", r.candidate_sizes},
                                    {"dividing_sizes", r.dividing_sizes},
                                    {"restriction_imprimitive", r.restriction_imprimitive},
                                    {"restriction_systems", systems},
                                    {"restriction_blocks_are_frames", r.restriction_blocks_are_frames}});
  } else {
    text += fmt::format("Aut on 60 points: {}\n", r.primitive ? "primitive" : "imprimitive");
    text += fmt::format("  block sizes possible from the pencil at a point: {}; dividing 60: {}\n", r.candidate_sizes,
                        r.dividing_sizes);
    text += fmt::format("stab(0) on P_0: {}\n", r.restriction_imprimitive ? "imprimitive" : "primitive");
    for (const auto& s : r.restriction_systems) {
      text += fmt::format("  {} blocks of {}{}\n", s.blocks.size(), s.block_size(),
                          r.restriction_blocks_are_frames ? " (the partial orthoframes)" : "");
    }
  }
  emit(text, c.out);
  return r.primitive && r.restriction_imprimitive && r.restriction_blocks_are_frames ? kPass : kFail;
}

int cmd_project(const Common& c, std::optional<int> lines, std::optional<int> plane, const std::string& matrix,
                int width, int height, bool labels) {
  ProjectionSpec spec = matrix.empty() ? ProjectionSpec::standard() : ProjectionSpec::parse_matrix(matrix);
  spec.width = width;
  spec.height = height;
  const Matroid m(RootSystem::h4());
  const SvgFigure fig = render_svg(m, spec, ProjectionOptions{lines, plane, labels});
  emit(fig.svg, c.out);
  std::cerr << fmt::format("{} points, {} segments, {} highlighted\n", fig.points, fig.segments, fig.highlighted);
  return kPass;
}

int cmd_export(const Common& c, const std::string& what) {
  World w;
  Json doc;
  if (what == "roots") {
    const auto n = w.m.size();
    doc = with_manifest("roots", roots_json(w.m.roots()), {{"points", "60", std::to_string(n), n == 60}});
  } else if (what == "flats") {
    const auto counts = w.m.flat_counts();
    std::vector<ManifestCheck> checks;
    for (const auto& [cls, want] : reference_flat_counts()) {
      if (cls == FlatClass::Point) continue;
      const int got = counts.count(cls) ? counts.at(cls) : 0;
      checks.push_back({std::string(tag(cls)), std::to_string(want), std::to_string(got), got == want});
    }
    const auto nf = static_cast<int>(w.frames.size());
    checks.push_back({"orthoframes", "75", std::to_string(nf), nf == kReferenceOrthoframes});
    doc = with_manifest("flats", flats_json(w.m, w.frames), checks);
  } else if (what == "orthoframes") {
    const auto nf = static_cast<int>(w.frames.size());
    doc = with_manifest("orthoframes", orthoframes_json(w.frames),
                        {{"orthoframes", "75", std::to_string(nf), nf == kReferenceOrthoframes}});
  } else if (what == "group") {
    const BasisTable bases = BasisTable::compute(w.m, c.jobs);
    const AutGroup aut = aut_group(w.m, bases);
    const PermGroup geo = geometric_group(w.m.roots());
    const NongeometricReport ng = nongeometric_witness(w.m, w.frames, aut.group, geo);
    doc = with_manifest("group", group_json(aut, geo, ng.witness),
                        {{"order", "14400", std::to_string(aut.group.order()), aut.group.order() == 14400},
                         {"geometric_order", "7200", std::to_string(geo.order()), geo.order() == 7200},
                         {"generators_certified", "true", "true", true}});
  } else {
    throw CLI::ValidationError("what", "expected roots, flats, orthoframes or group");
  }
  emit(dump_compact_arrays(doc), c.out);
  return doc["manifest"]["all_pass"].get<bool>() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on the rank-4 matroid of the H4 root system"};
  app.require_subcommand(1);
  Common common;

  auto add_common = [&](CLI::App* sub, bool with_format) {
    if (with_format) {
      sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    }
    sub->add_option("--out", common.out, "Write output to this file instead of stdout");
    sub->add_option("--jobs", common.jobs, "Worker threads for basis counting")->check(CLI::Range(1, 256));
  };

  auto* census = app.add_subcommand("census", "Flat counts and incidence table");
  add_common(census, true);

  std::uint64_t seed = 60;
  std::uint64_t cases = 10000;
  bool timing = false;
  auto* verify = app.add_subcommand("verify-all", "Check every claim and report pass/fail");
  add_common(verify, true);
  verify->add_option("--seed", seed, "Seed for the randomized property suites");
  verify->add_option("--cases", cases, "Cases per property suite")->check(CLI::Range(1, 100000000));
  verify->add_flag("--timing", timing, "Include elapsed times in the JSON report");

  auto* frames = app.add_subcommand("orthoframes", "List the orthoframes");
  add_common(frames, true);

  auto* bases = app.add_subcommand("bases", "Count bases among all 4-subsets");
  add_common(bases, true);

  auto* aut = app.add_subcommand("aut", "Automorphism group and its geometric subgroup");
  add_common(aut, true);
  aut->add_option("--export", common.out, "Write generators and order as JSON");

  int stab_id = 0;
  auto* stab = app.add_subcommand("stab", "Structure of a point stabilizer");
  add_common(stab, true);
  stab->add_option("id", stab_id, "Point id")->required()->check(CLI::Range(0, 59));

  auto* prim = app.add_subcommand("primitivity", "Block systems of Aut and of a restricted stabilizer");
  add_common(prim, true);

  std::optional<int> lines;
  std::optional<int> plane;
  std::string matrix;
  int width = 800;
  int height = 800;
  bool no_labels = false;
  auto* project = app.add_subcommand("project", "SVG of the points projected onto x1 = 1");
  add_common(project, false);
  project->add_option("--lines", lines, "Draw the lines of this size")->check(CLI::IsMember({2, 3, 5}));
  project->add_option("--plane", plane, "Highlight the orthoplane P_x of this point")->check(CLI::Range(0, 59));
  project->add_option("--matrix", matrix, "Change of basis: 16 comma-separated entries (a+b*t or a rational), row-major");
  project->add_option("--width", width, "Image width")->check(CLI::Range(100, 10000));
  project->add_option("--height", height, "Image height")->check(CLI::Range(100, 10000));
  project->add_flag("--no-labels", no_labels, "Omit point labels");

  std::string what;
  auto* exp = app.add_subcommand("export", "Export data as JSON with a manifest");
  add_common(exp, false);
  exp->add_option("what", what, "roots, flats, orthoframes or group")
      ->required()
      ->check(CLI::IsMember({"roots", "flats", "orthoframes", "group"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*census) return cmd_census(common);
    if (*verify) return cmd_verify(common, seed, cases, timing);
    if (*frames) return cmd_orthoframes(common);
    if (*bases) return cmd_bases(common);
    if (*aut) return cmd_aut(common);
    if (*stab) return cmd_stab(common, stab_id);
    if (*prim) return cmd_primitivity(common);
    if (*project) return cmd_project(common, lines, plane, matrix, width, height, !no_labels);
    if (*exp) return cmd_export(common, what);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ProjectionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
