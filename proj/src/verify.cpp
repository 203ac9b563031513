#include "h4/verify.hpp"

#include <chrono>
#include <exception>
#include <functional>
#include <optional>
#include <set>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "h4/autos.hpp"
#include "h4/census_report.hpp"
#include "h4/duality.hpp"
#include "h4/export.hpp"
#include "h4/h3_plane.hpp"
#include "h4/properties.hpp"
#include "h4/reconstruct.hpp"
#include "h4/reflections.hpp"

namespace h4 {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// A value computed on first use; a failure is remembered and rethrown.
template <class T>
class Stage {
 public:
  Stage(std::string name, std::map<std::string, double>& times, std::function<T()> make)
      : name_(std::move(name)), times_(times), make_(std::move(make)) {}

  const T& get() {
    if (!value_ && !error_) {
      const auto t0 = Clock::now();
      try {
        value_.emplace(make_());
      } catch (...) {
        error_ = std::current_exception();
      }
      times_[name_] = ms_since(t0);
    }
    if (error_) std::rethrow_exception(error_);
    return *value_;
  }

 private:
  std::string name_;
  std::map<std::string, double>& times_;
  std::function<T()> make_;
  std::optional<T> value_;
  std::exception_ptr error_;
};

GoldenNumber t() { return GoldenNumber::tau(); }
GoldenNumber t2() { return GoldenNumber(1, 1); }

}  // namespace

bool VerificationReport::all_pass() const { return !claims.empty() && failures() == 0; }

int VerificationReport::failures() const {
  int n = 0;
  for (const auto& c : claims) n += !c.pass;
  return n;
}

std::string VerificationReport::to_json(bool with_timing) const {
  Json list = Json::array();
  for (const auto& c : claims) {
    Json j{{"id", c.id},           {"criterion", c.criterion}, {"anchor", c.anchor},
           {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}};
    if (with_timing) j["elapsed_ms"] = c.elapsed_ms;
    list.push_back(std::move(j));
  }
  Json out{{"artifact", kArtifactName}, {"version", kArtifactVersion}, {"seed", seed},
           {"claims", list},            {"passed", static_cast<int>(claims.size()) - failures()},
           {"failed", failures()},      {"all_pass", all_pass()}};
  if (with_timing) out["stage_ms"] = stage_ms;
  return out.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
  std::string out;
  for (const auto& c : claims) {
    out += fmt::format("{} [{:>2}] {:<32} {}\n", c.pass ? "PASS" : "FAIL", c.criterion, c.id, c.computed);
    if (!c.pass) out += fmt::format("            expected: {}\n", c.expected);
  }
  out += fmt::format("{} of {} claims passed\n", static_cast<int>(claims.size()) - failures(), claims.size());
  return out;
}

VerificationReport run_verify_all(const std::vector<Vec4>& columns, const VerifyOptions& options) {
  VerificationReport report;
  report.seed = options.seed;
  auto& times = report.stage_ms;

  Stage<RootSystem> roots("roots", times, [&] { return RootSystem(columns); });
  Stage<Matroid> matroid("matroid", times, [&] { return Matroid(roots.get()); });
  Stage<BasisTable> bases("bases", times, [&] { return BasisTable::compute(matroid.get(), options.jobs); });
  Stage<std::vector<Orthoframe>> frames("orthoframes", times, [&] { return enumerate_orthoframes(matroid.get()); });
  Stage<AutGroup> aut("aut_search", times, [&] { return aut_group(matroid.get(), bases.get()); });
  Stage<PermGroup> geo("geometric_group", times, [&] { return geometric_group(roots.get()); });

  auto run = [&](std::string id, int criterion, std::string anchor, std::string expected,
                 const std::function<std::string()>& compute) {
    Claim c{std::move(id), criterion, std::move(anchor), std::move(expected), {}, false, 0};
    const auto t0 = Clock::now();
    try {
      c.computed = compute();
      c.pass = c.computed == c.expected;
    } catch (const std::exception& e) {
      c.computed = std::string("error: ") + e.what();
    }
    c.elapsed_ms = ms_since(t0);
    report.claims.push_back(std::move(c));
  };

  // 1
  run("ground_set", 1, "60 pairwise non-parallel points", "60 points, 0 parallel pairs", [&] {
    const Matroid& m = matroid.get();
    int parallel = 0;
    for (PointId a = 0; a < m.size(); ++a) {
      for (PointId b = a + 1; b < m.size(); ++b) parallel += m.rank(bit(a) | bit(b)) != 2;
    }
    return fmt::format("{} points, {} parallel pairs", m.size(), parallel);
  });

  // 2
  run("lines.census", 2, "lines by size 2/3/5", "450/200/72", [&] {
    const auto c = matroid.get().flat_counts();
    return fmt::format("{}/{}/{}", c.at(FlatClass::Line2), c.at(FlatClass::Line3), c.at(FlatClass::Line5));
  });
  run("lines.pair_cover", 2, "every pair of points on exactly one line", "1770 pairs, each covered once", [&] {
    const Matroid& m = matroid.get();
    std::vector<int> covered(static_cast<std::size_t>(m.size() * m.size()), 0);
    for (const Flat& l : m.lines()) {
      for (int a : l.ids()) {
        for (int b : l.ids()) {
          if (a < b) ++covered[static_cast<std::size_t>(a * m.size() + b)];
        }
      }
    }
    int pairs = 0;
    int once = 0;
    for (int a = 0; a < m.size(); ++a) {
      for (int b = a + 1; b < m.size(); ++b) {
        ++pairs;
        once += covered[static_cast<std::size_t>(a * m.size() + b)] == 1;
      }
    }
    return once == pairs ? fmt::format("{} pairs, each covered once", pairs)
                         : fmt::format("{} pairs, {} covered once", pairs, once);
  });

  // 3
  run("planes.census", 3, "planes Pi3/Pi5/Pi6/Pi15 and no other type", "600/360/300/60, 0 other", [&] {
    const Matroid& m = matroid.get();
    const auto c = m.flat_counts();
    int other = 0;
    for (const Flat& p : m.planes()) {
      other += std::find(std::begin(kPlaneClasses), std::end(kPlaneClasses), p.cls) == std::end(kPlaneClasses);
    }
    return fmt::format("{}/{}/{}/{}, {} other", c.at(FlatClass::Pi3), c.at(FlatClass::Pi5), c.at(FlatClass::Pi6),
                       c.at(FlatClass::Pi15), other);
  });

  // 4
  run("incidence.table", 4, "flat incidence counts, uniform over every flat", "0 mismatches", [&] {
    const auto bad = census_mismatches(compute_census(matroid.get()));
    return bad.empty() ? std::string("0 mismatches") : fmt::format("{} mismatches: {}", bad.size(), bad.front());
  });
  run("incidence.double_counting", 4, "incidences counted from both sides agree", "28 of 28 cells agree", [&] {
    const Matroid& m = matroid.get();
    const IncidenceTable table = incidence_table(m);
    auto lower_flats = [&](FlatClass c) {
      std::vector<PointSet> out;
      if (c == FlatClass::Point) {
        for (int i = 0; i < m.size(); ++i) out.push_back(bit(i));
      } else {
        for (const Flat& f : m.flats(c)) out.push_back(f.points);
      }
      return out;
    };
    int cells = 0;
    int agree = 0;
    for (FlatClass row : kIncidenceRows) {
      const auto lows = lower_flats(row);
      for (FlatClass col : kIncidenceColumns) {
        long from_uppers = 0;
        for (const Flat& u : m.flats(col)) {
          for (PointSet l : lows) from_uppers += is_subset(l, u.points);
        }
        const auto& cell = table.at(row, col);
        ++cells;
        agree += cell.uniform() && static_cast<long>(lows.size()) * cell.min == from_uppers;
      }
    }
    return fmt::format("{} of {} cells agree", agree, cells);
  });

  // 5
  run("covering.points", 5, "covers of a point partition the other 59", "60 of 60 partitions, 59 = 15+20+24", [&] {
    const Matroid& m = matroid.get();
    int ok = 0;
    for (PointId x = 0; x < m.size(); ++x) {
      const auto r = check_flat_covering(m, m.closure(bit(x)));
      ok += r.is_partition() && r.residual_points == 59 && r.covers.at(FlatClass::Line2) == 15 &&
            r.covers.at(FlatClass::Line3) == 10 && r.covers.at(FlatClass::Line5) == 6;
    }
    return fmt::format("{} of {} partitions, 59 = 15+20+24", ok, m.size());
  });
  run("covering.lines", 5, "covers of a line partition the rest", "722 of 722 partitions, residues 58/57/55", [&] {
    const Matroid& m = matroid.get();
    int ok = 0;
    std::set<int> residues[3];
    for (const Flat& l : m.lines()) {
      const auto r = check_flat_covering(m, l);
      ok += r.is_partition();
      residues[l.cls == FlatClass::Line2 ? 0 : l.cls == FlatClass::Line3 ? 1 : 2].insert(r.residual_points);
    }
    auto one = [](const std::set<int>& s) { return s.size() == 1 ? std::to_string(*s.begin()) : fmt::format("{}", s); };
    return fmt::format("{} of {} partitions, residues {}/{}/{}", ok, m.lines().size(), one(residues[0]),
                       one(residues[1]), one(residues[2]));
  });

  // 6
  run("pi15.intersections", 6, "every two Pi15 meet in a line; meet profile by line size 5/3/2",
      "1770 of 1770 modular, profile (24, 20, 15), symmetric", [&] {
        const auto r = pi15_pairwise_intersections(matroid.get());
        std::string profile = fmt::format("{}", r.profiles);
        if (r.profiles.size() == 1) profile = fmt::format("({}, {}, {})", r.profiles[0][0], r.profiles[0][1], r.profiles[0][2]);
        return fmt::format("{} of {} modular, profile {}, {}", r.modular_pairs, r.pairs, profile,
                           r.symmetric ? "symmetric" : "asymmetric");
      });

  // 7
  run("orthoframes.count", 7, "75 orthoframes; 5 through each point; 1 through each 2-pt line",
      "75 frames, 5 per point, 1 per 2-pt line", [&] {
        const Matroid& m = matroid.get();
        const auto& fs = frames.get();
        std::set<int> per_point;
        for (PointId x = 0; x < m.size(); ++x) {
          per_point.insert(static_cast<int>(
              std::count_if(fs.begin(), fs.end(), [&](const Orthoframe& f) { return contains(f.set(), x); })));
        }
        std::set<int> per_line;
        for (const Flat& l : m.flats(FlatClass::Line2)) {
          per_line.insert(static_cast<int>(
              std::count_if(fs.begin(), fs.end(), [&](const Orthoframe& f) { return is_subset(l.points, f.set()); })));
        }
        auto one = [](const std::set<int>& s) { return s.size() == 1 ? std::to_string(*s.begin()) : fmt::format("{}", s); };
        return fmt::format("{} frames, {} per point, {} per 2-pt line", fs.size(), one(per_point), one(per_line));
      });
  run("orthoframes.characterizations", 7, "frame <=> pairwise orthogonal <=> basis of 2-pt lines",
      "487635 of 487635 subsets agree", [&] {
        const auto r = compare_orthoframe_characterizations(matroid.get(), bases.get(), frames.get());
        return fmt::format("{} of {} subsets agree", r.agreeing, r.subsets);
      });

  // 8
  run("orthoplanes.bijection", 8, "union of frames through x equals the points orthogonal to x; x <-> P_x bijective",
      "60 of 60 agree, bijective, orthopoint round trip, symmetric", [&] {
        const Matroid& m = matroid.get();
        const auto& fs = frames.get();
        int agree = 0;
        std::set<PointSet> planes;
        bool round_trip = true;
        bool symmetric = true;
        std::vector<PointSet> p(static_cast<std::size_t>(m.size()));
        for (PointId x = 0; x < m.size(); ++x) {
          p[static_cast<std::size_t>(x)] = orthoplane(m, fs, x).points;  // throws on disagreement
          agree += p[static_cast<std::size_t>(x)] == orthogonal_set(m.roots(), x);
          planes.insert(p[static_cast<std::size_t>(x)]);
          round_trip &= orthopoint(fs, p[static_cast<std::size_t>(x)]) == x;
        }
        for (PointId x = 0; x < m.size(); ++x) {
          for (PointId y = 0; y < m.size(); ++y) {
            symmetric &= contains(p[static_cast<std::size_t>(y)], x) == contains(p[static_cast<std::size_t>(x)], y);
          }
        }
        std::set<PointSet> pi15;
        for (const Flat& f : m.flats(FlatClass::Pi15)) pi15.insert(f.points);
        return fmt::format("{} of {} agree, {}, {}, {}", agree, m.size(),
                           planes == pi15 ? "bijective" : "not bijective",
                           round_trip ? "orthopoint round trip" : "round trip fails",
                           symmetric ? "symmetric" : "asymmetric");
      });
  run("orthoplanes.example", 8, "P_z for z = [t^2,0,t,-1] is the listed 15 columns", "15 listed columns, equal", [&] {
    const RootSystem& rs = roots.get();
    const Matroid& m = matroid.get();
    const GoldenNumber T = t();
    const GoldenNumber T2 = t2();
    const std::vector<Vec4> listed{
        {0, 1, 0, 0},      {1, 1, -1, 1},     {1, -1, -1, 1},    {0, T2, 1, T},     {0, T2, -1, -T},
        {0, 1, T, T2},     {0, 1, -T, -T2},   {T, 0, -1, T2},    {1, 0, -T2, -T},   {1, T, 0, T2},
        {1, -T, 0, T2},    {T, 1, -T2, 0},    {T, -1, -T2, 0},   {1, T2, -T, 0},    {1, -T2, -T, 0}};
    PointSet want = 0;
    for (const Vec4& v : listed) {
      const auto id = rs.lookup(v);
      if (!id) return "column " + to_string(v) + " is not a point";
      want |= bit(*id);
    }
    const auto z = rs.lookup({T2, 0, T, -1});
    if (!z) return std::string("z is not a point");
    const PointSet pz = orthoplane(m, frames.get(), *z).points;
    return fmt::format("{} listed columns, {}", count(want), pz == want ? "equal" : "different");
  });

  // 9
  run("bases.count", 9, "number of bases among all 4-subsets", "398475 of 487635", [&] {
    const BasisTable& b = bases.get();
    return fmt::format("{} of {}", b.count(), b.total());
  });

  // 10
  run("reconstruction", 10, "orthoframes alone determine every flat", "7 of 7 classes equal, 0 anomalies", [&] {
    const Reconstruction r = reconstruct_from_orthoframes(frames.get());
    const FlatLists oracle = flat_lists(matroid.get());
    int equal = 0;
    for (const auto& [cls, sets] : oracle) {
      const auto it = r.flats.find(cls);
      equal += it != r.flats.end() && it->second == sets;
    }
    return fmt::format("{} of {} classes equal, {} anomalies", equal, oracle.size(), r.anomalies.size());
  });

  // 11
  run("pi15.h3_census", 11, "each Pi15 has 15 points, 15/10/6 lines, 5 partial frames", "60 of 60 match", [&] {
    const Matroid& m = matroid.get();
    const auto planes = m.flats(FlatClass::Pi15);
    int ok = 0;
    for (const Flat& p : planes) ok += pi15_as_h3(m, p).matches_h3();
    return fmt::format("{} of {} match", ok, planes.size());
  });

  // 12
  run("groups.geometric", 12, "reflection group order", "7200", [&] { return std::to_string(geo.get().order()); });
  run("groups.aut", 12, "automorphism group order, geometric subgroup of index 2", "14400, index 2", [&] {
    const PermGroup& a = aut.get().group;
    const PermGroup& g = geo.get();
    bool sub = true;
    for (const Perm& p : g.generators()) sub &= a.contains(p);
    if (!sub) return fmt::format("{}, geometric group not contained", a.order());
    return fmt::format("{}, index {}", a.order(), a.order() / g.order());
  });

  // 13
  run("groups.certified", 13, "every generator maps bases to bases; row swap (13)(24) is an automorphism",
      "all generators certified, row swap in group", [&] {
        const AutGroup& a = aut.get();  // construction throws if a generator fails
        int ok = 0;
        for (const Perm& g : a.generators) ok += certify_basis_preserving(g, bases.get());
        const Perm swap = coordinate_perm(roots.get(), {2, 3, 0, 1});
        const bool in = a.group.contains(swap) && certify_basis_preserving(swap, bases.get());
        return fmt::format("{} generators certified, row swap {}",
                           ok == static_cast<int>(a.generators.size()) ? std::string("all") : std::to_string(ok),
                           in ? "in group" : "not in group");
      });

  // 14
  run("stabilizers.all_points", 14,
      "|stab(x)| = 240, kernel on P_x is {1, r_x}, 120 frame arrangements, stab(x) = stab(P_x)", "60 of 60 points", [&] {
        const Matroid& m = matroid.get();
        const PermGroup& a = aut.get().group;
        int ok = 0;
        for (PointId x = 0; x < m.size(); ++x) {
          const auto r = stabilizer_report(m, frames.get(), a, x, false);
          ok += r.order == 240 && r.kernel_is_reflection && r.restriction_image == 120 && r.frame_image == 120 &&
                r.reflection_central && r.equals_plane_stabilizer(a.order());
        }
        return fmt::format("{} of {} points", ok, m.size());
      });
  run("stabilizers.structure", 14, "stab(0) is isomorphic to S5 x Z2", "isomorphic", [&] {
    const auto r = stabilizer_report(matroid.get(), frames.get(), aut.get().group, 0, true);
    return std::string(r.isomorphic_s5_z2.value_or(false) ? "isomorphic" : "not isomorphic");
  });

  // 15
  run("transitivity", 15, "orbit counts on flat classes, frames, meeting line pairs",
      "1 orbit on each of 8 classes; meeting 3-pt line pairs 2 (pi6 1800, pi15 900); meeting 5-pt line pairs 1", [&] {
        const auto r = transitivity_report(matroid.get(), frames.get(), aut.get().group);
        int single = 0;
        for (const char* k : {"points", "line2", "line3", "line5", "pi3", "pi5", "pi6", "pi15", "orthoframes"}) {
          single += r.orbits.at(k) == 1;
        }
        std::string split;
        for (const auto& [cls, size] : r.line3_pair_orbits) split += fmt::format("{}{} {}", split.empty() ? "" : ", ", tag(cls), size);
        return fmt::format("1 orbit on each of {} classes; meeting 3-pt line pairs {} ({}); meeting 5-pt line pairs {}",
                           single - 1, r.orbits.at("meeting_line3_pairs"), split, r.orbits.at("meeting_line5_pairs"));
      });

  // 16
  run("primitivity", 16, "Aut is primitive on points; block sizes from pencils", "primitive; candidate sizes [1, 13, 21, 25, 33, 45], dividing 60: [1]", [&] {
    const auto r = primitivity_check(matroid.get(), frames.get(), aut.get().group);
    return fmt::format("{}; candidate sizes {}, dividing 60: {}", r.primitive ? "primitive" : "imprimitive",
                       r.candidate_sizes, r.dividing_sizes);
  });
  run("primitivity.restriction", 16, "stab(0) on P_0 is imprimitive with the partial frames as blocks",
      "imprimitive, 5 blocks of 3 = partial frames", [&] {
        const auto r = primitivity_check(matroid.get(), frames.get(), aut.get().group);
        std::string shape;
        for (const auto& s : r.restriction_systems) {
          shape += fmt::format("{}{} blocks of {}", shape.empty() ? "" : "; ", s.blocks.size(), s.block_size());
        }
        return fmt::format("{}, {}{}", r.restriction_imprimitive ? "imprimitive" : "primitive", shape,
                           r.restriction_blocks_are_frames ? " = partial frames" : "");
      });

  // 17
  run("reflections.fixed_points", 17, "each reflection is an involution fixing x and P_x, 22 transpositions",
      "60 of 60 reflections", [&] {
        const RootSystem& rs = roots.get();
        int ok = 0;
        for (PointId x = 0; x < static_cast<PointId>(rs.size()); ++x) {
          const Perm r = reflection_perm(rs, x);
          PointSet fixed = 0;
          for (PointId p = 0; p < static_cast<PointId>(rs.size()); ++p) {
            if (r(p) == p) fixed |= bit(p);
          }
          ok += compose(r, r).is_identity() && fixed == (orthogonal_set(rs, x) | bit(x)) && r.fixed_points() == 16;
        }
        return fmt::format("{} of {} reflections", ok, rs.size());
      });
  run("reflections.example", 17, "reflections in x = [1,-1,1,-1] and y = [1,-1,-1,1] on a, b, c, d",
      "x: a->d' b->c' c->b' d->a'; y: a->c' b->d' c->a' d->b'", [&] {
        const RootSystem& rs = roots.get();
        auto id = [&](const Vec4& v) {
          const auto p = rs.lookup(v);
          if (!p) throw ConsistencyError(to_string(v) + " is not a point");
          return *p;
        };
        const std::vector<std::pair<std::string, PointId>> named{
            {"a", id({1, 0, 0, 0})},   {"b", id({0, 1, 0, 0})},   {"c", id({1, -1, 1, 1})},  {"d", id({1, -1, -1, -1})},
            {"a'", id({0, 0, 1, 0})},  {"b'", id({0, 0, 0, 1})},  {"c'", id({1, 1, 1, -1})}, {"d'", id({1, 1, -1, 1})}};
        auto name = [&](PointId p) {
          for (const auto& [n, q] : named) {
            if (q == p) return n;
          }
          return std::to_string(p);
        };
        auto describe = [&](const Vec4& root) {
          const Perm r = reflection_perm(rs, id(root));
          std::string s;
          for (std::size_t i = 0; i < 4; ++i) s += fmt::format("{}{}->{}", i ? " " : "", named[i].first, name(r(named[i].second)));
          return s;
        };
        return "x: " + describe({1, -1, 1, -1}) + "; y: " + describe({1, -1, -1, 1});
      });

  // 18
  run("nongeometric", 18, "a non-geometric automorphism acts oddly on the partial frames of a Pi15; parity kernel is the reflection group",
      "witness outside, frame parity -1, all reflections geometric, parity homomorphism, kernel geometric, 2 cosets", [&] {
        const auto r = nongeometric_witness(matroid.get(), frames.get(), aut.get().group, geo.get());
        return fmt::format("witness {}, frame parity {}, {}, {}, {}, {}",
                           r.witness_in_aut && r.witness_outside_geometric ? "outside" : "not outside",
                           r.frame_parity, r.reflections_geometric ? "all reflections geometric" : "non-geometric reflection",
                           r.parity_homomorphism ? "parity homomorphism" : "parity not a homomorphism",
                           r.kernel_is_geometric ? "kernel geometric" : "kernel differs",
                           r.coset_decomposition ? "2 cosets" : "coset mismatch");
      });

  // 19
  run("duality", 19, "point/plane graph: swap x <-> P_x is an automorphism; group orders",
      "120 vertices, 900 edges, bipartite 15-regular connected, symmetric, swap involutive automorphism, "
      "commutes with Aut, side-preserving 14400 = Aut, swap central, total 28800", [&] {
        const auto r = duality_report(matroid.get(), frames.get(), aut.get().group);
        std::string shape = r.bipartite && r.regular && r.connected ? "bipartite 15-regular connected" : "malformed";
        return fmt::format(
            "{} vertices, {} edges, {}, {}, {}, {}, side-preserving {}{}, {}, total {}", r.vertices, r.edges, shape,
            r.adjacency_symmetric ? "symmetric" : "asymmetric",
            r.swap_is_automorphism && r.swap_involution ? "swap involutive automorphism" : "swap not an automorphism",
            r.commutes_with_aut ? "commutes with Aut" : "does not commute", r.side_preserving_order,
            r.side_equals_aut ? " = Aut" : " != Aut", r.swap_central ? "swap central" : "swap not central",
            r.total_order);
      });

  // 20
  run("pencils", 20, "3-pt lines through x, adjacent when spanning a Pi6: 6-regular, connected", "60 of 60 points", [&] {
    const Matroid& m = matroid.get();
    int ok = 0;
    for (PointId x = 0; x < m.size(); ++x) {
      const auto r = pencil_graph(m, x);
      ok += r.six_regular() && r.connected && r.pi6_pairs == 30 && r.pi15_pairs == 15 && r.five_line_pairs_give_pi15s;
    }
    return fmt::format("{} of {} points", ok, m.size());
  });

  // 21
  const std::uint64_t n = options.property_cases;
  const std::string all = fmt::format("{} cases, 0 failures", n);
  auto summary = [](const PropertyResult& r) {
    std::string s = fmt::format("{} cases, {} failures", r.cases, r.failures);
    if (r.failures) s += " (first: " + r.first_failure + ")";
    return s;
  };
  run("properties.golden_field", 21, "field axioms, sign, conjugation, norm", all,
      [&] { return summary(golden_field_properties(options.seed, n)); });
  run("properties.rank", 21, "rank monotone and submodular", all,
      [&] { return summary(rank_properties(matroid.get(), options.seed + 1, n)); });
  run("properties.closure", 21, "closure extensive, idempotent, monotone", all,
      [&] { return summary(closure_properties(matroid.get(), options.seed + 2, n)); });
  run("properties.duality", 21, "P_s(x) = s(P_x) for random automorphisms", all, [&] {
    return summary(duality_commutation_properties(matroid.get(), frames.get(), aut.get().group, options.seed + 3, n));
  });

  return report;
}

}  // namespace h4
