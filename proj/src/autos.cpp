#include "h4/autos.hpp"

#include <set>

#include "h4/aut_search.hpp"
#include "h4/cayley.hpp"
#include "h4/reflections.hpp"

namespace h4 {

bool certify_basis_preserving(const Perm& g, const BasisTable& bases) {
  const int n = bases.points();
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = a + 1; b < n; ++b) {
      for (PointId c = b + 1; c < n; ++c) {
        for (PointId d = c + 1; d < n; ++d) {
          if (!bases.is_basis({a, b, c, d})) continue;
          if (!bases.is_basis({g(a), g(b), g(c), g(d)})) return false;
        }
      }
    }
  }
  return true;
}

AutGroup set_system_group(int n, std::vector<std::vector<PointSet>> families) {
  SetSystemSearch search(n, std::move(families));
  const auto degree = static_cast<std::size_t>(n);
  std::vector<Perm> gens;
  PermGroup current(degree, {});
  auto keep = [&](const Perm& p) {
    if (current.contains(p)) return;
    gens.push_back(p);
    current = PermGroup(degree, gens);
  };

  AutGroup out{PermGroup(degree, {}), {}, 0, 0, 0};
  const std::pair<int, int> fix0{0, 0};
  search.search(std::span(&fix0, 1), [&](const Perm& p) {
    ++out.stabilizer_found;
    keep(p);
    return true;
  });
  for (int t = 0; t < n; ++t) {
    const std::pair<int, int> move0{0, t};
    search.search(std::span(&move0, 1), [&](const Perm& p) {
      ++out.transversal_found;
      keep(p);
      return false;
    });
  }
  out.search_nodes = search.nodes();
  out.generators = gens;
  out.group = std::move(current);
  return out;
}

AutGroup aut_group(const Matroid& m, const BasisTable& bases) {
  std::vector<PointSet> three;
  std::vector<PointSet> five;
  for (const Flat& l : m.lines()) {
    if (l.cls == FlatClass::Line3) three.push_back(l.points);
    if (l.cls == FlatClass::Line5) five.push_back(l.points);
  }
  AutGroup a = set_system_group(m.size(), {three, five});
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    if (!certify_basis_preserving(a.generators[i], bases)) {
      throw ConsistencyError("line-preserving generator " + std::to_string(i) + " does not preserve bases");
    }
  }
  return a;
}

Perm restrict_to(const Perm& g, PointSet plane) {
  const auto ids = members(plane);
  std::vector<int> local(g.degree(), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) local[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
  std::vector<int> images(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const int img = local[static_cast<std::size_t>(g(ids[i]))];
    if (img < 0) throw std::invalid_argument("permutation does not fix the point set");
    images[i] = img;
  }
  return Perm(std::move(images));
}

namespace {

std::vector<PointSet> frames_through(const std::vector<Orthoframe>& frames, PointId x) {
  std::vector<PointSet> out;
  for (const auto& f : frames) {
    if (contains(f.set(), x)) out.push_back(f.set());
  }
  return out;
}

}  // namespace

Perm frame_action(const Perm& g, const std::vector<Orthoframe>& frames, PointId x) {
  const auto through = frames_through(frames, x);
  std::vector<int> images;
  for (PointSet f : through) {
    const auto it = std::find(through.begin(), through.end(), g.apply(f));
    if (it == through.end()) throw std::invalid_argument("permutation does not fix the frames through the point");
    images.push_back(static_cast<int>(it - through.begin()));
  }
  return Perm(std::move(images));
}

StabilizerReport stabilizer_report(const Matroid& m, const std::vector<Orthoframe>& frames, const PermGroup& aut,
                                   PointId x, bool check_isomorphism) {
  StabilizerReport r;
  r.x = x;
  const PermGroup stab = aut.point_stabilizer(x);
  r.order = stab.order();

  const Perm refl = reflection_perm(m.roots(), x);
  r.reflection_central = stab.contains(refl);
  for (const Perm& g : stab.generators()) {
    if (compose(g, refl) != compose(refl, g)) r.reflection_central = false;
  }

  const PointSet px = orthoplane(m, frames, x).points;
  std::set<Perm> restrictions;
  std::set<Perm> frame_actions;
  std::vector<Perm> kernel;
  std::vector<Perm> elements;
  r.fixes_orthoplane = true;
  stab.for_each_element([&](const Perm& g) {
    if (g.apply(px) != px) {
      r.fixes_orthoplane = false;
      return;
    }
    const Perm res = restrict_to(g, px);
    if (res.is_identity()) kernel.push_back(g);
    restrictions.insert(res);
    frame_actions.insert(frame_action(g, frames, x));
    if (check_isomorphism) elements.push_back(g);
  });
  r.restriction_image = restrictions.size();
  r.frame_image = frame_actions.size();
  r.kernel_is_reflection = kernel.size() == 2 && std::find(kernel.begin(), kernel.end(), refl) != kernel.end() &&
                           std::any_of(kernel.begin(), kernel.end(), [](const Perm& g) { return g.is_identity(); });

  const auto orbit = orbit_of<PointSet>(aut.generators(), px, [](const Perm& g, PointSet s) { return g.apply(s); },
                                        aut.degree());
  r.orthoplane_orbit = orbit.elements.size();

  if (check_isomorphism && r.fixes_orthoplane) {
    r.isomorphic_s5_z2 = isomorphic(cayley_table(elements), direct_product(symmetric_group_table(5), cyclic_group_table(2)));
  }
  return r;
}

TransitivityReport transitivity_report(const Matroid& m, const std::vector<Orthoframe>& frames,
                                       const PermGroup& aut) {
  TransitivityReport r;
  const auto gens = std::span<const Perm>(aut.generators());
  auto on_sets = [](const Perm& g, PointSet s) { return g.apply(s); };

  std::vector<int> points(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) points[static_cast<std::size_t>(i)] = i;
  r.orbits["points"] = orbits_on(gens, points, [](const Perm& g, int i) { return g(i); }).size();
  for (auto c : {FlatClass::Line2, FlatClass::Line3, FlatClass::Line5, FlatClass::Pi3, FlatClass::Pi5,
                 FlatClass::Pi6, FlatClass::Pi15}) {
    std::vector<PointSet> items;
    for (const Flat& f : m.flats(c)) items.push_back(f.points);
    r.orbits[std::string(tag(c))] = orbits_on(gens, items, on_sets).size();
  }
  std::vector<PointSet> frame_sets;
  for (const auto& f : frames) frame_sets.push_back(f.set());
  r.orbits["orthoframes"] = orbits_on(gens, frame_sets, on_sets).size();

  using Pair = std::pair<PointSet, PointSet>;
  auto on_pairs = [](const Perm& g, const Pair& p) {
    const PointSet a = g.apply(p.first);
    const PointSet b = g.apply(p.second);
    return a < b ? Pair{a, b} : Pair{b, a};
  };
  for (FlatClass c : {FlatClass::Line3, FlatClass::Line5}) {
    const auto lines = m.flats(c);
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        if (count(lines[i].points & lines[j].points) != 1) continue;
        const PointSet a = lines[i].points;
        const PointSet b = lines[j].points;
        pairs.push_back(a < b ? Pair{a, b} : Pair{b, a});
      }
    }
    const auto orbits = orbits_on(gens, pairs, on_pairs);
    r.orbits[c == FlatClass::Line3 ? "meeting_line3_pairs" : "meeting_line5_pairs"] = orbits.size();
    if (c == FlatClass::Line3) {
      for (const auto& orb : orbits) {
        const Pair& rep = pairs[orb.front()];
        r.line3_pair_orbits.emplace_back(m.closure(rep.first | rep.second).cls, orb.size());
      }
    }
  }
  return r;
}

PrimitivityCheck primitivity_check(const Matroid& m, const std::vector<Orthoframe>& frames, const PermGroup& aut) {
  PrimitivityCheck r;
  r.primitive = minimal_blocks(aut).primitive;

  int n3 = 0;
  int n5 = 0;
  for (const Flat& l : m.lines()) {
    if (!contains(l.points, 0)) continue;
    n3 += l.cls == FlatClass::Line3;
    n5 += l.cls == FlatClass::Line5;
  }
  std::set<int> sizes;
  for (int a : {0, 2 * n3}) {
    for (int b : {0, 2 * n5, 4 * n5}) sizes.insert(1 + a + b);
  }
  r.candidate_sizes.assign(sizes.begin(), sizes.end());
  for (int s : r.candidate_sizes) {
    if (m.size() % s == 0) r.dividing_sizes.push_back(s);
  }

  const PointSet p0 = orthoplane(m, frames, 0).points;
  std::vector<Perm> local;
  const PermGroup stab = aut.point_stabilizer(0);
  for (const Perm& g : stab.generators()) local.push_back(restrict_to(g, p0));
  const PermGroup restricted(static_cast<std::size_t>(count(p0)), local);
  const PrimitivityReport pr = minimal_blocks(restricted);
  r.restriction_imprimitive = !pr.primitive;
  r.restriction_systems = pr.nontrivial;

  const auto ids = members(p0);
  BlockSystem frames_partition;
  for (const auto& f : frames) {
    if (!contains(f.set(), 0)) continue;
    std::vector<int> blk;
    for (int id : f.points) {
      if (id == 0) continue;
      blk.push_back(static_cast<int>(std::find(ids.begin(), ids.end(), id) - ids.begin()));
    }
    std::sort(blk.begin(), blk.end());
    frames_partition.blocks.push_back(blk);
  }
  std::sort(frames_partition.blocks.begin(), frames_partition.blocks.end());
  r.restriction_blocks_are_frames =
      std::find(pr.nontrivial.begin(), pr.nontrivial.end(), frames_partition) != pr.nontrivial.end();
  return r;
}

NongeometricReport nongeometric_witness(const Matroid& m, const std::vector<Orthoframe>& frames,
                                        const PermGroup& aut, const PermGroup& geometric) {
  NongeometricReport r;
  const std::size_t n = aut.degree();
  const auto transversal =
      orbit_of<int>(geometric.generators(), 0, [](const Perm& g, int i) { return g(i); }, n);
  std::vector<Perm> back(n);
  for (std::size_t k = 0; k < transversal.elements.size(); ++k) {
    back[static_cast<std::size_t>(transversal.elements[k])] = transversal.witnesses[k].inverse();
  }
  auto parity = [&](const Perm& s) {
    const Perm& b = back[static_cast<std::size_t>(s(0))];
    if (b.degree() == 0) throw std::logic_error("geometric group is not transitive");
    return frame_action(compose(b, s), frames, 0).parity();
  };

  bool found = false;
  aut.point_stabilizer(0).for_each_element([&](const Perm& g) {
    if (!found && !geometric.contains(g)) {
      r.witness = g;
      found = true;
    }
  });
  if (!found) throw ConsistencyError("every automorphism fixing point 0 is geometric");
  r.plane_point = 0;
  r.witness_in_aut = aut.contains(r.witness);
  r.witness_outside_geometric = !geometric.contains(r.witness);
  r.frame_parity = frame_action(r.witness, frames, 0).parity();

  r.reflections_geometric = true;
  for (PointId x = 0; x < m.size(); ++x) r.reflections_geometric &= geometric.contains(reflection_perm(m.roots(), x));

  std::vector<int> gen_parity;
  for (const Perm& g : aut.generators()) gen_parity.push_back(parity(g));
  r.parity_homomorphism = true;
  r.kernel_is_geometric = true;
  r.coset_decomposition = 2 * geometric.order() == aut.order();
  const Perm witness_inv = r.witness.inverse();
  aut.for_each_element([&](const Perm& s) {
    const int p = parity(s);
    const bool geo = geometric.contains(s);
    if ((p == 1) != geo) r.kernel_is_geometric = false;
    if (!geo && !geometric.contains(compose(witness_inv, s))) r.coset_decomposition = false;
    for (std::size_t k = 0; k < aut.generators().size(); ++k) {
      if (parity(compose(aut.generators()[k], s)) != gen_parity[k] * p) r.parity_homomorphism = false;
    }
  });
  return r;
}

PencilReport pencil_graph(const Matroid& m, PointId x) {
  PencilReport r;
  r.x = x;
  std::vector<PointSet> l3;
  std::vector<PointSet> l5;
  for (const Flat& l : m.lines()) {
    if (!contains(l.points, x)) continue;
    if (l.cls == FlatClass::Line3) l3.push_back(l.points);
    if (l.cls == FlatClass::Line5) l5.push_back(l.points);
  }
  r.vertices = static_cast<int>(l3.size());
  const auto nv = l3.size();
  std::vector<std::vector<int>> adj(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t j = i + 1; j < nv; ++j) {
      const FlatClass c = m.closure(l3[i] | l3[j]).cls;
      if (c == FlatClass::Pi6) {
        adj[i].push_back(static_cast<int>(j));
        adj[j].push_back(static_cast<int>(i));
        ++r.pi6_pairs;
      } else if (c == FlatClass::Pi15) {
        ++r.pi15_pairs;
      }
    }
  }
  for (const auto& a : adj) r.degrees.push_back(static_cast<int>(a.size()));
  std::vector<bool> seen(nv, false);
  std::vector<int> queue;
  if (nv > 0) {
    queue.push_back(0);
    seen[0] = true;
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (int y : adj[static_cast<std::size_t>(queue[q])]) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        queue.push_back(y);
      }
    }
  }
  r.connected = nv > 0 && queue.size() == nv;

  std::set<PointSet> spanned;
  bool all_pi15 = true;
  for (std::size_t i = 0; i < l5.size(); ++i) {
    for (std::size_t j = i + 1; j < l5.size(); ++j) {
      const Flat f = m.closure(l5[i] | l5[j]);
      all_pi15 &= f.cls == FlatClass::Pi15;
      spanned.insert(f.points);
    }
  }
  std::set<PointSet> through;
  for (const Flat& p : m.planes()) {
    if (p.cls == FlatClass::Pi15 && contains(p.points, x)) through.insert(p.points);
  }
  r.five_line_pairs_give_pi15s = all_pi15 && l5.size() == 6 && spanned == through && spanned.size() == 15;
  return r;
}

}  // namespace h4
