#include "h4/duality.hpp"

#include <algorithm>
#include <stdexcept>

#include "h4/autos.hpp"

namespace h4 {

bool DualityGraph::adjacent(int u, int v) const {
  const auto& row = adjacency[static_cast<std::size_t>(u)];
  return std::binary_search(row.begin(), row.end(), v);
}

DualityGraph duality_graph(const Matroid& m, const std::vector<Orthoframe>& frames) {
  DualityGraph g;
  g.points = m.size();
  g.adjacency.resize(static_cast<std::size_t>(g.vertices()));
  for (PointId x = 0; x < g.points; ++x) g.planes.push_back(orthoplane(m, frames, x).points);
  for (PointId x = 0; x < g.points; ++x) {
    for (PointId y = 0; y < g.points; ++y) {
      if (!contains(g.planes[static_cast<std::size_t>(y)], x)) continue;
      g.adjacency[static_cast<std::size_t>(x)].push_back(g.points + y);
      g.adjacency[static_cast<std::size_t>(g.points + y)].push_back(x);
    }
  }
  for (auto& row : g.adjacency) std::sort(row.begin(), row.end());
  return g;
}

Perm swap_perm(const DualityGraph& g) {
  std::vector<int> images(static_cast<std::size_t>(g.vertices()));
  for (int x = 0; x < g.points; ++x) {
    images[static_cast<std::size_t>(x)] = g.points + x;
    images[static_cast<std::size_t>(g.points + x)] = x;
  }
  return Perm(std::move(images));
}

Perm lift(const Perm& sigma, const DualityGraph& g) {
  std::vector<int> images(static_cast<std::size_t>(g.vertices()));
  for (int x = 0; x < g.points; ++x) {
    images[static_cast<std::size_t>(x)] = sigma(x);
    const PointSet img = sigma.apply(g.planes[static_cast<std::size_t>(x)]);
    const auto it = std::find(g.planes.begin(), g.planes.end(), img);
    if (it == g.planes.end()) throw std::invalid_argument("image of an orthoplane is not an orthoplane");
    images[static_cast<std::size_t>(g.points + x)] = g.points + static_cast<int>(it - g.planes.begin());
  }
  return Perm(std::move(images));
}

bool is_graph_automorphism(const Perm& p, const DualityGraph& g) {
  if (static_cast<int>(p.degree()) != g.vertices()) return false;
  for (int u = 0; u < g.vertices(); ++u) {
    const auto& row = g.adjacency[static_cast<std::size_t>(u)];
    if (g.adjacency[static_cast<std::size_t>(p(u))].size() != row.size()) return false;
    for (int v : row) {
      if (!g.adjacent(p(u), p(v))) return false;
    }
  }
  return true;
}

DualityReport duality_report(const Matroid& m, const std::vector<Orthoframe>& frames, const PermGroup& aut) {
  DualityReport r;
  const DualityGraph g = duality_graph(m, frames);
  const int n = g.points;
  r.vertices = g.vertices();

  r.bipartite = true;
  r.regular = true;
  for (int u = 0; u < g.vertices(); ++u) {
    const auto& row = g.adjacency[static_cast<std::size_t>(u)];
    r.edges += static_cast<int>(row.size());
    r.regular &= row.size() == 15;
    for (int v : row) r.bipartite &= (u < n) != (v < n);
  }
  r.edges /= 2;

  std::vector<bool> seen(static_cast<std::size_t>(g.vertices()), false);
  std::vector<int> queue{0};
  seen[0] = true;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (int v : g.adjacency[static_cast<std::size_t>(queue[q])]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        queue.push_back(v);
      }
    }
  }
  r.connected = static_cast<int>(queue.size()) == g.vertices();

  r.adjacency_symmetric = true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) r.adjacency_symmetric &= g.adjacent(x, n + y) == g.adjacent(y, n + x);
  }

  const Perm swap = swap_perm(g);
  r.swap_is_automorphism = is_graph_automorphism(swap, g);
  r.swap_involution = compose(swap, swap).is_identity();

  r.commutes_with_aut = true;
  for (const Perm& s : aut.generators()) {
    for (int x = 0; x < n; ++x) {
      r.commutes_with_aut &= s.apply(g.planes[static_cast<std::size_t>(x)]) == g.planes[static_cast<std::size_t>(s(x))];
    }
  }

  const AutGroup side = set_system_group(n, {g.planes});
  r.side_preserving_order = side.group.order();
  r.side_equals_aut = r.side_preserving_order == aut.order();
  for (const Perm& s : side.generators) r.side_equals_aut &= aut.contains(s);
  for (const Perm& s : aut.generators()) r.side_equals_aut &= side.group.contains(s);

  std::vector<Perm> lifted;
  r.swap_central = true;
  for (const Perm& s : side.generators) {
    Perm l = lift(s, g);
    r.swap_central &= is_graph_automorphism(l, g) && compose(l, swap) == compose(swap, l);
    lifted.push_back(std::move(l));
  }
  lifted.push_back(swap);
  r.total_order = PermGroup(static_cast<std::size_t>(g.vertices()), lifted).order();
  return r;
}

}  // namespace h4
