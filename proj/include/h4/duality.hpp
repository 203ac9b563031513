#pragma once

#include <cstdint>
#include <vector>

#include "h4/orthoframes.hpp"
#include "h4/perm_group.hpp"

namespace h4 {

/// Bipartite point/plane incidence graph on 120 vertices: vertex x < 60 is
/// point x, vertex 60 + x is the orthoplane P_x.
struct DualityGraph {
  int points = 0;
  std::vector<PointSet> planes;  // planes[x] = P_x
  std::vector<std::vector<int>> adjacency;

  int vertices() const { return 2 * points; }
  bool adjacent(int u, int v) const;
};

DualityGraph duality_graph(const Matroid& m, const std::vector<Orthoframe>& frames);

/// x <-> P_x.
Perm swap_perm(const DualityGraph& g);

/// Degree-120 perm acting as sigma on points and by sigma(P_x) on planes.
/// Throws std::invalid_argument if some sigma(P_x) is not an orthoplane.
Perm lift(const Perm& sigma, const DualityGraph& g);

bool is_graph_automorphism(const Perm& p, const DualityGraph& g);

struct DualityReport {
  int vertices = 0;
  int edges = 0;
  bool bipartite = false;
  bool regular = false;  // every vertex has degree 15
  bool connected = false;
  bool adjacency_symmetric = false;  // x in P_y <=> y in P_x
  bool swap_is_automorphism = false;
  bool swap_involution = false;
  bool commutes_with_aut = false;  // P_{s(x)} = s(P_x), s an Aut generator
  std::uint64_t side_preserving_order = 0;
  bool side_equals_aut = false;
  bool swap_central = false;
  std::uint64_t total_order = 0;
};

/// The side-preserving group is found by searching point perms that map the
/// family of planes onto itself; each lifts to a unique graph automorphism.
/// Since the graph is connected, every other automorphism swaps the sides
/// and differs from a side-preserving one by the swap.
DualityReport duality_report(const Matroid& m, const std::vector<Orthoframe>& frames, const PermGroup& aut);

}  // namespace h4
