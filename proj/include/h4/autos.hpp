#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "h4/bases.hpp"
#include "h4/blocks.hpp"
#include "h4/orthoframes.hpp"
#include "h4/perm_group.hpp"

namespace h4 {

/// Maps every basis to a basis (equivalently, preserves the rank of every
/// 4-subset).
bool certify_basis_preserving(const Perm& g, const BasisTable& bases);

struct AutGroup {
  PermGroup group;
  /// Generators in discovery order: stabilizer of point 0 first, then
  /// coset representatives.
  std::vector<Perm> generators;
  /// Exhaustive count of line-preserving perms fixing point 0.
  std::uint64_t stabilizer_found = 0;
  /// Points t for which some line-preserving perm maps 0 to t.
  int transversal_found = 0;
  std::uint64_t search_nodes = 0;
};

/// Full automorphism group: perms preserving the 3- and 5-point lines,
/// found by backtracking, with every generator certified basis-preserving.
/// Throws ConsistencyError if a generator fails certification.
AutGroup aut_group(const Matroid& m, const BasisTable& bases);

/// Automorphism group of a block system on the point set, built from an
/// exhaustive stabilizer search at point 0 and one coset representative per
/// point of the orbit of 0.
AutGroup set_system_group(int n, std::vector<std::vector<PointSet>> families);

struct StabilizerReport {
  PointId x = 0;
  std::uint64_t order = 0;
  bool reflection_central = false;
  std::uint64_t restriction_image = 0;  // distinct restrictions to P_x
  bool kernel_is_reflection = false;    // kernel of restriction == {id, r_x}
  std::uint64_t frame_image = 0;        // distinct actions on frames through x
  bool fixes_orthoplane = false;        // every element maps P_x to itself
  std::uint64_t orthoplane_orbit = 0;   // |orbit of P_x| under Aut
  std::optional<bool> isomorphic_s5_z2;

  /// stab(x) == stab(P_x): inclusion plus equal index.
  bool equals_plane_stabilizer(std::uint64_t aut_order) const {
    return fixes_orthoplane && orthoplane_orbit * order == aut_order;
  }
};

StabilizerReport stabilizer_report(const Matroid& m, const std::vector<Orthoframe>& frames, const PermGroup& aut,
                                   PointId x, bool check_isomorphism);

/// Orbit counts of Aut on each flat class, orthoframes, and meeting pairs
/// of 3- and 5-point lines.
struct TransitivityReport {
  std::map<std::string, std::size_t> orbits;
  /// For meeting 3-line pairs: per orbit, the class of the plane they span.
  std::vector<std::pair<FlatClass, std::size_t>> line3_pair_orbits;
};

TransitivityReport transitivity_report(const Matroid& m, const std::vector<Orthoframe>& frames,
                                       const PermGroup& aut);

struct PrimitivityCheck {
  bool primitive = false;
  /// Sizes a block through x could have if it avoided P_x, from the
  /// pencil counts; none but 1 divides the number of points.
  std::vector<int> candidate_sizes;
  std::vector<int> dividing_sizes;
  /// Restriction of stab(0) to P_0.
  bool restriction_imprimitive = false;
  std::vector<BlockSystem> restriction_systems;  // on local ids 0..14
  bool restriction_blocks_are_frames = false;
};

PrimitivityCheck primitivity_check(const Matroid& m, const std::vector<Orthoframe>& frames, const PermGroup& aut);

/// Restriction of a group fixing `plane` setwise to the plane's points,
/// relabelled 0..k-1 in increasing id order.
Perm restrict_to(const Perm& g, PointSet plane);

/// Permutation induced on the orthoframes through x (indices into the
/// sorted list of frames containing x).
Perm frame_action(const Perm& g, const std::vector<Orthoframe>& frames, PointId x);

struct NongeometricReport {
  Perm witness;
  bool witness_in_aut = false;
  bool witness_outside_geometric = false;
  PointId plane_point = 0;  // witness fixes P_x for this x
  int frame_parity = 0;     // sign of its action on the five partial frames of P_x
  bool reflections_geometric = false;
  bool parity_homomorphism = false;  // parity(g s) = parity(g) parity(s), g a generator, s any element
  bool kernel_is_geometric = false;  // parity even <=> geometric, on every element
  bool coset_decomposition = false;  // Aut = G u witness G
};

NongeometricReport nongeometric_witness(const Matroid& m, const std::vector<Orthoframe>& frames,
                                        const PermGroup& aut, const PermGroup& geometric);

struct PencilReport {
  PointId x = 0;
  int vertices = 0;
  std::vector<int> degrees;
  bool connected = false;
  int pi6_pairs = 0;
  int pi15_pairs = 0;
  /// The C(6,2) pairs of 5-point lines through x span exactly the 15
  /// distinct Pi15s containing x.
  bool five_line_pairs_give_pi15s = false;

  bool six_regular() const {
    return vertices == 10 && !degrees.empty() &&
           std::all_of(degrees.begin(), degrees.end(), [](int d) { return d == 6; });
  }
};

/// Graph on the 3-point lines through x, adjacent when they span a Pi6.
PencilReport pencil_graph(const Matroid& m, PointId x);

}  // namespace h4
