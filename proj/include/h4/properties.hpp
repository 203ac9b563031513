#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "h4/golden.hpp"
#include "h4/orthoframes.hpp"
#include "h4/perm_group.hpp"

namespace h4 {

struct PropertyResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool passed() const { return cases > 0 && failures == 0; }
  void check(bool ok, const std::string& what);
};

/// Random element a + b t with small rational coefficients; about one in
/// eight draws is zero or rational, so edge cases come up often.
GoldenNumber random_golden(std::mt19937_64& rng);

/// Random subset of size in [lo, hi].
PointSet random_subset(std::mt19937_64& rng, int n, int lo, int hi);

/// Field axioms, sign multiplicativity, conjugation and norm.
PropertyResult golden_field_properties(std::uint64_t seed, std::uint64_t cases);

/// Monotonicity and submodularity of rank.
PropertyResult rank_properties(const Matroid& m, std::uint64_t seed, std::uint64_t cases);

/// Closure is extensive, idempotent and monotone.
PropertyResult closure_properties(const Matroid& m, std::uint64_t seed, std::uint64_t cases);

/// P_{s(x)} = s(P_x) for random group elements s and points x.
PropertyResult duality_commutation_properties(const Matroid& m, const std::vector<Orthoframe>& frames,
                                              const PermGroup& aut, std::uint64_t seed, std::uint64_t cases);

}  // namespace h4
