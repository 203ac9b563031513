#pragma once

#include <functional>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "h4/perm.hpp"

namespace h4 {

/// Backtracking search for the permutations of {0..n-1} that map every
/// block family onto itself.
///
/// Pruning: each pair of points gets a colour (how many blocks of each
/// family contain both); an assignment x -> y is allowed only if colours to
/// all assigned points agree. Candidate sets are bitmasks narrowed on each
/// assignment; singletons are forced before branching. Every leaf is
/// checked against the families in full.
class SetSystemSearch {
 public:
  SetSystemSearch(int n, std::vector<std::vector<PointSet>> families);

  int degree() const { return n_; }

  /// Visits every automorphism consistent with `forced` (pairs x -> y) in
  /// lexicographic order of images; stops once visit returns false.
  void search(std::span<const std::pair<int, int>> forced, const std::function<bool(const Perm&)>& visit);

  bool preserves(const Perm& p) const;

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct State {
    std::vector<int> image;
    std::vector<PointSet> cand;
    PointSet used = 0;
  };

  bool assign(State& s, int x, int y) const;
  bool propagate(State& s) const;
  bool recurse(State& s, const std::function<bool(const Perm&)>& visit);

  int colour(int x, int y) const { return colour_[static_cast<std::size_t>(x * n_ + y)]; }

  int n_;
  std::vector<std::vector<PointSet>> families_;
  std::vector<std::unordered_set<PointSet>> lookup_;
  std::vector<int> colour_;
  std::vector<std::vector<PointSet>> with_colour_;  // [point][colour] -> points y with colour(y, point)
  std::uint64_t nodes_ = 0;
};

}  // namespace h4
