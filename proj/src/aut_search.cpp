#include "h4/aut_search.hpp"

#include <map>
#include <stdexcept>

namespace h4 {

SetSystemSearch::SetSystemSearch(int n, std::vector<std::vector<PointSet>> families)
    : n_(n), families_(std::move(families)) {
  if (n_ < 0 || n_ > 64) throw std::invalid_argument("set-system search supports at most 64 points");
  const auto nn = static_cast<std::size_t>(n_);
  for (const auto& fam : families_) lookup_.emplace_back(fam.begin(), fam.end());

  std::vector<std::vector<int>> counts(nn * nn, std::vector<int>(families_.size(), 0));
  for (std::size_t f = 0; f < families_.size(); ++f) {
    for (PointSet blk : families_[f]) {
      const auto ids = members(blk);
      for (int x : ids) {
        for (int y : ids) ++counts[static_cast<std::size_t>(x * n_ + y)][f];
      }
    }
  }
  std::map<std::vector<int>, int> ids;
  colour_.resize(nn * nn);
  for (std::size_t k = 0; k < nn * nn; ++k) {
    auto [it, fresh] = ids.emplace(counts[k], static_cast<int>(ids.size()));
    colour_[k] = it->second;
  }
  with_colour_.assign(nn, std::vector<PointSet>(ids.size(), 0));
  for (int b = 0; b < n_; ++b) {
    for (int y = 0; y < n_; ++y) with_colour_[static_cast<std::size_t>(b)][static_cast<std::size_t>(colour(y, b))] |= bit(y);
  }
}

bool SetSystemSearch::preserves(const Perm& p) const {
  if (static_cast<int>(p.degree()) != n_) return false;
  for (std::size_t f = 0; f < families_.size(); ++f) {
    for (PointSet blk : families_[f]) {
      if (!lookup_[f].count(p.apply(blk))) return false;
    }
  }
  return true;
}

bool SetSystemSearch::assign(State& s, int x, int y) const {
  if (!contains(s.cand[static_cast<std::size_t>(x)], y) || contains(s.used, y)) return false;
  s.image[static_cast<std::size_t>(x)] = y;
  s.used |= bit(y);
  s.cand[static_cast<std::size_t>(x)] = bit(y);
  for (int u = 0; u < n_; ++u) {
    if (s.image[static_cast<std::size_t>(u)] >= 0) continue;
    auto& c = s.cand[static_cast<std::size_t>(u)];
    c &= with_colour_[static_cast<std::size_t>(y)][static_cast<std::size_t>(colour(u, x))] & ~bit(y);
    if (c == 0) return false;
  }
  return true;
}

bool SetSystemSearch::propagate(State& s) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n_; ++u) {
      if (s.image[static_cast<std::size_t>(u)] >= 0) continue;
      const PointSet c = s.cand[static_cast<std::size_t>(u)] & ~s.used;
      if (c == 0) return false;
      if (count(c) == 1) {
        if (!assign(s, u, std::countr_zero(c))) return false;
        changed = true;
      }
    }
  }
  return true;
}

bool SetSystemSearch::recurse(State& s, const std::function<bool(const Perm&)>& visit) {
  ++nodes_;
  if (!propagate(s)) return true;
  int branch = -1;
  int best = 65;
  for (int u = 0; u < n_; ++u) {
    if (s.image[static_cast<std::size_t>(u)] >= 0) continue;
    const int k = count(s.cand[static_cast<std::size_t>(u)] & ~s.used);
    if (k < best) {
      best = k;
      branch = u;
    }
  }
  if (branch < 0) {
    Perm p(s.image);
    return preserves(p) ? visit(p) : true;
  }
  for (int y : members(s.cand[static_cast<std::size_t>(branch)] & ~s.used)) {
    State next = s;
    if (!assign(next, branch, y)) continue;
    if (!recurse(next, visit)) return false;
  }
  return true;
}

void SetSystemSearch::search(std::span<const std::pair<int, int>> forced,
                             const std::function<bool(const Perm&)>& visit) {
  State s;
  s.image.assign(static_cast<std::size_t>(n_), -1);
  s.cand.assign(static_cast<std::size_t>(n_), 0);
  // Points can only map to points lying in the same number of blocks.
  for (int x = 0; x < n_; ++x) {
    PointSet ok = 0;
    for (int y = 0; y < n_; ++y) {
      if (colour(y, y) == colour(x, x)) ok |= bit(y);
    }
    s.cand[static_cast<std::size_t>(x)] = ok;
  }
  for (const auto& [x, y] : forced) {
    if (!assign(s, x, y)) return;
  }
  recurse(s, visit);
}

}  // namespace h4
