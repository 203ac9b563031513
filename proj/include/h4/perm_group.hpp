#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "h4/perm.hpp"

namespace h4 {

/// A permutation group held as a stabilizer chain (base and strong
/// generating set), built by deterministic Schreier-Sims. New base points
/// are always the smallest point moved by the new strong generator, so
/// the chain depends only on the generator order and the base prefix.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Perm> generators, std::vector<int> base_prefix = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<int>& base() const { return base_; }

  /// Product of the fundamental orbit lengths. Throws std::overflow_error
  /// past 2^64.
  std::uint64_t order() const;
  std::vector<std::size_t> orbit_lengths() const;

  /// Exact membership by sifting.
  bool contains(const Perm& g) const;

  /// Strong generators fixing base()[0..level).
  std::vector<Perm> strong_generators(std::size_t level) const;

  /// Stabilizer of one point, via a chain whose base starts at it.
  PermGroup point_stabilizer(int x) const;

  std::vector<int> orbit(int point) const;
  bool is_transitive() const;

  /// Visits every element exactly once, in transversal-product order.
  template <class F>
  void for_each_element(F&& f) const {
    Perm g = Perm::identity(degree_);
    visit(0, g, f);
  }
  std::vector<Perm> elements() const;

  Perm random_element(std::mt19937_64& rng) const;

 private:
  struct Level {
    int base_point = 0;
    std::vector<Perm> gens;
    std::vector<int> orbit;
    std::vector<int> slot;        // point -> index into transversal, or -1
    std::vector<Perm> transversal;  // transversal[k] maps base_point to orbit[k]
  };

  void build_orbit(Level& level) const;
  /// Strips g through levels [from, end); returns the level reached.
  std::size_t sift(Perm& g, std::size_t from) const;
  void schreier_sims();

  template <class F>
  void visit(std::size_t level, const Perm& prefix, F& f) const {
    if (level == levels_.size()) {
      f(prefix);
      return;
    }
    for (const Perm& u : levels_[level].transversal) visit(level + 1, compose(prefix, u), f);
  }

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

/// Orbit of a seed under an induced action act(perm, item) -> item, with a
/// witness perm mapping the seed to each orbit element.
template <class T>
struct Orbit {
  std::vector<T> elements;
  std::vector<Perm> witnesses;
};

template <class T, class Act>
Orbit<T> orbit_of(std::span<const Perm> gens, const T& seed, Act act, std::size_t degree) {
  Orbit<T> o;
  std::map<T, std::size_t> seen;
  o.elements.push_back(seed);
  o.witnesses.push_back(Perm::identity(degree));
  seen.emplace(seed, 0);
  for (std::size_t i = 0; i < o.elements.size(); ++i) {
    for (const Perm& g : gens) {
      T img = act(g, o.elements[i]);
      if (seen.count(img)) continue;
      seen.emplace(img, o.elements.size());
      o.elements.push_back(img);
      o.witnesses.push_back(compose(g, o.witnesses[i]));
    }
  }
  return o;
}

/// Splits `items` into orbits under the induced action. Throws
/// std::logic_error if some image is not among the items.
template <class T, class Act>
std::vector<std::vector<std::size_t>> orbits_on(std::span<const Perm> gens, const std::vector<T>& items, Act act) {
  std::map<T, std::size_t> index;
  for (std::size_t i = 0; i < items.size(); ++i) index.emplace(items[i], i);
  std::vector<int> label(items.size(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < items.size(); ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> queue{s};
    label[s] = id;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      out.back().push_back(queue[q]);
      for (const Perm& g : gens) {
        auto it = index.find(act(g, items[queue[q]]));
        if (it == index.end()) throw std::logic_error("induced action leaves the item set");
        if (label[it->second] < 0) {
          label[it->second] = id;
          queue.push_back(it->second);
        }
      }
    }
  }
  return out;
}

}  // namespace h4
