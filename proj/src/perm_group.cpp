#include "h4/perm_group.hpp"

#include <algorithm>

namespace h4 {

namespace {

int first_moved(const Perm& g) {
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (g(static_cast<int>(i)) != static_cast<int>(i)) return static_cast<int>(i);
  }
  return -1;
}

bool fixes_all(const Perm& g, std::span<const int> points) {
  return std::all_of(points.begin(), points.end(), [&](int b) { return g(b) == b; });
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::vector<int> base_prefix)
    : degree_(degree), base_(std::move(base_prefix)) {
  for (auto& g : generators) {
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
  for (int b : base_) {
    if (b < 0 || static_cast<std::size_t>(b) >= degree_) throw std::invalid_argument("base point out of range");
  }
  schreier_sims();
}

void PermGroup::build_orbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.slot.assign(degree_, -1);
  level.transversal.assign(1, Perm::identity(degree_));
  level.slot[static_cast<std::size_t>(level.base_point)] = 0;
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    for (const Perm& s : level.gens) {
      const int img = s(level.orbit[i]);
      if (level.slot[static_cast<std::size_t>(img)] >= 0) continue;
      level.slot[static_cast<std::size_t>(img)] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(img);
      level.transversal.push_back(compose(s, level.transversal[i]));
    }
  }
}

std::size_t PermGroup::sift(Perm& g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    const int k = l.slot[static_cast<std::size_t>(g(l.base_point))];
    if (k < 0) return i;
    g = compose(l.transversal[static_cast<std::size_t>(k)].inverse(), g);
  }
  return levels_.size();
}

void PermGroup::schreier_sims() {
  std::vector<Perm> strong = generators_;
  for (const Perm& g : strong) {
    if (fixes_all(g, base_)) base_.push_back(first_moved(g));
  }
  auto rebuild_level = [&](std::size_t i) {
    Level& l = levels_[i];
    l.base_point = base_[i];
    l.gens.clear();
    const std::span<const int> prefix(base_.data(), i);
    for (const Perm& s : strong) {
      if (fixes_all(s, prefix)) l.gens.push_back(s);
    }
    build_orbit(l);
  };
  levels_.assign(base_.size(), Level{});
  for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_level(i);

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    const Level& l = levels_[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; !extended && k < l.orbit.size(); ++k) {
      for (const Perm& s : l.gens) {
        const int img = s(l.orbit[k]);
        const Perm& u_img = l.transversal[static_cast<std::size_t>(l.slot[static_cast<std::size_t>(img)])];
        Perm h = compose(u_img.inverse(), compose(s, l.transversal[k]));
        if (h.is_identity()) continue;
        const std::size_t j = sift(h, static_cast<std::size_t>(i) + 1);
        if (h.is_identity()) continue;
        if (j == levels_.size()) {
          base_.push_back(first_moved(h));
          levels_.emplace_back();
        }
        strong.push_back(h);
        for (std::size_t t = static_cast<std::size_t>(i) + 1; t <= j; ++t) rebuild_level(t);
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

std::uint64_t PermGroup::order() const {
  std::uint64_t n = 1;
  for (const Level& l : levels_) {
    if (__builtin_mul_overflow(n, static_cast<std::uint64_t>(l.orbit.size()), &n)) {
      throw std::overflow_error("group order exceeds 64 bits");
    }
  }
  return n;
}

std::vector<std::size_t> PermGroup::orbit_lengths() const {
  std::vector<std::size_t> v;
  for (const Level& l : levels_) v.push_back(l.orbit.size());
  return v;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  Perm h = g;
  return sift(h, 0) == levels_.size() && h.is_identity();
}

std::vector<Perm> PermGroup::strong_generators(std::size_t level) const {
  if (level < levels_.size()) return levels_[level].gens;
  return {};
}

PermGroup PermGroup::point_stabilizer(int x) const {
  const PermGroup rebased(degree_, generators_, {x});
  return PermGroup(degree_, rebased.strong_generators(1));
}

std::vector<int> PermGroup::orbit(int point) const {
  std::vector<int> out{point};
  std::vector<bool> seen(degree_, false);
  seen[static_cast<std::size_t>(point)] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const Perm& g : generators_) {
      const int img = g(out[i]);
      if (!seen[static_cast<std::size_t>(img)]) {
        seen[static_cast<std::size_t>(img)] = true;
        out.push_back(img);
      }
    }
  }
  return out;
}

bool PermGroup::is_transitive() const { return degree_ == 0 || orbit(0).size() == degree_; }

std::vector<Perm> PermGroup::elements() const {
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(order()));
  for_each_element([&](const Perm& g) { out.push_back(g); });
  return out;
}

Perm PermGroup::random_element(std::mt19937_64& rng) const {
  Perm g = Perm::identity(degree_);
  for (const Level& l : levels_) {
    std::uniform_int_distribution<std::size_t> pick(0, l.transversal.size() - 1);
    g = compose(g, l.transversal[pick(rng)]);
  }
  return g;
}

}  // namespace h4
