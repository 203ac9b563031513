#include "h4/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace h4 {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("image array is not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<int> v(degree);
  std::iota(v.begin(), v.end(), 0);
  Perm p;
  p.images_ = std::move(v);
  return p;
}

Perm Perm::inverse() const {
  Perm r = *this;
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::uint64_t Perm::order() const {
  std::uint64_t l = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      ++len;
    }
    l = std::lcm(l, len);
  }
  return l;
}

int Perm::fixed_points() const {
  int n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) n += images_[i] == static_cast<int>(i);
  return n;
}

int Perm::parity() const {
  std::vector<bool> seen(images_.size(), false);
  int transpositions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

PointSet Perm::apply(PointSet s) const {
  PointSet out = 0;
  while (s) {
    const int i = std::countr_zero(s);
    s &= s - 1;
    out |= bit(images_[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::string Perm::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) s += (i ? "," : "") + std::to_string(images_[i]);
  return s + "]";
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> v(q.degree());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = p(q(static_cast<int>(i)));
  return Perm(std::move(v));
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ULL;
  for (int v : p.images()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
  return h;
}

}  // namespace h4
