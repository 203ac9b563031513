#include "h4/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace h4 {

CayleyTable cayley_table(const std::vector<Perm>& elements) {
  CayleyTable t;
  t.n = static_cast<int>(elements.size());
  std::unordered_map<Perm, int, PermHash> index;
  for (int i = 0; i < t.n; ++i) index.emplace(elements[static_cast<std::size_t>(i)], i);
  t.identity = -1;
  t.mul.resize(static_cast<std::size_t>(t.n * t.n));
  for (int i = 0; i < t.n; ++i) {
    if (elements[static_cast<std::size_t>(i)].is_identity()) t.identity = i;
    for (int j = 0; j < t.n; ++j) {
      auto it = index.find(compose(elements[static_cast<std::size_t>(i)], elements[static_cast<std::size_t>(j)]));
      if (it == index.end()) throw std::invalid_argument("element list is not closed under composition");
      t.mul[static_cast<std::size_t>(i * t.n + j)] = it->second;
    }
  }
  if (t.identity < 0) throw std::invalid_argument("element list has no identity");
  return t;
}

CayleyTable symmetric_group_table(int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> all;
  do {
    all.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return cayley_table(all);
}

CayleyTable cyclic_group_table(int k) {
  CayleyTable t;
  t.n = k;
  t.identity = 0;
  t.mul.resize(static_cast<std::size_t>(k * k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) t.mul[static_cast<std::size_t>(i * k + j)] = (i + j) % k;
  }
  return t;
}

CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b) {
  CayleyTable t;
  t.n = a.n * b.n;
  t.identity = a.identity * b.n + b.identity;
  t.mul.resize(static_cast<std::size_t>(t.n * t.n));
  for (int i = 0; i < t.n; ++i) {
    for (int j = 0; j < t.n; ++j) {
      t.mul[static_cast<std::size_t>(i * t.n + j)] = a.at(i / b.n, j / b.n) * b.n + b.at(i % b.n, j % b.n);
    }
  }
  return t;
}

std::vector<int> element_orders(const CayleyTable& t) {
  std::vector<int> orders(static_cast<std::size_t>(t.n));
  for (int i = 0; i < t.n; ++i) {
    int k = 1;
    for (int x = i; x != t.identity; x = t.at(x, i)) ++k;
    orders[static_cast<std::size_t>(i)] = k;
  }
  return orders;
}

namespace {

/// Elements reachable from the identity by right multiplication by gens.
std::vector<bool> generated(const CayleyTable& t, const std::vector<int>& gens) {
  std::vector<bool> seen(static_cast<std::size_t>(t.n), false);
  std::vector<int> queue{t.identity};
  seen[static_cast<std::size_t>(t.identity)] = true;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (int g : gens) {
      const int y = t.at(queue[q], g);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

/// Extends gens[i] -> images[i] to a map on <gens> along right
/// multiplications; fails on any clash or non-injectivity.
bool extend(const CayleyTable& a, const CayleyTable& b, const std::vector<int>& gens,
            const std::vector<int>& images, std::vector<int>& phi) {
  phi.assign(static_cast<std::size_t>(a.n), -1);
  std::vector<bool> used(static_cast<std::size_t>(b.n), false);
  phi[static_cast<std::size_t>(a.identity)] = b.identity;
  used[static_cast<std::size_t>(b.identity)] = true;
  std::vector<int> queue{a.identity};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const int x = queue[q];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const int y = a.at(x, gens[k]);
      const int fy = b.at(phi[static_cast<std::size_t>(x)], images[k]);
      if (phi[static_cast<std::size_t>(y)] >= 0) {
        if (phi[static_cast<std::size_t>(y)] != fy) return false;
        continue;
      }
      if (used[static_cast<std::size_t>(fy)]) return false;
      phi[static_cast<std::size_t>(y)] = fy;
      used[static_cast<std::size_t>(fy)] = true;
      queue.push_back(y);
    }
  }
  return true;
}

bool search(const CayleyTable& a, const CayleyTable& b, const std::vector<int>& gens,
            const std::vector<int>& orders_a, const std::vector<int>& orders_b, std::vector<int>& images) {
  std::vector<int> phi;
  if (!images.empty()) {
    const std::vector<int> prefix(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(images.size()));
    if (!extend(a, b, prefix, images, phi)) return false;
  }
  if (images.size() == gens.size()) {
    return std::count(phi.begin(), phi.end(), -1) == 0;
  }
  const int g = gens[images.size()];
  for (int h = 0; h < b.n; ++h) {
    if (orders_b[static_cast<std::size_t>(h)] != orders_a[static_cast<std::size_t>(g)]) continue;
    images.push_back(h);
    if (search(a, b, gens, orders_a, orders_b, images)) return true;
    images.pop_back();
  }
  return false;
}

}  // namespace

bool isomorphic(const CayleyTable& a, const CayleyTable& b) {
  if (a.n > kMaxIsomorphismOrder || b.n > kMaxIsomorphismOrder) {
    throw std::invalid_argument("isomorphism test is limited to groups of order <= 240");
  }
  if (a.n != b.n) return false;
  const auto oa = element_orders(a);
  const auto ob = element_orders(b);
  auto sa = oa;
  auto sb = ob;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  // Greedy generating set, highest orders first.
  std::vector<int> by_order(static_cast<std::size_t>(a.n));
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](int x, int y) { return oa[static_cast<std::size_t>(x)] > oa[static_cast<std::size_t>(y)]; });
  std::vector<int> gens;
  std::vector<bool> span = generated(a, gens);
  for (int x : by_order) {
    if (span[static_cast<std::size_t>(x)]) continue;
    gens.push_back(x);
    span = generated(a, gens);
  }
  std::vector<int> images;
  return search(a, b, gens, oa, ob, images);
}

}  // namespace h4
