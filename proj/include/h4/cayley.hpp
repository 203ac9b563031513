#pragma once

#include <vector>

#include "h4/perm.hpp"

namespace h4 {

/// Multiplication table of a finite group: at(i, j) = index of e_i * e_j.
struct CayleyTable {
  int n = 0;
  int identity = 0;
  std::vector<int> mul;

  int at(int i, int j) const { return mul[static_cast<std::size_t>(i * n + j)]; }
};

/// Table of a list of permutations closed under composition. Throws
/// std::invalid_argument if the list is not closed.
CayleyTable cayley_table(const std::vector<Perm>& elements);

CayleyTable symmetric_group_table(int k);
CayleyTable cyclic_group_table(int k);
CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b);

std::vector<int> element_orders(const CayleyTable& t);

inline constexpr int kMaxIsomorphismOrder = 240;

/// Exact isomorphism test by backtracking over images of a generating set,
/// pruned by element orders. Throws std::invalid_argument above order 240.
bool isomorphic(const CayleyTable& a, const CayleyTable& b);

}  // namespace h4
