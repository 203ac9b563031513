#pragma once

// Independent rank oracle for integral columns: exact arithmetic in Z[tau]
// on machine integers, and determinants by the Leibniz formula.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "h4/roots.hpp"

namespace oracle {

struct Zt {
  std::int64_t a = 0;  // a + b tau
  std::int64_t b = 0;

  friend Zt operator+(Zt x, Zt y) { return {x.a + y.a, x.b + y.b}; }
  friend Zt operator-(Zt x, Zt y) { return {x.a - y.a, x.b - y.b}; }
  friend Zt operator*(Zt x, Zt y) { return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b}; }
  bool zero() const { return a == 0 && b == 0; }
};

inline Zt from_golden(const h4::GoldenNumber& g) {
  if (g.rational_part().get_den() != 1 || g.tau_part().get_den() != 1) {
    throw std::invalid_argument("entry is not in Z[tau]");
  }
  return {g.rational_part().get_num().get_si(), g.tau_part().get_num().get_si()};
}

using Col = std::array<Zt, 4>;

inline std::vector<Col> columns(const h4::RootSystem& rs) {
  std::vector<Col> out;
  for (const auto& p : rs.points()) {
    Col c;
    for (std::size_t i = 0; i < 4; ++i) c[i] = from_golden(p.coords[i]);
    out.push_back(c);
  }
  return out;
}

// det of the 4x4 matrix with the given columns, sum over all 24 perms.
inline Zt det4(const Col& c0, const Col& c1, const Col& c2, const Col& c3) {
  static const auto perms = [] {
    std::vector<std::pair<std::array<int, 4>, int>> ps;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
      int inv = 0;
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) inv += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)];
      }
      ps.push_back({p, inv % 2 ? -1 : 1});
    } while (std::next_permutation(p.begin(), p.end()));
    return ps;
  }();
  const Col* cols[4] = {&c0, &c1, &c2, &c3};
  Zt total;
  for (const auto& [p, s] : perms) {
    Zt term{1, 0};
    for (std::size_t j = 0; j < 4; ++j) term = term * (*cols[j])[static_cast<std::size_t>(p[j])];
    total = s > 0 ? total + term : total - term;
  }
  return total;
}

// Three columns are dependent iff every 3x3 minor vanishes.
inline bool dependent3(const Col& x, const Col& y, const Col& z) {
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::array<std::size_t, 3> r{};
    std::size_t k = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i != skip) r[k++] = i;
    }
    auto m = [&](const Col& c, std::size_t i) { return c[r[i]]; };
    const Zt d = m(x, 0) * (m(y, 1) * m(z, 2) - m(y, 2) * m(z, 1)) - m(y, 0) * (m(x, 1) * m(z, 2) - m(x, 2) * m(z, 1)) +
                 m(z, 0) * (m(x, 1) * m(y, 2) - m(x, 2) * m(y, 1));
    if (!d.zero()) return false;
  }
  return true;
}

}  // namespace oracle
