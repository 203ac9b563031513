#include "h4/span.hpp"

#include <algorithm>

namespace h4 {

Vec4 Span::reduce(Vec4 v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p].is_zero()) continue;
    const GoldenNumber c = v[p];
    for (std::size_t j = 0; j < 4; ++j) {
      if (j == p) {
        v[j] = GoldenNumber();
      } else if (!rows_[r][j].is_zero()) {
        v[j] -= c * rows_[r][j];
      }
    }
  }
  return v;
}

bool Span::add(const Vec4& v) {
  if (rows_.size() == 4) return false;
  Vec4 w = reduce(v);
  const auto first = std::find_if(w.begin(), w.end(), [](const GoldenNumber& x) { return !x.is_zero(); });
  if (first == w.end()) return false;
  const auto p = static_cast<std::size_t>(first - w.begin());
  const GoldenNumber inv = w[p].inverse();
  for (auto& x : w) {
    if (!x.is_zero()) x *= inv;
  }
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const GoldenNumber c = row[p];
    for (std::size_t j = 0; j < 4; ++j) {
      if (!w[j].is_zero()) row[j] -= c * w[j];
    }
  }
  rows_.push_back(w);
  pivots_.push_back(p);
  return true;
}

bool Span::contains(const Vec4& v) const {
  if (rows_.size() == 4) return true;
  return is_zero(reduce(v));
}

}  // namespace h4
