#include "h4/bases.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace h4 {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t BasisTable::index(const std::array<PointId, 4>& s) {
  return binomial(s[0], 1) + binomial(s[1], 2) + binomial(s[2], 3) + binomial(s[3], 4);
}

BasisTable BasisTable::compute(const Matroid& m, int jobs) {
  BasisTable t;
  t.n_ = m.size();
  const int n = t.n_;
  t.flags_.assign(binomial(n, 4), 0);
  jobs = std::max(1, jobs);

  auto work = [&](int worker) {
    for (PointId a = worker; a < n; a += jobs) {
      for (PointId b = a + 1; b < n; ++b) {
        for (PointId c = b + 1; c < n; ++c) {
          Span span;
          span.add(m.roots().coords(a));
          span.add(m.roots().coords(b));
          if (!span.add(m.roots().coords(c))) continue;
          for (PointId d = c + 1; d < n; ++d) {
            if (!span.contains(m.roots().coords(d))) t.flags_[index({a, b, c, d})] = 1;
          }
        }
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  t.count_ = static_cast<std::uint64_t>(std::count(t.flags_.begin(), t.flags_.end(), 1));
  return t;
}

bool BasisTable::is_basis(std::array<PointId, 4> ids) const {
  std::sort(ids.begin(), ids.end());
  if (ids[0] < 0 || ids[3] >= n_) throw std::out_of_range("point id out of range");
  if (ids[0] == ids[1] || ids[1] == ids[2] || ids[2] == ids[3]) return false;
  return flags_[index(ids)] != 0;
}

bool BasisTable::is_basis(PointSet s) const {
  if (h4::count(s) != 4) return false;
  const auto v = members(s);
  return is_basis(std::array<PointId, 4>{v[0], v[1], v[2], v[3]});
}

}  // namespace h4
