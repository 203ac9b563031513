#include "h4/properties.hpp"

#include <fmt/format.h>

namespace h4 {

void PropertyResult::check(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  if (failures == 0) first_failure = what;
  ++failures;
}

GoldenNumber random_golden(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 7);
  std::uniform_int_distribution<int> shape(0, 7);
  auto q = [&] {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  switch (shape(rng)) {
    case 0: return GoldenNumber(0);
    case 1: return GoldenNumber(q(), 0);
    default: return GoldenNumber(q(), q());
  }
}

PointSet random_subset(std::mt19937_64& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> size(lo, hi);
  std::uniform_int_distribution<int> point(0, n - 1);
  const int k = size(rng);
  PointSet s = 0;
  while (count(s) < k) s |= bit(point(rng));
  return s;
}

PropertyResult golden_field_properties(std::uint64_t seed, std::uint64_t cases) {
  PropertyResult r{"golden field axioms", 0, 0, {}};
  std::mt19937_64 rng(seed);
  const GoldenNumber zero(0);
  const GoldenNumber one(1);
  for (std::uint64_t i = 0; i < cases; ++i) {
    const GoldenNumber x = random_golden(rng);
    const GoldenNumber y = random_golden(rng);
    const GoldenNumber z = random_golden(rng);
    const std::string at = fmt::format("x={} y={} z={}", x.to_string(), y.to_string(), z.to_string());
    bool ok = (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z);
    ok = ok && x + y == y + x && x * y == y * x;
    ok = ok && x * (y + z) == x * y + x * z;
    ok = ok && x + zero == x && x * one == x && x + (-x) == zero;
    if (!x.is_zero()) ok = ok && x * x.inverse() == one && x.inverse().inverse() == x;
    ok = ok && sign(x * y) == sign(x) * sign(y);
    ok = ok && (x - y).sign() == (x <=> y == 0 ? 0 : (x > y ? 1 : -1));
    ok = ok && conj(x + y) == conj(x) + conj(y) && conj(x * y) == conj(x) * conj(y) && conj(conj(x)) == x;
    const GoldenNumber n = x * conj(x);
    ok = ok && n.tau_part() == 0 && n.rational_part() == x.norm();
    r.check(ok, at);
  }
  return r;
}

PropertyResult rank_properties(const Matroid& m, std::uint64_t seed, std::uint64_t cases) {
  PropertyResult r{"rank monotone and submodular", 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < cases; ++i) {
    const PointSet a = random_subset(rng, m.size(), 0, 5);
    const PointSet b = random_subset(rng, m.size(), 0, 5);
    const int ra = m.rank(a);
    const int rb = m.rank(b);
    const int ru = m.rank(a | b);
    const int ri = m.rank(a & b);
    bool ok = ru + ri <= ra + rb;
    ok = ok && ri <= std::min(ra, rb) && ru >= std::max(ra, rb);
    ok = ok && ra <= count(a) && ru <= 4;
    r.check(ok, fmt::format("A={:#x} B={:#x}", a, b));
  }
  return r;
}

PropertyResult closure_properties(const Matroid& m, std::uint64_t seed, std::uint64_t cases) {
  PropertyResult r{"closure axioms", 0, 0, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> point(0, m.size() - 1);
  for (std::uint64_t i = 0; i < cases; ++i) {
    const PointSet a = random_subset(rng, m.size(), 0, 3);
    const PointSet b = a | bit(point(rng));
    const Flat ca = m.closure(a);
    const Flat cb = m.closure(b);
    bool ok = is_subset(a, ca.points);
    ok = ok && m.closure(ca.points).points == ca.points;
    ok = ok && is_subset(ca.points, cb.points);
    ok = ok && ca.rank == m.rank(a);
    r.check(ok, fmt::format("A={:#x} B={:#x}", a, b));
  }
  return r;
}

PropertyResult duality_commutation_properties(const Matroid& m, const std::vector<Orthoframe>& frames,
                                              const PermGroup& aut, std::uint64_t seed, std::uint64_t cases) {
  PropertyResult r{"automorphisms commute with orthoplanes", 0, 0, {}};
  std::vector<PointSet> planes;
  for (PointId x = 0; x < m.size(); ++x) planes.push_back(orthoplane(m, frames, x).points);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> point(0, m.size() - 1);
  for (std::uint64_t i = 0; i < cases; ++i) {
    const Perm s = aut.random_element(rng);
    const int x = point(rng);
    r.check(s.apply(planes[static_cast<std::size_t>(x)]) == planes[static_cast<std::size_t>(s(x))],
            fmt::format("x={} s={}", x, s.to_string()));
  }
  return r;
}

}  // namespace h4
