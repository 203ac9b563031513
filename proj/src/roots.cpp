#include "h4/roots.hpp"

namespace h4 {

GoldenNumber dot(const Vec4& u, const Vec4& v) {
  GoldenNumber s;
  for (std::size_t i = 0; i < 4; ++i) s += u[i] * v[i];
  return s;
}

Vec4 scale(const Vec4& v, const GoldenNumber& s) {
  Vec4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = v[i] * s;
  return r;
}

Vec4 subtract(const Vec4& u, const Vec4& v) {
  Vec4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = u[i] - v[i];
  return r;
}

bool is_zero(const Vec4& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vec4 canonicalize(const Vec4& v) {
  for (const auto& x : v) {
    const int s = x.sign();
    if (s > 0) return v;
    if (s < 0) return scale(v, GoldenNumber(-1));
  }
  throw DomainError("cannot canonicalize the zero vector");
}

std::string to_string(const Vec4& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + "]";
}

std::vector<Vec4> h4_columns() {
  const GoldenNumber o(0);
  const GoldenNumber one(1);
  const GoldenNumber t = GoldenNumber::tau();
  const GoldenNumber t2 = t * t;
  std::vector<Vec4> cols;
  cols.reserve(60);

  // Block 1: unit vectors, then [1, +-1, +-1, +-1].
  cols.push_back({one, o, o, o});
  cols.push_back({o, one, o, o});
  cols.push_back({o, o, one, o});
  cols.push_back({o, o, o, one});
  for (int s2 : {1, -1}) {
    for (int s3 : {1, -1}) {
      for (int s4 : {1, -1}) cols.push_back({one, GoldenNumber(s2), GoldenNumber(s3), GoldenNumber(s4)});
    }
  }

  // Blocks 2..5: one zero coordinate, the others a cyclic arrangement of
  // (tau, tau^2, 1) with the last two entries carrying independent signs.
  struct Block {
    int zero;                  // index of the zero coordinate
    std::array<int, 3> slots;  // coordinates receiving alpha, beta, gamma
    std::array<std::array<GoldenNumber, 3>, 3> triples;
  };
  const Block blocks[] = {
      {0, {1, 2, 3}, {{{t, t2, one}, {t2, one, t}, {one, t, t2}}}},
      {1, {0, 2, 3}, {{{t, one, t2}, {t2, t, one}, {one, t2, t}}}},
      {2, {0, 1, 3}, {{{t, t2, one}, {t2, one, t}, {one, t, t2}}}},
      {3, {0, 1, 2}, {{{t, one, t2}, {t2, t, one}, {one, t2, t}}}},
  };
  for (const auto& b : blocks) {
    for (const auto& abc : b.triples) {
      for (int sb : {1, -1}) {
        for (int sc : {1, -1}) {
          Vec4 v{o, o, o, o};
          v[static_cast<std::size_t>(b.slots[0])] = abc[0];
          v[static_cast<std::size_t>(b.slots[1])] = abc[1] * GoldenNumber(sb);
          v[static_cast<std::size_t>(b.slots[2])] = abc[2] * GoldenNumber(sc);
          cols.push_back(v);
        }
      }
    }
  }
  return cols;
}

std::string RootSystem::direction_key(const Vec4& v) {
  // Scale so the first nonzero coordinate is 1; parallel vectors share keys.
  for (std::size_t i = 0; i < 4; ++i) {
    if (!v[i].is_zero()) {
      const GoldenNumber inv = v[i].inverse();
      std::string key;
      for (const auto& x : v) key += (x * inv).to_string() + ";";
      return key;
    }
  }
  throw DomainError("zero vector has no direction");
}

RootSystem::RootSystem(const std::vector<Vec4>& columns) {
  points_.reserve(columns.size());
  for (const auto& c : columns) {
    const PointId id = static_cast<PointId>(points_.size());
    if (is_zero(c)) throw ConsistencyError("column " + std::to_string(id) + " is zero");
    auto [it, fresh] = by_direction_.emplace(direction_key(c), id);
    if (!fresh) {
      throw ConsistencyError("column " + std::to_string(id) + " is parallel to column " +
                             std::to_string(it->second));
    }
    points_.push_back({id, canonicalize(c)});
  }
}

std::optional<PointId> RootSystem::lookup(const Vec4& v) const {
  if (is_zero(v)) return std::nullopt;
  auto it = by_direction_.find(direction_key(v));
  if (it == by_direction_.end()) return std::nullopt;
  return it->second;
}

}  // namespace h4
