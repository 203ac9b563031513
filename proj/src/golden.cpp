#include "h4/golden.hpp"

#include <cmath>
#include <regex>

namespace h4 {

GoldenNumber::GoldenNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

int GoldenNumber::sign() const {
  // a + b*tau = ((2a + b) + b*sqrt5) / 2; decide the sign of p + q*sqrt5.
  const Rational p = 2 * a_ + b_;
  const Rational& q = b_;
  const int sp = sgn(p);
  const int sq = sgn(q);
  if (sp >= 0 && sq >= 0) return (sp > 0 || sq > 0) ? 1 : 0;
  if (sp <= 0 && sq <= 0) return -1;
  const Rational diff = p * p - 5 * q * q;  // never zero: sqrt5 is irrational
  return sp > 0 ? sgn(diff) : -sgn(diff);
}

GoldenNumber GoldenNumber::conj() const { return {a_ + b_, -b_}; }

Rational GoldenNumber::norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

GoldenNumber GoldenNumber::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(tau)");
  const Rational n = norm();
  return {Rational((a_ + b_) / n), Rational(-b_ / n)};
}

double GoldenNumber::to_double() const {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  return a_.get_d() + b_.get_d() * t;
}

std::string GoldenNumber::to_string() const { return a_.get_str() + "+" + b_.get_str() + "*t"; }

GoldenNumber GoldenNumber::parse(std::string_view text) {
  static const std::regex grammar(R"(^(-?[0-9]+(?:/[0-9]+)?)\+(-?[0-9]+(?:/[0-9]+)?)\*t$)");
  std::cmatch m;
  if (!std::regex_match(text.begin(), text.end(), m, grammar)) {
    throw std::invalid_argument("malformed golden number: " + std::string(text));
  }
  auto rational = [&](const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0 || sgn(r.get_den()) == 0) {
      throw std::invalid_argument("malformed rational: " + s);
    }
    r.canonicalize();
    return r;
  };
  return {rational(m[1].str()), rational(m[2].str())};
}

GoldenNumber& GoldenNumber::operator+=(const GoldenNumber& y) {
  a_ += y.a_;
  b_ += y.b_;
  return *this;
}

GoldenNumber& GoldenNumber::operator-=(const GoldenNumber& y) {
  a_ -= y.a_;
  b_ -= y.b_;
  return *this;
}

GoldenNumber& GoldenNumber::operator*=(const GoldenNumber& y) {
  // (a + b t)(c + d t) = (ac + bd) + (ad + bc + bd) t
  if (is_zero() || y.is_zero()) {
    a_ = 0;
    b_ = 0;
    return *this;
  }
  if (sgn(y.b_) == 0) {
    a_ *= y.a_;
    b_ *= y.a_;
    return *this;
  }
  const Rational bd = b_ * y.b_;
  Rational na = a_ * y.a_ + bd;
  b_ = a_ * y.b_ + b_ * y.a_ + bd;
  a_ = std::move(na);
  return *this;
}

GoldenNumber operator-(const GoldenNumber& x) { return {Rational(-x.a_), Rational(-x.b_)}; }

std::strong_ordering operator<=>(const GoldenNumber& x, const GoldenNumber& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

GoldenNumber add(const GoldenNumber& x, const GoldenNumber& y) { return x + y; }
GoldenNumber mul(const GoldenNumber& x, const GoldenNumber& y) { return x * y; }
GoldenNumber inverse(const GoldenNumber& x) { return x.inverse(); }
int sign(const GoldenNumber& x) { return x.sign(); }
GoldenNumber conj(const GoldenNumber& x) { return x.conj(); }

}  // namespace h4
