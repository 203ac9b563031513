#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace h4 {

using Rational = mpq_class;

/// Raised for inputs outside an operation's domain (zero inverse, zero vector).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exact element a + b*tau of Q(tau), tau^2 = tau + 1.
///
/// Both coefficients are kept canonical (lowest terms, positive
/// denominator). Signs refer to the real embedding tau = (1 + sqrt 5) / 2.
class GoldenNumber {
 public:
  GoldenNumber() = default;
  GoldenNumber(long a) : a_(a) {}  // NOLINT: integers embed implicitly
  GoldenNumber(Rational a, Rational b);

  static GoldenNumber tau() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& tau_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  /// -1, 0 or +1; exact, no floating point involved.
  int sign() const;

  /// Field automorphism tau -> 1 - tau.
  GoldenNumber conj() const;

  /// x * conj(x) = a^2 + ab - b^2, always rational.
  Rational norm() const;

  /// Throws DomainError on zero.
  GoldenNumber inverse() const;

  /// Display helper only.
  double to_double() const;

  /// "a+b*t" with exact rationals, e.g. "3/2+-1/2*t".
  std::string to_string() const;

  /// Inverse of to_string(). Throws std::invalid_argument on malformed text.
  static GoldenNumber parse(std::string_view text);

  GoldenNumber& operator+=(const GoldenNumber& y);
  GoldenNumber& operator-=(const GoldenNumber& y);
  GoldenNumber& operator*=(const GoldenNumber& y);
  GoldenNumber& operator/=(const GoldenNumber& y) { return *this *= y.inverse(); }

  friend GoldenNumber operator+(GoldenNumber x, const GoldenNumber& y) { return x += y; }
  friend GoldenNumber operator-(GoldenNumber x, const GoldenNumber& y) { return x -= y; }
  friend GoldenNumber operator*(GoldenNumber x, const GoldenNumber& y) { return x *= y; }
  friend GoldenNumber operator/(GoldenNumber x, const GoldenNumber& y) { return x /= y; }
  friend GoldenNumber operator-(const GoldenNumber& x);

  friend bool operator==(const GoldenNumber& x, const GoldenNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Real-embedding order.
  friend std::strong_ordering operator<=>(const GoldenNumber& x, const GoldenNumber& y);

 private:
  Rational a_{0};
  Rational b_{0};
};

GoldenNumber add(const GoldenNumber& x, const GoldenNumber& y);
GoldenNumber mul(const GoldenNumber& x, const GoldenNumber& y);
GoldenNumber inverse(const GoldenNumber& x);
int sign(const GoldenNumber& x);
GoldenNumber conj(const GoldenNumber& x);

}  // namespace h4
