#pragma once

#include <string>

#include "plg/rational.hpp"

namespace plg {

/// Writes n = s^2 * d with d square-free. Requires n > 0.
void square_free_decompose(const mpz_class& n, mpz_class& s, mpz_class& d);

/// a + b*sqrt(d) with d square-free. Rational values carry b = 0, d = 1.
class QuadSurd {
 public:
  QuadSurd() : d_(1) {}
  QuadSurd(Rational a);  // NOLINT: rationals embed implicitly
  template <std::integral I>
  QuadSurd(I n) : QuadSurd(Rational(n)) {}  // NOLINT
  /// Any positive d is accepted and reduced to its square-free part.
  QuadSurd(Rational a, Rational b, const mpz_class& d);

  /// sqrt(r) for r >= 0; rational when r is a rational square.
  static QuadSurd sqrt_of(const Rational& r);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const mpz_class& d() const noexcept { return d_; }
  bool is_rational() const noexcept { return b_.is_zero(); }

  int sign() const;
  QuadSurd conjugate() const;
  QuadSurd inverse() const;
  QuadSurd operator-() const;

  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) {
    return x * y.inverse();
  }

  friend bool operator==(const QuadSurd& x, const QuadSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
  }
  /// Exact comparison, including across different radicands.
  friend int compare(const QuadSurd& x, const QuadSurd& y);
  friend bool operator<(const QuadSurd& x, const QuadSurd& y) { return compare(x, y) < 0; }
  friend bool operator>(const QuadSurd& x, const QuadSurd& y) { return compare(x, y) > 0; }
  friend bool operator<=(const QuadSurd& x, const QuadSurd& y) { return compare(x, y) <= 0; }
  friend bool operator>=(const QuadSurd& x, const QuadSurd& y) { return compare(x, y) >= 0; }

  std::string str() const;
  double to_double() const;

 private:
  Rational a_, b_;
  mpz_class d_;
};

}  // namespace plg
