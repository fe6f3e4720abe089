#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace plg {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Backed by GMP so word evaluation never overflows.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I n) : q_(static_cast<long>(n)) {}  // NOLINT: implicit on purpose

  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q);

  /// Parses "p", "-p" or "p/q". Throws ParseError, DivisionByZero.
  static Rational parse(std::string_view text);

  /// "p/q", or "p" when q == 1.
  std::string str() const;

  const mpq_class& mpq() const noexcept { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int sign() const noexcept { return sgn(q_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;
  double to_double() const { return q_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class q_;
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational midpoint(const Rational& a, const Rational& b) {
  return (a + b) / Rational(2);
}

}  // namespace plg
