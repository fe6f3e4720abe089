#include "plg/rational.hpp"

#include <cctype>
#include <functional>

#include "plg/errors.hpp"

namespace plg {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

namespace {

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view n = text.substr(0, slash);
  if (!valid_integer(n)) {
    throw ParseError("not a rational: \"" + std::string(text) + "\"");
  }
  if (slash == std::string_view::npos) return Rational(to_mpz(n), mpz_class(1));
  std::string_view d = text.substr(slash + 1);
  if (!valid_integer(d) || d[0] == '-' || d[0] == '+') {
    throw ParseError("not a rational: \"" + std::string(text) + "\"");
  }
  return Rational(to_mpz(n), to_mpz(d));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1) / q_);
}

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.q_.get_mpq_t(), q_.get_mpq_t());
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  mpq_mul(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  mpq_div(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
  return *this;
}

std::size_t Rational::hash() const {
  std::size_t h = std::hash<std::string>{}(q_.get_num().get_str(16));
  return h ^ (std::hash<std::string>{}(q_.get_den().get_str(16)) * 0x9e3779b97f4a7c15ULL);
}

}  // namespace plg
