#include "plg/quad_surd.hpp"

#include <cmath>
#include <map>
#include <vector>

#include "plg/errors.hpp"

namespace plg {

namespace {

// Pollard-Brent; n is odd composite.
mpz_class find_factor(const mpz_class& n) {
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, m = 128;
    auto f = [&](const mpz_class& v) {
      mpz_class t = v * v + c;
      return mpz_class(t % n);
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          mpz_class diff = abs(x - y);
          q = (q * diff) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(mpz_class(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    ++out[n];
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class r = sqrt(n);
    factor_into(r, out);
    factor_into(r, out);
    return;
  }
  mpz_class f = find_factor(n);
  factor_into(f, out);
  factor_into(mpz_class(n / f), out);
}

}  // namespace

void square_free_decompose(const mpz_class& n, mpz_class& s, mpz_class& d) {
  if (n <= 0) throw PreconditionError("square_free_decompose needs n > 0");
  s = 1;
  d = 1;
  mpz_class rest = n;
  for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
    mpz_class pp(p);
    if (pp * pp * pp > rest) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) d *= p;
  }
  if (rest == 1) return;
  std::map<mpz_class, unsigned> factors;
  factor_into(rest, factors);
  for (const auto& [p, e] : factors) {
    for (unsigned i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) d *= p;
  }
}

QuadSurd::QuadSurd(Rational a) : a_(std::move(a)), d_(1) {}

QuadSurd::QuadSurd(Rational a, Rational b, const mpz_class& d) : a_(std::move(a)) {
  if (d <= 0) throw PreconditionError("surd radicand must be positive");
  mpz_class s, sf;
  square_free_decompose(d, s, sf);
  if (sf == 1) {
    a_ += b * Rational(s, mpz_class(1));
    b_ = Rational();
    d_ = 1;
  } else if (b.is_zero()) {
    d_ = 1;
  } else {
    b_ = b * Rational(s, mpz_class(1));
    d_ = sf;
  }
}

QuadSurd QuadSurd::sqrt_of(const Rational& r) {
  if (r.sign() < 0) throw DomainError("square root of a negative rational");
  if (r.is_zero()) return QuadSurd();
  // sqrt(p/q) = sqrt(p*q) / q
  mpz_class pq = r.num() * r.den();
  return QuadSurd(Rational(), Rational(mpz_class(1), r.den()), pq);
}

int QuadSurd::sign() const {
  int sa = a_.sign(), sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 d; never equal since d is not a square
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(d_, mpz_class(1));
  return lhs > rhs ? sa : sb;
}

QuadSurd QuadSurd::conjugate() const {
  QuadSurd r = *this;
  r.b_ = -b_;
  return r;
}

QuadSurd QuadSurd::operator-() const {
  QuadSurd r = *this;
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

QuadSurd QuadSurd::inverse() const {
  if (is_rational()) return QuadSurd(a_.inverse());
  // 1/(a + b r) = (a - b r) / (a^2 - b^2 d)
  Rational norm = a_ * a_ - b_ * b_ * Rational(d_, mpz_class(1));
  if (norm.is_zero()) throw DivisionByZero();
  QuadSurd r;
  r.a_ = a_ / norm;
  r.b_ = -b_ / norm;
  r.d_ = d_;
  return r;
}

namespace {

const mpz_class& common_radicand(const QuadSurd& x, const QuadSurd& y) {
  if (x.is_rational()) return y.d();
  if (y.is_rational() || x.d() == y.d()) return x.d();
  throw IncompatibleRadicands();
}

}  // namespace

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
  const mpz_class& d = common_radicand(x, y);
  QuadSurd r;
  r.a_ = x.a_ + y.a_;
  r.b_ = x.b_ + y.b_;
  r.d_ = r.b_.is_zero() ? mpz_class(1) : d;
  return r;
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
  const mpz_class& d = common_radicand(x, y);
  Rational dd(d, mpz_class(1));
  QuadSurd r;
  r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * dd;
  r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  r.d_ = r.b_.is_zero() ? mpz_class(1) : d;
  return r;
}

int compare(const QuadSurd& x, const QuadSurd& y) {
  if (x.is_rational() || y.is_rational() || x.d_ == y.d_) return (x - y).sign();
  // sign(u + v) with u = (x.a - y.a) + x.b sqrt(x.d) and v = -y.b sqrt(y.d)
  QuadSurd u(x.a_ - y.a_, x.b_, x.d_);
  int su = u.sign();
  int sv = -y.b_.sign();
  if (su == 0) return sv;
  if (su == sv) return su;
  // |u| vs |v| through u^2 - v^2, which lives in Q(sqrt(x.d))
  QuadSurd u2 = u * u;
  Rational v2 = y.b_ * y.b_ * Rational(y.d_, mpz_class(1));
  int s = (u2 - QuadSurd(v2)).sign();
  if (s == 0) throw InternalInconsistency("distinct radicands produced equal magnitudes");
  return s > 0 ? su : sv;
}

std::string QuadSurd::str() const {
  if (is_rational()) return a_.str();
  return a_.str() + " + (" + b_.str() + ")*sqrt(" + d_.get_str() + ")";
}

double QuadSurd::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(d_.get_d());
}

}  // namespace plg
