#include "plg/mat2.hpp"

#include "plg/errors.hpp"

namespace plg {

Mat2 Mat2::inverse() const {
  Rational dt = det();
  if (dt.is_zero()) throw PreconditionError("inverse of a singular matrix");
  Rational s = dt.inverse();
  return {s * d, -(s * b), -(s * c), s * a};
}

Mat2 Mat2::projective_normal() const {
  if (a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero()) return *this;
  std::array<const Rational*, 4> e{&a, &b, &c, &d};
  mpz_class l = 1;
  for (auto* r : e) l = lcm(l, r->den());
  std::array<mpz_class, 4> z;
  mpz_class g = 0;
  for (int i = 0; i < 4; ++i) {
    z[i] = e[i]->num() * (l / e[i]->den());
    g = gcd(g, z[i]);
  }
  int lead = 0;
  while (z[lead] == 0) ++lead;
  if (z[lead] < 0) g = -g;
  return {Rational(z[0] / g, 1), Rational(z[1] / g, 1), Rational(z[2] / g, 1),
          Rational(z[3] / g, 1)};
}

std::string Mat2::str() const {
  return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
}

}  // namespace plg
