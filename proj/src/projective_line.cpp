#include "plg/projective_line.hpp"

#include "plg/errors.hpp"

namespace plg {

ProjPoint ProjPoint::homogeneous(const Rational& p, const Rational& q) {
  if (q.is_zero()) {
    if (p.is_zero()) throw PreconditionError("[0:0] is not a projective point");
    return infinity();
  }
  return ProjPoint(p / q);
}

ProjPoint ProjPoint::parse(const std::string& s) {
  if (s == "inf") return infinity();
  return ProjPoint(Rational::parse(s));
}

ProjPoint mobius(const Mat2& m, const ProjPoint& z) {
  if (m.det().is_zero()) throw PreconditionError("singular matrix acting on the projective line");
  if (z.is_inf()) return ProjPoint::homogeneous(m.a, m.c);
  return ProjPoint::homogeneous(m.a * z.x() + m.b, m.c * z.x() + m.d);
}

ProjArc make_arc(ProjPoint from, ProjPoint to, bool from_closed, bool to_closed) {
  if (from == to) throw PreconditionError("arc endpoints must differ");
  return {std::move(from), std::move(to), from_closed, to_closed};
}

bool ProjArc::contains_interior(const ProjPoint& z) const {
  return z != from && z != to && cyclic_rank(from, z) < cyclic_rank(from, to);
}

bool ProjArc::contains(const ProjPoint& z) const {
  if (z == from) return from_closed;
  if (z == to) return to_closed;
  return contains_interior(z);
}

ProjPoint ProjArc::interior_point() const {
  if (from.is_inf()) return ProjPoint(to.x() - 1);
  if (to.is_inf()) return ProjPoint(from.x() + 1);
  if (from.x() < to.x()) return ProjPoint(midpoint(from.x(), to.x()));
  return ProjPoint::infinity();
}

std::string ProjArc::str() const {
  return std::string(from_closed ? "[" : "(") + from.str() + ", " + to.str() + (to_closed ? "]" : ")");
}

bool arc_subset(const ProjArc& a, const ProjArc& b) {
  auto endpoint_ok = [&](const ProjPoint& z, bool closed) {
    return closed ? b.contains(z) : (b.contains(z) || z == b.from || z == b.to);
  };
  if (!endpoint_ok(a.from, a.from_closed) || !endpoint_ok(a.to, a.to_closed)) return false;
  if (a.from == b.to || a.to == b.from) return false;
  return cyclic_rank(b.from, a.from) < cyclic_rank(b.from, a.to);
}

bool interiors_disjoint(const ProjArc& a, const ProjArc& b) {
  if (a.from == b.from && a.to == b.to) return false;
  return !a.contains_interior(b.from) && !a.contains_interior(b.to) &&
         !b.contains_interior(a.from) && !b.contains_interior(a.to) &&
         !b.contains_interior(a.interior_point());
}

bool arcs_disjoint(const ProjArc& a, const ProjArc& b) {
  if (!interiors_disjoint(a, b)) return false;
  for (const ProjPoint* z : {&a.from, &a.to, &b.from, &b.to}) {
    if (a.contains(*z) && b.contains(*z)) return false;
  }
  return true;
}

}  // namespace plg
