#include "polysec/projective.hpp"

#include <utility>

#include "polysec/error.hpp"

namespace polysec {

bool lex_less(const Point2& a, const Point2& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
Point2 operator*(const Scalar& s, const Point2& p) { return {s * p.x, s * p.y}; }

Scalar orient(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.w - a.w * b.y, a.w * b.x - a.x * b.w, a.x * b.y - a.y * b.x};
}

Scalar dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.w * b.w; }

Scalar det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

bool proportional(const Vec3& a, const Vec3& b) { return cross(a, b).is_zero(); }

ProjPoint::ProjPoint(Scalar x, Scalar y, Scalar w)
    : h_{std::move(x), std::move(y), std::move(w)} {
  if (h_.is_zero()) throw Error(Errc::BadParameters, "zero homogeneous point");
  if (h_.w < 0) {
    h_.x = -h_.x;
    h_.y = -h_.y;
    h_.w = -h_.w;
  }
}

ProjLine::ProjLine(Scalar a, Scalar b, Scalar c)
    : h_{std::move(a), std::move(b), std::move(c)} {
  if (h_.is_zero()) throw Error(Errc::BadParameters, "zero homogeneous line");
}

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  Vec3 l = cross(p.h(), q.h());
  if (l.is_zero()) throw Error(Errc::DegenerateJoin, "join of coincident points");
  return ProjLine(l);
}

ProjPoint meet(const ProjLine& l1, const ProjLine& l2) {
  Vec3 p = cross(l1.h(), l2.h());
  if (p.is_zero()) throw Error(Errc::DegenerateMeet, "meet of coincident lines");
  return ProjPoint(p);
}

Scalar det3(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  return det3(a.h(), b.h(), c.h());
}

Scalar det3(const ProjLine& a, const ProjLine& b, const ProjLine& c) {
  return det3(a.h(), b.h(), c.h());
}

Scalar evaluate(const ProjLine& l, const ProjPoint& p) { return dot(l.h(), p.h()); }

Point2 dehomogenize(const ProjPoint& p) {
  if (p.w() == 0) throw Error(Errc::AtInfinity, "point at infinity has no affine coordinates");
  return {p.x() / p.w(), p.y() / p.w()};
}

}  // namespace polysec
