#pragma once

#include <compare>

#include "polysec/scalar.hpp"

namespace polysec {

// Affine point of the Euclidean plane.
struct Point2 {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

// Lexicographic order (x first, then y).
bool lex_less(const Point2& a, const Point2& b);

Point2 operator+(const Point2& a, const Point2& b);
Point2 operator-(const Point2& a, const Point2& b);
Point2 operator*(const Scalar& s, const Point2& p);

// Signed doubled area of the triangle (a, b, c); positive when
// counterclockwise.
Scalar orient(const Point2& a, const Point2& b, const Point2& c);

// Raw homogeneous triple. Points and lines of the projective plane are
// wrapped in distinct types below so they cannot be mixed up.
struct Vec3 {
  Scalar x;
  Scalar y;
  Scalar w;

  bool is_zero() const { return x == 0 && y == 0 && w == 0; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

Vec3 cross(const Vec3& a, const Vec3& b);
Scalar dot(const Vec3& a, const Vec3& b);
Scalar det3(const Vec3& a, const Vec3& b, const Vec3& c);
bool proportional(const Vec3& a, const Vec3& b);

class ProjPoint {
 public:
  // Throws Error(BadParameters) for the zero triple. Finite points are
  // stored in the lift with w > 0, so sign-sensitive predicates see a
  // consistent affine representative.
  ProjPoint(Scalar x, Scalar y, Scalar w);
  explicit ProjPoint(const Vec3& h) : ProjPoint(h.x, h.y, h.w) {}
  explicit ProjPoint(const Point2& p) : ProjPoint(p.x, p.y, Scalar(1)) {}

  const Vec3& h() const { return h_; }
  const Scalar& x() const { return h_.x; }
  const Scalar& y() const { return h_.y; }
  const Scalar& w() const { return h_.w; }

  // Projective equality: the triples are proportional.
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return proportional(a.h_, b.h_);
  }

 private:
  Vec3 h_;
};

class ProjLine {
 public:
  ProjLine(Scalar a, Scalar b, Scalar c);
  explicit ProjLine(const Vec3& h) : ProjLine(h.x, h.y, h.w) {}

  const Vec3& h() const { return h_; }

  friend bool operator==(const ProjLine& a, const ProjLine& b) {
    return proportional(a.h_, b.h_);
  }

  static ProjLine at_infinity() { return {Scalar(0), Scalar(0), Scalar(1)}; }

 private:
  Vec3 h_;
};

// p x q. Throws Error(DegenerateJoin) when p and q coincide projectively.
ProjLine join(const ProjPoint& p, const ProjPoint& q);
// l1 x l2, possibly at infinity. Throws Error(DegenerateMeet) when l1 = l2.
ProjPoint meet(const ProjLine& l1, const ProjLine& l2);

Scalar det3(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);
Scalar det3(const ProjLine& a, const ProjLine& b, const ProjLine& c);

// Value of the line's linear form at the point's representative.
Scalar evaluate(const ProjLine& l, const ProjPoint& p);
inline bool incident(const ProjPoint& p, const ProjLine& l) {
  return evaluate(l, p) == 0;
}

inline bool is_finite(const ProjPoint& p) { return p.w() != 0; }
// (x/w, y/w). Throws Error(AtInfinity) when w = 0.
Point2 dehomogenize(const ProjPoint& p);

}  // namespace polysec
