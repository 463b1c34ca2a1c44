#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "polysec/projective.hpp"

namespace polysec {

// Strictly convex polygon with vertices labeled clockwise: for every i the
// triangle (p_{i+2}, p_{i+1}, p_i) is positively oriented. Indices are taken
// modulo n and may be negative.
class Polygon {
 public:
  // Keeps the given labeling. Throws TooFewVertices, DuplicateVertex or
  // NotConvex (which also covers counterclockwise input).
  static Polygon from_clockwise(std::vector<Point2> vertices);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point2>& vertices() const { return vertices_; }
  const Point2& vertex(long i) const { return vertices_[wrap(i)]; }
  ProjPoint lifted(long i) const { return ProjPoint(vertex(i)); }

  std::size_t wrap(long i) const;

  // Result's vertex(i) is this->vertex(i + shift).
  Polygon rotated(long shift) const;
  // Rotation putting the lexicographically smallest vertex at index 0.
  Polygon canonical() const;

  // Line through p_i and p_{i+1}.
  ProjLine edge_line(long i) const { return join(lifted(i), lifted(i + 1)); }

  // Closed containment test.
  bool contains(const Point2& q) const;
  bool strictly_contains(const Point2& q) const;

  // Exact label-by-label equality.
  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  explicit Polygon(std::vector<Point2> v) : vertices_(std::move(v)) {}
  std::vector<Point2> vertices_;
};

// Vertices of the convex hull of the points, collinear boundary points
// dropped, listed clockwise from the lexicographically smallest point. Input
// may contain duplicates. Fewer than three points come back when the input
// is degenerate.
std::vector<Point2> strict_convex_hull(std::vector<Point2> points);

// Accepts the vertices of a strictly convex polygon in any order and
// orientation and returns the canonical labeling (clockwise, lexicographically
// smallest vertex first).
Polygon validate(std::span<const Point2> points);

// Invertible projective map of the plane acting on homogeneous column
// vectors.
class ProjMap2 {
 public:
  using Rows = std::array<std::array<Scalar, 3>, 3>;

  // Throws Error(SingularMap) when det = 0.
  explicit ProjMap2(Rows m);

  static ProjMap2 identity();
  static ProjMap2 translation(const Scalar& dx, const Scalar& dy);

  const Scalar& operator()(std::size_t r, std::size_t c) const { return m_[r][c]; }
  const Rows& rows() const { return m_; }

  Vec3 apply(const Vec3& v) const;
  ProjPoint apply(const ProjPoint& p) const { return ProjPoint(apply(p.h())); }
  ProjPoint apply(const Point2& p) const { return apply(ProjPoint(p)); }

  // The line sent to infinity: the third row.
  ProjLine line_to_infinity() const { return ProjLine(m_[2][0], m_[2][1], m_[2][2]); }
  bool is_affine() const { return m_[2][0] == 0 && m_[2][1] == 0 && m_[2][2] != 0; }

  Scalar det() const;
  ProjMap2 inverse() const;

  // (a * b)(p) = a(b(p)).
  friend ProjMap2 operator*(const ProjMap2& a, const ProjMap2& b);
  friend bool operator==(const ProjMap2&, const ProjMap2&) = default;

 private:
  Rows m_;
};

// Vertexwise image. Throws MapsVertexToInfinity when some vertex goes to
// infinity and ImageNotConvex when the line sent to infinity separates
// vertices. An orientation-reversing map relabels i -> -i so the result is
// clockwise with the image of p_0 still at index 0.
Polygon apply_map(const Polygon& polygon, const ProjMap2& map);

// Map sending `line` to infinity with all vertices of the polygon landing at
// w > 0. The third row is +/- the line; the other two rows are the standard
// basis rows for the coordinates other than the line's last nonzero one.
// Throws LineMeetsPolygon unless every vertex lies strictly on one side.
ProjMap2 map_line_to_infinity(const ProjLine& line, const Polygon& polygon);

// The affine map carrying src[k] to dst[k]. All six points must be finite;
// throws DegenerateTriple when either triple is collinear.
ProjMap2 affine_through_three(std::span<const ProjPoint, 3> src,
                              std::span<const ProjPoint, 3> dst);

}  // namespace polysec
