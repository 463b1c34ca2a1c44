#include "polysec/polygon.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "polysec/error.hpp"

namespace polysec {

Polygon Polygon::from_clockwise(std::vector<Point2> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) throw Error(Errc::TooFewVertices, "a polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (vertices[i] == vertices[j]) {
        throw Error(Errc::DuplicateVertex, "vertices " + std::to_string(i) + " and " +
                                               std::to_string(j) + " coincide");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices[i];
    const auto& b = vertices[(i + 1) % n];
    const auto& c = vertices[(i + 2) % n];
    // Clockwise means (c, b, a) is counterclockwise.
    if (orient(c, b, a) <= 0) {
      throw Error(Errc::NotConvex, "turn at vertex " + std::to_string((i + 1) % n) +
                                       " is not a strict clockwise turn");
    }
  }
  // Local clockwise turns only guarantee convexity when the boundary winds
  // once; check that every vertex is on the inner side of every edge.
  Polygon p(std::move(vertices));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || k == (i + 1) % n) continue;
      if (orient(p.vertex(static_cast<long>(i)), p.vertex(static_cast<long>(i) + 1),
                 p.vertices_[k]) >= 0) {
        throw Error(Errc::NotConvex, "boundary is not simple");
      }
    }
  }
  return p;
}

std::size_t Polygon::wrap(long i) const {
  const long n = static_cast<long>(vertices_.size());
  return static_cast<std::size_t>(((i % n) + n) % n);
}

Polygon Polygon::rotated(long shift) const {
  std::vector<Point2> v;
  v.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) v.push_back(vertex(static_cast<long>(i) + shift));
  return Polygon(std::move(v));
}

Polygon Polygon::canonical() const {
  const auto it = std::min_element(vertices_.begin(), vertices_.end(), lex_less);
  return rotated(static_cast<long>(it - vertices_.begin()));
}

bool Polygon::contains(const Point2& q) const {
  for (std::size_t i = 0; i < size(); ++i) {
    const long k = static_cast<long>(i);
    if (orient(vertex(k), vertex(k + 1), q) > 0) return false;
  }
  return true;
}

bool Polygon::strictly_contains(const Point2& q) const {
  for (std::size_t i = 0; i < size(); ++i) {
    const long k = static_cast<long>(i);
    if (orient(vertex(k), vertex(k + 1), q) >= 0) return false;
  }
  return true;
}

std::vector<Point2> strict_convex_hull(std::vector<Point2> points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t n = points.size();
  if (n < 3) return points;

  // Andrew's monotone chain. Lower chain left to right, then upper chain
  // right to left, both keeping strict left turns only; the result is
  // counterclockwise and is reversed at the end.
  std::vector<Point2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) return hull;
  // hull[0] is the lexicographic minimum; reverse the tail for clockwise.
  std::reverse(hull.begin() + 1, hull.end());
  return hull;
}

Polygon validate(std::span<const Point2> points) {
  if (points.size() < 3) throw Error(Errc::TooFewVertices, "a polygon needs at least 3 vertices");
  std::vector<Point2> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), lex_less);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::DuplicateVertex, "duplicate vertex in input");
  }
  auto hull = strict_convex_hull(std::move(sorted));
  if (hull.size() != points.size()) {
    throw Error(Errc::NotConvex, "points are not in strictly convex position (" +
                                     std::to_string(points.size() - hull.size()) +
                                     " interior or collinear)");
  }
  return Polygon::from_clockwise(std::move(hull));
}

ProjMap2::ProjMap2(Rows m) : m_(std::move(m)) {
  if (det() == 0) throw Error(Errc::SingularMap, "projective map is singular");
}

ProjMap2 ProjMap2::identity() {
  return ProjMap2(Rows{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
}

ProjMap2 ProjMap2::translation(const Scalar& dx, const Scalar& dy) {
  return ProjMap2(Rows{{{1, 0, dx}, {0, 1, dy}, {0, 0, 1}}});
}

Vec3 ProjMap2::apply(const Vec3& v) const {
  return {m_[0][0] * v.x + m_[0][1] * v.y + m_[0][2] * v.w,
          m_[1][0] * v.x + m_[1][1] * v.y + m_[1][2] * v.w,
          m_[2][0] * v.x + m_[2][1] * v.y + m_[2][2] * v.w};
}

Scalar ProjMap2::det() const {
  const Vec3 r0{m_[0][0], m_[0][1], m_[0][2]};
  const Vec3 r1{m_[1][0], m_[1][1], m_[1][2]};
  const Vec3 r2{m_[2][0], m_[2][1], m_[2][2]};
  return det3(r0, r1, r2);
}

ProjMap2 ProjMap2::inverse() const {
  const Scalar d = det();
  Rows inv;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      // Adjugate entry (r, c) is the cofactor of (c, r).
      const int r0 = (c + 1) % 3, r1 = (c + 2) % 3;
      const int c0 = (r + 1) % 3, c1 = (r + 2) % 3;
      inv[r][c] = (m_[r0][c0] * m_[r1][c1] - m_[r0][c1] * m_[r1][c0]) / d;
    }
  }
  return ProjMap2(std::move(inv));
}

ProjMap2 operator*(const ProjMap2& a, const ProjMap2& b) {
  ProjMap2::Rows out;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      out[r][c] = a.m_[r][0] * b.m_[0][c] + a.m_[r][1] * b.m_[1][c] + a.m_[r][2] * b.m_[2][c];
    }
  }
  return ProjMap2(std::move(out));
}

Polygon apply_map(const Polygon& polygon, const ProjMap2& map) {
  const std::size_t n = polygon.size();
  std::vector<Vec3> images;
  images.reserve(n);
  int side = 0;
  for (const auto& v : polygon.vertices()) {
    Vec3 h = map.apply(Vec3{v.x, v.y, Scalar(1)});
    const int s = sign(h.w);
    if (s == 0) throw Error(Errc::MapsVertexToInfinity, "a vertex is sent to infinity");
    if (side != 0 && s != side) {
      throw Error(Errc::ImageNotConvex, "the line sent to infinity crosses the polygon");
    }
    side = s;
    images.push_back(std::move(h));
  }
  std::vector<Point2> pts;
  pts.reserve(n);
  for (const auto& h : images) pts.push_back({h.x / h.w, h.y / h.w});
  // Orientation of the image is that of any consecutive triple.
  if (orient(pts[2], pts[1], pts[0]) < 0) {
    std::vector<Point2> flipped;
    flipped.reserve(n);
    for (std::size_t i = 0; i < n; ++i) flipped.push_back(pts[(n - i) % n]);
    pts = std::move(flipped);
  }
  try {
    return Polygon::from_clockwise(std::move(pts));
  } catch (const Error& e) {
    throw Error(Errc::ImageNotConvex, std::string("image rejected: ") + e.what());
  }
}

ProjMap2 map_line_to_infinity(const ProjLine& line, const Polygon& polygon) {
  int side = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const int s = sign(evaluate(line, polygon.lifted(static_cast<long>(i))));
    if (s == 0 || (side != 0 && s != side)) {
      throw Error(Errc::LineMeetsPolygon, "line meets the polygon");
    }
    side = s;
  }
  const Vec3& l = line.h();
  const std::array<Scalar, 3> coords{l.x, l.y, l.w};
  int pivot = 2;
  while (coords[static_cast<std::size_t>(pivot)] == 0) --pivot;
  ProjMap2::Rows rows{};
  std::size_t r = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    if (static_cast<int>(k) == pivot) continue;
    rows[r][k] = 1;
    ++r;
  }
  for (std::size_t k = 0; k < 3; ++k) rows[2][k] = side * coords[k];
  return ProjMap2(std::move(rows));
}

ProjMap2 affine_through_three(std::span<const ProjPoint, 3> src,
                              std::span<const ProjPoint, 3> dst) {
  auto columns = [](std::span<const ProjPoint, 3> pts) {
    ProjMap2::Rows m{};
    for (std::size_t k = 0; k < 3; ++k) {
      const Point2 p = dehomogenize(pts[k]);
      m[0][k] = p.x;
      m[1][k] = p.y;
      m[2][k] = 1;
    }
    return m;
  };
  try {
    const ProjMap2 s(columns(src));
    const ProjMap2 d(columns(dst));
    return d * s.inverse();
  } catch (const Error& e) {
    if (e.code() != Errc::SingularMap) throw;
    throw Error(Errc::DegenerateTriple, "affine frame points are collinear");
  }
}

}  // namespace polysec
