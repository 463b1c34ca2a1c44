#include "polysec/compose.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <string>

#include "polysec/error.hpp"
#include "polysec/heptagon.hpp"

namespace polysec {
namespace {

void require_certified(const SectionedPolytope& s) {
  if (!s.certified) throw Error(Errc::IncompatibleSections, "convex join needs certified inputs");
  if (s.dim < 2) throw Error(Errc::IncompatibleSections, "section dimension below 2");
}

Polygon hull_polygon(std::vector<Point2> pts) {
  auto hull = strict_convex_hull(std::move(pts));
  if (hull.size() < 3) throw Error(Errc::IncompatibleSections, "joined section is degenerate");
  return Polygon::from_clockwise(std::move(hull));
}

void push_unique(std::vector<PointD>& out, PointD p) {
  if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
}

Polygon chunk_polygon(const Polygon& p, const Chunk& c) {
  std::vector<Point2> v(p.vertices().begin() + static_cast<long>(c.start),
                        p.vertices().begin() + static_cast<long>(c.start + c.size));
  return Polygon::from_clockwise(std::move(v));
}

SectionedPolytope fold_chunks(const Polygon& canon, const std::vector<Chunk>& plan,
                              std::vector<SectionedPolytope>& parts) {
  SectionedPolytope acc = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) acc = convex_join_sections(acc, parts[k]);
  const Chunk& last = plan.back();
  if (last.size < 7) {
    std::vector<Point2> rest(canon.vertices().begin() + static_cast<long>(last.start), canon.vertices().end());
    acc = convex_join_points(acc, rest);
  }
  return acc;
}

SectionedPolytope finish_ngon(const Polygon& p, SectionedPolytope acc) {
  const long n = static_cast<long>(p.size());
  const int want_dim = 2 + static_cast<int>(n / 7);
  const long max_vertices = (6 * n + 6) / 7;
  if (acc.dim > want_dim || static_cast<long>(acc.vertices.size()) > max_vertices) {
    throw Error(Errc::CertificationFailure,
                "n-gon extension has dimension " + std::to_string(acc.dim) + " and " +
                    std::to_string(acc.vertices.size()) + " vertices");
  }
  acc.claimed = p;
  return certify(std::move(acc));
}

void require_ngon(const Polygon& p) {
  if (p.size() < 7) {
    throw Error(Errc::TooFewVerticesForConstruction, "construction needs at least 7 vertices");
  }
}

}  // namespace

long lower_bound_3d(long n) {
  if (n < 3) throw Error(Errc::BadParameters, "n must be at least 3");
  return (n + 5) / 2;
}

std::vector<Chunk> plan_chunks(std::size_t n) {
  std::vector<Chunk> out;
  std::size_t start = 0;
  for (; start + 7 <= n; start += 7) out.push_back({start, 7});
  if (start < n) out.push_back({start, n - start});
  return out;
}

SectionedPolytope ngon_3d_extension(const Polygon& p, const ExtensionOptions& opts) {
  require_ngon(p);
  std::vector<std::size_t> drop;
  for (std::size_t i = p.size(); i-- > 7;) drop.push_back(i);
  return ngon_3d_extension(p, drop, opts);
}

SectionedPolytope ngon_3d_extension(const Polygon& p, std::span<const std::size_t> drop_order,
                                    const ExtensionOptions& opts) {
  require_ngon(p);
  const Polygon canon = p.canonical();
  const std::size_t n = canon.size();
  if (drop_order.size() != n - 7) {
    throw Error(Errc::BadParameters, "drop order must list exactly n - 7 vertices");
  }
  std::vector<bool> dropped(n, false);
  for (std::size_t i : drop_order) {
    if (i >= n || dropped[i]) throw Error(Errc::BadParameters, "drop order has a bad or repeated index");
    dropped[i] = true;
  }
  std::vector<Point2> base;
  for (std::size_t i = 0; i < n; ++i) {
    if (!dropped[i]) base.push_back(canon.vertex(static_cast<long>(i)));
  }
  SectionedPolytope out = heptagon_extension(Polygon::from_clockwise(std::move(base)), opts);
  // Re-adding in reverse drop order mirrors the recursion; the hull is the
  // same either way.
  for (auto it = drop_order.rbegin(); it != drop_order.rend(); ++it) {
    const Point2& v = canon.vertex(static_cast<long>(*it));
    out.vertices.push_back({v.x, v.y, 0});
  }
  out.claimed = p;
  out.certified = false;
  out = certify(std::move(out));
  if (out.vertices.size() + 1 > n) {
    throw Error(Errc::CertificationFailure, "3-dimensional extension has too many vertices");
  }
  return out;
}

SectionedPolytope convex_join_sections(const SectionedPolytope& s1, const SectionedPolytope& s2) {
  require_certified(s1);
  require_certified(s2);
  const int d1 = s1.dim;
  const int d2 = s2.dim;
  const int d = d1 + d2 - 2;
  std::vector<PointD> verts;
  for (const auto& q : s1.vertices) {
    PointD x(static_cast<std::size_t>(d), Scalar(0));
    std::copy(q.begin(), q.end(), x.begin());
    push_unique(verts, std::move(x));
  }
  for (const auto& q : s2.vertices) {
    PointD x(static_cast<std::size_t>(d), Scalar(0));
    x[0] = q[0];
    x[1] = q[1];
    std::copy(q.begin() + 2, q.end(), x.begin() + d1);
    push_unique(verts, std::move(x));
  }
  std::vector<Point2> pts = s1.claimed.vertices();
  pts.insert(pts.end(), s2.claimed.vertices().begin(), s2.claimed.vertices().end());
  return certify(SectionedPolytope{d, std::move(verts), hull_polygon(std::move(pts))});
}

SectionedPolytope convex_join_points(const SectionedPolytope& s1, std::span<const Point2> points) {
  require_certified(s1);
  std::vector<PointD> verts = s1.vertices;
  for (const auto& p : points) {
    PointD x(static_cast<std::size_t>(s1.dim), Scalar(0));
    x[0] = p.x;
    x[1] = p.y;
    push_unique(verts, std::move(x));
  }
  std::vector<Point2> pts = s1.claimed.vertices();
  pts.insert(pts.end(), points.begin(), points.end());
  return certify(SectionedPolytope{s1.dim, std::move(verts), hull_polygon(std::move(pts))});
}

SectionedPolytope ngon_extension(const Polygon& p, const ExtensionOptions& opts) {
  require_ngon(p);
  const Polygon canon = p.canonical();
  const auto plan = plan_chunks(canon.size());
  const std::size_t full = canon.size() / 7;

  std::vector<std::optional<SectionedPolytope>> slots(full);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < full; ++k) {
    try {
      slots[k] = heptagon_extension(chunk_polygon(canon, plan[k]), opts);
    } catch (...) {
#pragma omp critical(polysec_ngon_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<SectionedPolytope> parts;
  parts.reserve(full);
  for (auto& s : slots) parts.push_back(std::move(*s));
  return finish_ngon(p, fold_chunks(canon, plan, parts));
}

SectionedPolytope ngon_extension_serial(const Polygon& p, const ExtensionOptions& opts) {
  require_ngon(p);
  const Polygon canon = p.canonical();
  const auto plan = plan_chunks(canon.size());
  std::vector<SectionedPolytope> parts;
  for (std::size_t k = 0; k < canon.size() / 7; ++k) {
    parts.push_back(heptagon_extension(chunk_polygon(canon, plan[k]), opts));
  }
  return finish_ngon(p, fold_chunks(canon, plan, parts));
}

SectionedPolytope optimal_even_gon(int m) {
  if (m < 2) throw Error(Errc::BadParameters, "m must be at least 2");
  std::vector<Point2> inner;
  std::vector<Scalar> beta;
  for (int k = 0; k < m; ++k) {
    const Scalar s = Scalar(k) / (m - 1);
    const Scalar t = 1 - s;
    inner.push_back({s * s, t * t});
    beta.push_back(2 * (1 + s * t) / (s * s + t * t));
  }
  const Scalar big_k = *std::max_element(beta.begin(), beta.end()) + 1;

  std::vector<PointD> verts = {{0, 0, -big_k}, {0, 0, -1}};
  std::vector<Point2> section = inner;
  for (std::size_t k = 0; k < inner.size(); ++k) {
    const Scalar& b = beta[k];
    const Scalar den = big_k - b;
    verts.push_back({inner[k].x * (big_k - 1) * b / den, inner[k].y * (big_k - 1) * b / den,
                     big_k * (b - 1) / den});
    section.push_back(b * inner[k]);
  }
  Polygon claimed = validate(section);
  if (claimed.size() != 2 * static_cast<std::size_t>(m)) {
    throw Error(Errc::CertificationFailure, "even-gon construction lost a vertex");
  }
  return certify(SectionedPolytope{3, std::move(verts), std::move(claimed)});
}

}  // namespace polysec
