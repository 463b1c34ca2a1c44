#include "polysec/sections.hpp"

#include <algorithm>
#include <exception>
#include <utility>

#include "combinations.hpp"
#include "polysec/error.hpp"

namespace polysec {
namespace {

void check_dims(std::span<const PointD> vertices, int dim) {
  if (dim < 2) throw Error(Errc::BadParameters, "dimension must be at least 2");
  for (const auto& v : vertices) {
    if (v.size() != static_cast<std::size_t>(dim)) {
      throw Error(Errc::BadParameters, "vertex has wrong number of coordinates");
    }
  }
}

std::size_t max_subset_size(std::size_t n, int dim) {
  return std::min(n, static_cast<std::size_t>(dim - 1));
}

std::size_t count_subsets(std::size_t n, std::size_t max_size, std::size_t cap) {
  std::size_t total = 0;
  for (std::size_t k = 1; k <= max_size; ++k) {
    total += detail::binomial_capped(n, k, cap);
    if (total > cap) return cap + 1;
  }
  return total;
}

// The unique point of conv(subset) n H, if the subset's (x_3..x_d, 1)
// columns are independent and the barycentric solution is nonnegative.
std::optional<Point2> subset_section_point(std::span<const PointD> vertices, int dim,
                                           const std::vector<std::size_t>& subset) {
  const std::size_t eqs = static_cast<std::size_t>(dim - 1);
  Matrix a(eqs, subset.size());
  std::vector<Scalar> rhs(eqs);
  for (std::size_t c = 0; c < subset.size(); ++c) {
    const PointD& q = vertices[subset[c]];
    for (std::size_t r = 0; r + 1 < eqs; ++r) a(r, c) = q[r + 2];
    a(eqs - 1, c) = 1;
  }
  rhs[eqs - 1] = 1;
  auto lambda = solve_unique(a, rhs);
  if (!lambda) return std::nullopt;
  Point2 p{0, 0};
  for (std::size_t c = 0; c < subset.size(); ++c) {
    const Scalar& l = (*lambda)[c];
    if (l < 0) return std::nullopt;
    p.x += l * vertices[subset[c]][0];
    p.y += l * vertices[subset[c]][1];
  }
  return p;
}

SectionHull hull_of(std::vector<Point2> candidates) {
  if (candidates.empty()) throw Error(Errc::EmptySection, "polytope does not meet the flat");
  return SectionHull{strict_convex_hull(std::move(candidates))};
}

// Barycentric test: is target in conv(points[subset])?
bool in_subset_hull(const PointD& target, std::span<const PointD> points,
                    const std::vector<std::size_t>& subset, std::vector<Scalar>* weights) {
  const std::size_t d = target.size();
  Matrix a(d + 1, subset.size());
  std::vector<Scalar> rhs(d + 1);
  for (std::size_t c = 0; c < subset.size(); ++c) {
    for (std::size_t r = 0; r < d; ++r) a(r, c) = points[subset[c]][r];
    a(d, c) = 1;
  }
  for (std::size_t r = 0; r < d; ++r) rhs[r] = target[r];
  rhs[d] = 1;
  auto lambda = solve_unique(a, rhs);
  if (!lambda) return false;
  for (const auto& l : *lambda) {
    if (l < 0) return false;
  }
  if (weights) *weights = std::move(*lambda);
  return true;
}

bool in_hull_of_others(std::span<const PointD> points, std::size_t self, int dim) {
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i != self) others.push_back(i);
  }
  const std::size_t max_k = std::min(others.size(), static_cast<std::size_t>(dim + 1));
  for (std::size_t k = 1; k <= max_k; ++k) {
    const bool found = detail::for_each_combination(
        others.size(), k, [&](const std::vector<std::size_t>& pick) {
          std::vector<std::size_t> subset;
          subset.reserve(k);
          for (auto i : pick) subset.push_back(others[i]);
          return in_subset_hull(points[self], points, subset, nullptr);
        });
    if (found) return true;
  }
  return false;
}

std::vector<PointD> distinct_points(std::span<const PointD> points, int dim) {
  check_dims(points, dim);
  if (dim > 4 && points.size() > 64) {
    throw Error(Errc::ScaleExceeded, "extreme point search limited to d <= 4 or 64 points");
  }
  std::vector<PointD> out;
  for (const auto& p : points) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

}  // namespace

Polygon SectionHull::polygon() const {
  if (degenerate()) throw Error(Errc::DegenerateSection, "section is a point or a segment");
  return Polygon::from_clockwise(points);
}

std::vector<Point2> section_candidates(std::span<const PointD> vertices, int dim) {
  check_dims(vertices, dim);
  std::vector<Point2> out;
  for (const auto& s : detail::subsets_up_to(vertices.size(), max_subset_size(vertices.size(), dim))) {
    if (auto p = subset_section_point(vertices, dim, s)) out.push_back(std::move(*p));
  }
  return out;
}

SectionHull compute_section_serial(std::span<const PointD> vertices, int dim,
                                   std::size_t max_subsets) {
  check_dims(vertices, dim);
  const std::size_t kmax = max_subset_size(vertices.size(), dim);
  if (count_subsets(vertices.size(), kmax, max_subsets) > max_subsets) {
    throw Error(Errc::ScaleExceeded, "section enumeration too large");
  }
  std::vector<Point2> candidates;
  for (std::size_t k = 1; k <= kmax; ++k) {
    detail::for_each_combination(vertices.size(), k, [&](const std::vector<std::size_t>& s) {
      if (auto p = subset_section_point(vertices, dim, s)) candidates.push_back(std::move(*p));
      return false;
    });
  }
  return hull_of(std::move(candidates));
}

SectionHull compute_section(std::span<const PointD> vertices, int dim, std::size_t max_subsets) {
  check_dims(vertices, dim);
  const std::size_t kmax = max_subset_size(vertices.size(), dim);
  if (count_subsets(vertices.size(), kmax, max_subsets) > max_subsets) {
    throw Error(Errc::ScaleExceeded, "section enumeration too large");
  }
  const auto subsets = detail::subsets_up_to(vertices.size(), kmax);
  const long count = static_cast<long>(subsets.size());
  std::vector<std::optional<Point2>> found(subsets.size());
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 16) if (count > 256)
  for (long i = 0; i < count; ++i) {
    try {
      found[static_cast<std::size_t>(i)] =
          subset_section_point(vertices, dim, subsets[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(polysec_section_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<Point2> candidates;
  for (auto& p : found) {
    if (p) candidates.push_back(std::move(*p));
  }
  return hull_of(std::move(candidates));
}

SectionCheck check_section(const SectionedPolytope& s) {
  SectionHull hull;
  try {
    hull = compute_section(s.vertices, s.dim);
  } catch (const Error& e) {
    return {false, std::string(errc_name(e.code())) + ": " + e.what()};
  }
  if (hull.degenerate()) {
    return {false, "section is degenerate (" + std::to_string(hull.points.size()) + " points)"};
  }
  const auto expected = s.claimed.canonical().vertices();
  if (hull.points.size() != expected.size()) {
    return {false, "section has " + std::to_string(hull.points.size()) +
                       " vertices, claimed polygon has " + std::to_string(expected.size())};
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!(hull.points[i] == expected[i])) {
      return {false, "vertex " + std::to_string(i) + ": section has (" +
                         to_string(hull.points[i].x) + ", " + to_string(hull.points[i].y) +
                         "), claimed (" + to_string(expected[i].x) + ", " +
                         to_string(expected[i].y) + ")"};
    }
  }
  return {true, {}};
}

bool verify_section(SectionedPolytope& s) {
  s.certified = check_section(s).ok;
  return s.certified;
}

SectionedPolytope certify(SectionedPolytope s) {
  const auto check = check_section(s);
  if (!check.ok) throw Error(Errc::CertificationFailure, "section certificate failed: " + check.detail);
  s.certified = true;
  return s;
}

SectionedPolytope trivial_section(const Polygon& p, int dim) {
  if (dim < 2) throw Error(Errc::BadParameters, "dimension must be at least 2");
  SectionedPolytope s{dim, {}, p};
  for (const auto& v : p.vertices()) {
    PointD q(static_cast<std::size_t>(dim));
    q[0] = v.x;
    q[1] = v.y;
    s.vertices.push_back(std::move(q));
  }
  return certify(std::move(s));
}

std::vector<PointD> extreme_points_serial(std::span<const PointD> points, int dim) {
  const auto pts = distinct_points(points, dim);
  std::vector<PointD> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!in_hull_of_others(pts, i, dim)) out.push_back(pts[i]);
  }
  return out;
}

std::vector<PointD> extreme_points(std::span<const PointD> points, int dim) {
  const auto pts = distinct_points(points, dim);
  const long n = static_cast<long>(pts.size());
  std::vector<char> extreme(pts.size(), 0);
#pragma omp parallel for schedule(dynamic, 1) if (n > 8)
  for (long i = 0; i < n; ++i) {
    extreme[static_cast<std::size_t>(i)] = in_hull_of_others(pts, static_cast<std::size_t>(i), dim) ? 0 : 1;
  }
  std::vector<PointD> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (extreme[i]) out.push_back(pts[i]);
  }
  return out;
}

std::vector<Scalar> convex_coefficients(const PointD& target, std::span<const PointD> points) {
  if (points.empty()) throw Error(Errc::NotInPolytope, "no points");
  const int dim = static_cast<int>(target.size());
  check_dims(points, dim);
  const std::size_t max_k = std::min(points.size(), static_cast<std::size_t>(dim + 1));
  std::vector<Scalar> result;
  for (std::size_t k = 1; k <= max_k; ++k) {
    std::vector<Scalar> w;
    const bool found = detail::for_each_combination(
        points.size(), k, [&](const std::vector<std::size_t>& subset) {
          if (!in_subset_hull(target, points, subset, &w)) return false;
          result.assign(points.size(), Scalar(0));
          for (std::size_t c = 0; c < subset.size(); ++c) result[subset[c]] = w[c];
          return true;
        });
    if (found) return result;
  }
  throw Error(Errc::NotInPolytope, "point is not a convex combination of the given points");
}

std::vector<Scalar> MapD::apply_homogeneous(const PointD& p) const {
  const std::size_t d = static_cast<std::size_t>(dim);
  std::vector<Scalar> out(d + 1);
  for (std::size_t r = 0; r <= d; ++r) {
    Scalar acc = m(r, d);  // homogenizing input coordinate is 1
    for (std::size_t c = 0; c < d; ++c) {
      if (m(r, c) != 0) acc += m(r, c) * p[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

MapD lift_projective(const ProjMap2& t, int dim, std::span<const Scalar> tilt) {
  if (dim < 2) throw Error(Errc::BadParameters, "dimension must be at least 2");
  const std::size_t d = static_cast<std::size_t>(dim);
  if (!tilt.empty() && tilt.size() != d - 2) {
    throw Error(Errc::BadParameters, "tilt needs one coefficient per transverse coordinate");
  }
  Matrix m(d + 1, d + 1);
  // Planar rows/columns live at indices 0, 1 and d (the homogenizing one).
  const std::size_t idx[3] = {0, 1, d};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) m(idx[r], idx[c]) = t(r, c);
  }
  for (std::size_t j = 2; j < d; ++j) {
    m(j, j) = 1;
    if (!tilt.empty()) m(d, j) = tilt[j - 2];
  }
  return MapD{dim, std::move(m)};
}

SectionedPolytope pullback(const SectionedPolytope& s, const ProjMap2& t_inv,
                           std::span<const Scalar> tilt) {
  const MapD lift = lift_projective(t_inv, s.dim, tilt);
  const std::size_t d = static_cast<std::size_t>(s.dim);
  std::vector<PointD> image;
  image.reserve(s.vertices.size());
  for (std::size_t k = 0; k < s.vertices.size(); ++k) {
    auto h = lift.apply_homogeneous(s.vertices[k]);
    if (h[d] <= 0) {
      throw Error(Errc::PullbackUnbounded,
                  "vertex " + std::to_string(k) + " is sent to or beyond infinity");
    }
    PointD q(d);
    for (std::size_t j = 0; j < d; ++j) q[j] = h[j] / h[d];
    image.push_back(std::move(q));
  }
  SectionedPolytope out{s.dim, std::move(image), apply_map(s.claimed, t_inv)};
  verify_section(out);
  return out;
}

std::optional<std::vector<Scalar>> admissible_tilt(const SectionedPolytope& s,
                                                   const ProjMap2& t_inv) {
  const std::size_t d = static_cast<std::size_t>(s.dim);
  std::vector<LinearInequality> system;
  system.reserve(s.vertices.size());
  for (const auto& q : s.vertices) {
    LinearInequality ineq;
    ineq.coeffs.assign(q.begin() + 2, q.end());
    ineq.constant = t_inv(2, 0) * q[0] + t_inv(2, 1) * q[1] + t_inv(2, 2);
    ineq.strict = true;
    system.push_back(std::move(ineq));
  }
  return fourier_motzkin_point(system, d - 2);
}

SectionedPolytope pullback_bounded(const SectionedPolytope& s, const ProjMap2& t_inv) {
  try {
    return pullback(s, t_inv);
  } catch (const Error& e) {
    if (e.code() != Errc::PullbackUnbounded) throw;
  }
  const auto tilt = admissible_tilt(s, t_inv);
  if (!tilt) throw Error(Errc::PullbackUnbounded, "no tilt keeps the polytope finite");
  return pullback(s, t_inv, *tilt);
}

}  // namespace polysec
