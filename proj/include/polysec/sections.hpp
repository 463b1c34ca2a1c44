#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polysec/linalg.hpp"
#include "polysec/polygon.hpp"

namespace polysec {

// Point of R^d.
using PointD = std::vector<Scalar>;

// A d-polytope given by its vertex list, sectioned by the coordinate flat
// H = {x : x_3 = ... = x_d = 0}, together with the polygon claimed to be
// the section (in the first two coordinates).
struct SectionedPolytope {
  int dim = 3;
  std::vector<PointD> vertices;
  Polygon claimed;
  // Set only by verify_section.
  bool certified = false;
};

// Exact strict hull of the section, clockwise from the lexicographically
// smallest point. Fewer than three points means the section is a point or
// a segment.
struct SectionHull {
  std::vector<Point2> points;

  bool degenerate() const { return points.size() < 3; }
  // Throws Error(DegenerateSection) when degenerate.
  Polygon polygon() const;
};

// Every point of Q n H that is a basic solution: for each subset of at most
// d - 1 affinely independent vertices whose convex hull meets H in exactly
// one point, that point. For d = 3 these are the vertices on H plus the
// crossing points of segments with endpoints on opposite sides of H. Their
// convex hull is Q n H.
//
// Throws EmptySection when Q misses H, and ScaleExceeded when the subset
// enumeration would exceed `max_subsets`.
SectionHull compute_section(std::span<const PointD> vertices, int dim,
                            std::size_t max_subsets = 20'000'000);
// Single-threaded reference of compute_section, kept for tests and
// benchmarks.
SectionHull compute_section_serial(std::span<const PointD> vertices, int dim,
                                   std::size_t max_subsets = 20'000'000);

// The raw candidate points (before taking the hull), in enumeration order.
std::vector<Point2> section_candidates(std::span<const PointD> vertices, int dim);

struct SectionCheck {
  bool ok = false;
  std::string detail;  // first discrepancy when !ok
};

SectionCheck check_section(const SectionedPolytope& s);

// Recomputes the section and compares it vertex for vertex with the claimed
// polygon after canonical relabeling. Sets s.certified to the result.
bool verify_section(SectionedPolytope& s);

// Returns the polytope with its certificate set, or throws
// Error(CertificationFailure) with the first discrepancy.
SectionedPolytope certify(SectionedPolytope s);

// P x {0} in R^dim, certified.
SectionedPolytope trivial_section(const Polygon& p, int dim = 3);

// Points that are not convex combinations of the others, in input order,
// exact duplicates removed (first occurrence kept). Decided by barycentric
// solves over subsets of at most d + 1 other points. Throws ScaleExceeded
// when d > 4 and there are more than 64 points.
std::vector<PointD> extreme_points(std::span<const PointD> points, int dim);
std::vector<PointD> extreme_points_serial(std::span<const PointD> points, int dim);

// Nonnegative weights summing to one with sum_k w_k points[k] = target,
// supported on at most d + 1 points: the first feasible subset in order of
// size, then lexicographic order. Throws NotInPolytope.
std::vector<Scalar> convex_coefficients(const PointD& target, std::span<const PointD> points);

// (d+1) x (d+1) homogeneous map on (x_1, ..., x_d, w). Acts as the planar
// map on (x_1, x_2, w) and as the identity on x_3..x_d; `tilt` adds
// sum_j tilt_j x_j to the homogenizing row, which leaves the restriction to
// H unchanged.
struct MapD {
  int dim = 3;
  Matrix m;

  std::vector<Scalar> apply_homogeneous(const PointD& p) const;
};

MapD lift_projective(const ProjMap2& t, int dim, std::span<const Scalar> tilt = {});

// Vertexwise image under the lift of `t_inv`; the claimed polygon becomes
// apply_map(claimed, t_inv) and the result is re-verified. Throws
// PullbackUnbounded when some vertex lands at w' <= 0.
SectionedPolytope pullback(const SectionedPolytope& s, const ProjMap2& t_inv,
                           std::span<const Scalar> tilt = {});

// A tilt making every vertex land at w' > 0, found by exact
// Fourier-Motzkin over the d - 2 tilt coefficients. One exists whenever the
// line sent to infinity misses the section.
std::optional<std::vector<Scalar>> admissible_tilt(const SectionedPolytope& s,
                                                   const ProjMap2& t_inv);

// pullback with the plain lift, falling back to admissible_tilt when the
// plain lift sends a vertex to infinity.
SectionedPolytope pullback_bounded(const SectionedPolytope& s, const ProjMap2& t_inv);

}  // namespace polysec
