#pragma once

#include <array>
#include <optional>
#include <span>

#include "polysec/hexagon.hpp"
#include "polysec/polygon.hpp"
#include "polysec/sections.hpp"

namespace polysec {

// p_i^+ = (p_{i+1} p_{i+2}) meet (p_i p_{i+3}),
// p_i^- = (p_{i-1} p_{i-2}) meet (p_i p_{i-3}), and the line through both.
struct StdPoints {
  ProjPoint plus;
  ProjPoint minus;
  ProjLine line;
};

enum class Crossing { NonCrossing, PlusCrossing, MinusCrossing };

const char* crossing_name(Crossing c);

// Throws NotHeptagon, or DegenerateConstruction if a meet or the final join
// degenerates.
StdPoints std_points(const Polygon& heptagon, long i);

// The two sign expressions deciding whether line i crosses the heptagon:
//   plus  = [-1,-2,-3]_i [2,1,0]_i - [-1,-2,0]_i [2,1,-3]_i
//   minus = [1,2,3]_i [-2,-1,0]_i - [1,2,0]_i [-2,-1,3]_i
// where [x,y,z]_i = det(p_{i+x}, p_{i+y}, p_{i+z}) on the lifts (x, y, 1).
struct CrossingExpressions {
  Scalar plus;
  Scalar minus;
};

CrossingExpressions crossing_expressions(const Polygon& heptagon, long i);

// PlusCrossing when plus >= 0, MinusCrossing when minus >= 0, NonCrossing
// when both are negative. Both nonnegative is impossible for a strictly
// convex heptagon and throws CertificationFailure.
Crossing classify_line(const Polygon& heptagon, long i);

// Smallest index with a non-crossing line. Throws NoneFound (with the
// vertices in the message) if there is none.
int find_noncrossing(const Polygon& heptagon);

// The eight cyclic determinant families over seven points a_0..a_6:
//   A=[-1,-2,-3] B=[2,1,0] C=[-1,-2,0] D=[2,1,-3]
//   E=[2,1,0]    F=[-1,-2,3] G=[2,1,3] H=[-1,-2,0]
struct DetOctuple {
  using Row = std::array<Scalar, 7>;
  Row a, b, c, d, e, f, g, h;
};

DetOctuple det_octuple(std::span<const Point2> points);

struct InvariantSums {
  Scalar total;         // sum A B - C D + E F - G H
  Scalar ab_minus_gh;   // sum A B - sum G H
  Scalar ef_minus_cd;   // sum E F - sum C D
};

// Points must be finite; any seven points, convex or not. Throws
// BadParameters on a wrong count and AtInfinity on a point at infinity.
InvariantSums invariant_sum(std::span<const ProjPoint> points);
InvariantSums invariant_sum(std::span<const Point2> points);

// The heptagon
//   p0 = (0,0), p1 = (c,d), p2 = (c,d+mu), p3 = (0,1),
//   p4 = (1,0), p5 = (a+lambda,b), p6 = (a,b)
// with b, c < 0 < a, d, lambda, mu, strictly convex and clockwise.
class StandardHeptagon {
 public:
  // Throws BadParameters on a sign or convexity violation.
  static StandardHeptagon make(Scalar a, Scalar b, Scalar c, Scalar d, Scalar lambda, Scalar mu);

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }
  const Scalar& d() const { return d_; }
  const Scalar& lambda() const { return lambda_; }
  const Scalar& mu() const { return mu_; }
  const Polygon& polygon() const { return polygon_; }

  // max(lambda - 1, mu - 1, 1) + 1.
  Scalar default_k() const;

 private:
  StandardHeptagon(Scalar a, Scalar b, Scalar c, Scalar d, Scalar lambda, Scalar mu, Polygon p)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)),
        lambda_(std::move(lambda)), mu_(std::move(mu)), polygon_(std::move(p)) {}

  Scalar a_, b_, c_, d_, lambda_, mu_;
  Polygon polygon_;
};

struct Standardization {
  StandardHeptagon standard;
  ProjMap2 map;  // original plane -> standard position; p_{index + k} -> standard p_k
  int index = 0;
};

// Throws CertificationFailure if the image fails the parallelism or sign
// checks.
Standardization standardize(const Polygon& heptagon);

// The six vertices q0..q5 over the standard heptagon, certified. Throws BadK
// unless K > max(lambda - 1, mu - 1, 0).
SectionedPolytope build_standard_extension(const StandardHeptagon& s,
                                           const std::optional<Scalar>& k = std::nullopt);

// Certified six-vertex 3-polytope whose section by z = 0 is the heptagon.
SectionedPolytope heptagon_extension(const Polygon& heptagon, const ExtensionOptions& opts = {});

}  // namespace polysec
