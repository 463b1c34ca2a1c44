#pragma once

#include <optional>

#include "polysec/polygon.hpp"
#include "polysec/sections.hpp"

namespace polysec {

struct ExtensionOptions {
  // Number of times K may be doubled after a pullback fails.
  int max_retries = 32;
};

// With labels shifted by r, the lines p0p5, p1p4 and p2p3. Returns their
// common point (possibly at infinity) when the three are concurrent.
// Throws NotHexagon.
std::optional<ProjPoint> concurrency_point(const Polygon& hexagon, int r);

struct HexagonComplexity {
  int value = 6;                // 5 or 6
  std::optional<int> witness;   // smallest r in {0, 1, 2} when value == 5
};

HexagonComplexity hexagon_ic(const Polygon& hexagon);

// Coordinates after a map N putting the hexagon in the form
//   p0 = (0, alpha), p1 = beta (x, y), p2 = (gamma, 0),
//   p3 = (1, 0),     p4 = (x, y),      p5 = (0, 1)
// with x, y > 0 and alpha, beta, gamma > 1. Label k of the normal form is
// original label r + k, or r + 5 - k when `mirrored` (the concurrency point
// sits beyond p0/p2 instead of beyond p3/p5).
struct HexNormalForm {
  Scalar alpha, beta, gamma, x, y;
  int rotation = 0;
  bool mirrored = false;
  ProjMap2 map = ProjMap2::identity();  // original plane -> normal form

  // Throws BadParameters unless the six points form a clockwise convex
  // hexagon with the sign constraints above.
  Polygon polygon() const;
};

// Throws NoConcurrency when the witness r does not hold and
// NormalFormConstraintViolated when no labeling meets the constraints.
HexNormalForm hexagon_normal_form(const Polygon& hexagon, int r);

// The five-vertex bipyramid over the normal-form hexagon, in normal-form
// coordinates: q0, q1 below H and q2, q3, q4 above. Requires
// K > max(alpha, beta, gamma); throws BadK otherwise. Returned certified.
SectionedPolytope normal_form_bipyramid(const HexNormalForm& nf, const Scalar& k);

// Certified five-vertex extension of an ic-5 hexagon. Vertex order is the
// pulled-back q0..q4. Throws ComplexitySix when no labeling is concurrent.
SectionedPolytope hexagon_extension5(const Polygon& hexagon, const ExtensionOptions& opts = {});

}  // namespace polysec
