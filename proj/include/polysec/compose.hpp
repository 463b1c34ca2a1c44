#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polysec/hexagon.hpp"
#include "polysec/polygon.hpp"
#include "polysec/sections.hpp"

namespace polysec {

// ceil((n + 4) / 2): no n-gon is a section of a 3-polytope with fewer
// vertices.
long lower_bound_3d(long n);

// Consecutive index ranges [start, start + size) covering 0..n-1: floor(n/7)
// chunks of seven, then one chunk of n mod 7 when nonzero.
struct Chunk {
  std::size_t start = 0;
  std::size_t size = 0;
};
std::vector<Chunk> plan_chunks(std::size_t n);

// Certified 3-polytope with at most n - 1 vertices over an n-gon, n >= 7.
// The heptagon base is what remains after removing the vertices listed in
// `drop_order` (indices into the canonical labeling); each removed vertex is
// re-added at height 0. The default drops the highest indices first.
SectionedPolytope ngon_3d_extension(const Polygon& p, const ExtensionOptions& opts = {});
SectionedPolytope ngon_3d_extension(const Polygon& p, std::span<const std::size_t> drop_order,
                                    const ExtensionOptions& opts = {});

// Embeds S1 as (x, y, s1 coords, 0...) and S2 as (x, y, 0..., s2 coords) in
// dimension d1 + d2 - 2 and certifies that the section of the joint hull is
// conv(P1 u P2). Inputs must be certified; throws IncompatibleSections
// otherwise.
SectionedPolytope convex_join_sections(const SectionedPolytope& s1, const SectionedPolytope& s2);

// Same with a point or segment (or any planar point set) as the second
// section: the points are added at height 0.
SectionedPolytope convex_join_points(const SectionedPolytope& s1, std::span<const Point2> points);

// Certified polytope of dimension 2 + floor(n/7) with 6 floor(n/7) + (n mod 7)
// vertices whose section is the n-gon, n >= 7. Heptagon chunks are extended
// in parallel and joined left to right.
SectionedPolytope ngon_extension(const Polygon& p, const ExtensionOptions& opts = {});
SectionedPolytope ngon_extension_serial(const Polygon& p, const ExtensionOptions& opts = {});

// A certified 3-polytope with m + 2 vertices whose section by z = 0 is a
// 2m-gon, m >= 2. Vertices: u = (0,0,-K), v = (0,0,-1) and one point above H
// per ray through r_k = (s^2, (1-s)^2), s = (k-1)/(m-1). Segment v w_k meets H
// at r_k and u w_k at beta_k r_k, with the beta_k chosen to keep the outer
// chain strictly convex.
SectionedPolytope optimal_even_gon(int m);

}  // namespace polysec
