#include "polysec/hexagon.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "polysec/error.hpp"

namespace polysec {
namespace {

void require_hexagon(const Polygon& p) {
  if (p.size() != 6) throw Error(Errc::NotHexagon, "expected 6 vertices, got " + std::to_string(p.size()));
}

const std::array<ProjPoint, 3> kUnitFrame = {
    ProjPoint(Scalar(0), Scalar(0), Scalar(1)),
    ProjPoint(Scalar(1), Scalar(0), Scalar(1)),
    ProjPoint(Scalar(0), Scalar(1), Scalar(1)),
};

// Tries to read normal-form parameters after sending (c, q3, q5) to the
// unit frame by an affine map composed after `pre`. `label(k)` is the
// original label of normal-form vertex k.
template <class Label>
std::optional<HexNormalForm> try_normal_form(const Polygon& hex, const ProjMap2& pre,
                                             const ProjPoint& c, Label label) {
  const ProjPoint c1 = pre.apply(c);
  if (!is_finite(c1)) return std::nullopt;
  std::array<ProjPoint, 3> src = {c1, pre.apply(hex.vertex(label(3))), pre.apply(hex.vertex(label(5)))};
  for (const auto& s : src) {
    if (!is_finite(s)) return std::nullopt;
  }
  ProjMap2 affine = ProjMap2::identity();
  try {
    affine = affine_through_three(src, kUnitFrame);
  } catch (const Error& e) {
    if (e.code() != Errc::DegenerateTriple) throw;
    return std::nullopt;
  }
  const ProjMap2 n = affine * pre;
  std::array<Point2, 6> q;
  for (int k = 0; k < 6; ++k) {
    const ProjPoint img = n.apply(hex.vertex(label(k)));
    if (!is_finite(img)) return std::nullopt;
    q[static_cast<std::size_t>(k)] = dehomogenize(img);
  }
  const Point2& p0 = q[0];
  const Point2& p1 = q[1];
  const Point2& p2 = q[2];
  const Point2& p4 = q[4];
  if (p0.x != 0 || p2.y != 0 || q[3] != Point2{1, 0} || q[5] != Point2{0, 1}) return std::nullopt;
  if (p4.x <= 0 || p4.y <= 0) return std::nullopt;
  // p1 must be a positive multiple of p4.
  if (p1.x * p4.y != p1.y * p4.x) return std::nullopt;
  HexNormalForm nf{p0.y, p1.x / p4.x, p2.x, p4.x, p4.y, 0, false, n};
  if (nf.alpha <= 1 || nf.beta <= 1 || nf.gamma <= 1) return std::nullopt;
  return nf;
}

}  // namespace

std::optional<ProjPoint> concurrency_point(const Polygon& hex, int r) {
  require_hexagon(hex);
  const ProjLine l1 = join(hex.lifted(r), hex.lifted(r + 5));
  const ProjLine l2 = join(hex.lifted(r + 1), hex.lifted(r + 4));
  const ProjLine l3 = join(hex.lifted(r + 2), hex.lifted(r + 3));
  if (det3(l1, l2, l3) != 0) return std::nullopt;
  return meet(l1, l2);
}

HexagonComplexity hexagon_ic(const Polygon& hex) {
  require_hexagon(hex);
  for (int r = 0; r < 3; ++r) {
    if (concurrency_point(hex, r)) return {5, r};
  }
  return {6, std::nullopt};
}

Polygon HexNormalForm::polygon() const {
  if (x <= 0 || y <= 0 || alpha <= 1 || beta <= 1 || gamma <= 1) {
    throw Error(Errc::BadParameters, "normal form needs x, y > 0 and alpha, beta, gamma > 1");
  }
  return Polygon::from_clockwise({
      {0, alpha}, {beta * x, beta * y}, {gamma, 0}, {1, 0}, {x, y}, {0, 1}});
}

HexNormalForm hexagon_normal_form(const Polygon& hex, int r) {
  require_hexagon(hex);
  const auto c = concurrency_point(hex, r);
  if (!c) throw Error(Errc::NoConcurrency, "lines are not concurrent for r = " + std::to_string(r));

  ProjMap2 pre = ProjMap2::identity();
  if (!is_finite(*c)) {
    // Parallel lines: send a line transverse to the common direction, beyond
    // the hexagon, to infinity. The concurrency point then becomes finite.
    const Scalar& dx = c->x();
    const Scalar& dy = c->y();
    Scalar far = dx * hex.vertex(0).x + dy * hex.vertex(0).y;
    for (const auto& v : hex.vertices()) far = std::max(far, Scalar(dx * v.x + dy * v.y));
    pre = map_line_to_infinity(ProjLine(dx, dy, -(far + 1)), hex);
  }

  if (auto nf = try_normal_form(hex, pre, *c, [r](int k) { return r + k; })) {
    nf->rotation = r;
    return *nf;
  }
  if (auto nf = try_normal_form(hex, pre, *c, [r](int k) { return r + 5 - k; })) {
    nf->rotation = r;
    nf->mirrored = true;
    return *nf;
  }
  throw Error(Errc::NormalFormConstraintViolated,
              "no labeling puts the hexagon in normal form for r = " + std::to_string(r));
}

SectionedPolytope normal_form_bipyramid(const HexNormalForm& nf, const Scalar& k) {
  if (k <= nf.alpha || k <= nf.beta || k <= nf.gamma) {
    throw Error(Errc::BadK, "K must exceed max(alpha, beta, gamma)");
  }
  std::vector<PointD> q = {
      {0, 0, -k},
      {0, 0, -1},
      {(k - 1) * nf.gamma / (k - nf.gamma), 0, k * (nf.gamma - 1) / (k - nf.gamma)},
      {nf.x * (k - 1) * nf.beta / (k - nf.beta), nf.y * (k - 1) * nf.beta / (k - nf.beta),
       k * (nf.beta - 1) / (k - nf.beta)},
      {0, (k - 1) * nf.alpha / (k - nf.alpha), k * (nf.alpha - 1) / (k - nf.alpha)},
  };
  return certify(SectionedPolytope{3, std::move(q), nf.polygon()});
}

SectionedPolytope hexagon_extension5(const Polygon& hex, const ExtensionOptions& opts) {
  const auto ic = hexagon_ic(hex);
  if (ic.value != 5) throw Error(Errc::ComplexitySix, "hexagon has intersection complexity 6");
  const HexNormalForm nf = hexagon_normal_form(hex, *ic.witness);
  const ProjMap2 back = nf.map.inverse();

  Scalar k = std::max({nf.alpha, nf.beta, nf.gamma}) + 1;
  for (int attempt = 0; attempt <= opts.max_retries; ++attempt, k *= 2) {
    const SectionedPolytope local = normal_form_bipyramid(nf, k);
    try {
      SectionedPolytope out = pullback_bounded(local, back);
      out.claimed = hex;
      return certify(std::move(out));
    } catch (const Error& e) {
      if (e.code() != Errc::PullbackUnbounded) throw;
    }
  }
  throw Error(Errc::CertificationFailure, "hexagon pullback failed for every K in the retry budget");
}

}  // namespace polysec
