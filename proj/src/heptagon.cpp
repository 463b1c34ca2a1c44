#include "polysec/heptagon.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "polysec/error.hpp"

namespace polysec {
namespace {

void require_heptagon(const Polygon& p) {
  if (p.size() != 7) throw Error(Errc::NotHeptagon, "expected 7 vertices, got " + std::to_string(p.size()));
}

std::string dump(const Polygon& p) {
  std::ostringstream out;
  for (const auto& v : p.vertices()) out << " (" << to_string(v.x) << ", " << to_string(v.y) << ")";
  return out.str();
}

// [x,y,z]_i over points on the w = 1 lift.
class Brackets {
 public:
  explicit Brackets(std::span<const Point2> pts) : pts_(pts) {}

  Scalar operator()(long i, long x, long y, long z) const {
    return orient(at(i + x), at(i + y), at(i + z));
  }

 private:
  const Point2& at(long k) const {
    const long n = static_cast<long>(pts_.size());
    return pts_[static_cast<std::size_t>(((k % n) + n) % n)];
  }
  std::span<const Point2> pts_;
};

ProjPoint checked_meet(const ProjLine& l1, const ProjLine& l2) {
  try {
    return meet(l1, l2);
  } catch (const Error&) {
    throw Error(Errc::DegenerateConstruction, "construction lines coincide");
  }
}

}  // namespace

const char* crossing_name(Crossing c) {
  switch (c) {
    case Crossing::NonCrossing: return "NonCrossing";
    case Crossing::PlusCrossing: return "PlusCrossing";
    case Crossing::MinusCrossing: return "MinusCrossing";
  }
  return "?";
}

StdPoints std_points(const Polygon& p, long i) {
  require_heptagon(p);
  const ProjPoint plus = checked_meet(join(p.lifted(i + 1), p.lifted(i + 2)), join(p.lifted(i), p.lifted(i + 3)));
  const ProjPoint minus = checked_meet(join(p.lifted(i - 1), p.lifted(i - 2)), join(p.lifted(i), p.lifted(i - 3)));
  if (plus == minus) throw Error(Errc::DegenerateConstruction, "p_i^+ and p_i^- coincide");
  return {plus, minus, join(plus, minus)};
}

CrossingExpressions crossing_expressions(const Polygon& p, long i) {
  require_heptagon(p);
  const Brackets br(p.vertices());
  return {
      br(i, -1, -2, -3) * br(i, 2, 1, 0) - br(i, -1, -2, 0) * br(i, 2, 1, -3),
      br(i, 1, 2, 3) * br(i, -2, -1, 0) - br(i, 1, 2, 0) * br(i, -2, -1, 3),
  };
}

Crossing classify_line(const Polygon& p, long i) {
  const auto e = crossing_expressions(p, i);
  const bool plus = e.plus >= 0;
  const bool minus = e.minus >= 0;
  if (plus && minus) {
    throw Error(Errc::CertificationFailure,
                "line " + std::to_string(i) + " is both +- and --crossing for" + dump(p));
  }
  if (plus) return Crossing::PlusCrossing;
  if (minus) return Crossing::MinusCrossing;
  return Crossing::NonCrossing;
}

int find_noncrossing(const Polygon& p) {
  require_heptagon(p);
  for (int i = 0; i < 7; ++i) {
    if (classify_line(p, i) == Crossing::NonCrossing) return i;
  }
  throw Error(Errc::NoneFound, "no non-crossing standardization line for" + dump(p));
}

DetOctuple det_octuple(std::span<const Point2> pts) {
  if (pts.size() != 7) throw Error(Errc::BadParameters, "expected 7 points");
  const Brackets br(pts);
  DetOctuple o;
  for (long i = 0; i < 7; ++i) {
    const auto k = static_cast<std::size_t>(i);
    o.a[k] = br(i, -1, -2, -3);
    o.b[k] = br(i, 2, 1, 0);
    o.c[k] = br(i, -1, -2, 0);
    o.d[k] = br(i, 2, 1, -3);
    o.e[k] = br(i, 2, 1, 0);
    o.f[k] = br(i, -1, -2, 3);
    o.g[k] = br(i, 2, 1, 3);
    o.h[k] = br(i, -1, -2, 0);
  }
  return o;
}

InvariantSums invariant_sum(std::span<const Point2> pts) {
  const DetOctuple o = det_octuple(pts);
  Scalar ab, cd, ef, gh;
  for (std::size_t i = 0; i < 7; ++i) {
    ab += o.a[i] * o.b[i];
    cd += o.c[i] * o.d[i];
    ef += o.e[i] * o.f[i];
    gh += o.g[i] * o.h[i];
  }
  return {ab - cd + ef - gh, ab - gh, ef - cd};
}

InvariantSums invariant_sum(std::span<const ProjPoint> pts) {
  if (pts.size() != 7) throw Error(Errc::BadParameters, "expected 7 points");
  std::vector<Point2> affine;
  affine.reserve(7);
  for (const auto& p : pts) affine.push_back(dehomogenize(p));
  return invariant_sum(std::span<const Point2>(affine));
}

StandardHeptagon StandardHeptagon::make(Scalar a, Scalar b, Scalar c, Scalar d, Scalar lambda, Scalar mu) {
  if (!(b < 0 && c < 0 && a > 0 && d > 0 && lambda > 0 && mu > 0)) {
    throw Error(Errc::BadParameters, "standard heptagon needs b, c < 0 < a, d, lambda, mu");
  }
  std::vector<Point2> v = {{0, 0}, {c, d}, {c, d + mu}, {0, 1}, {1, 0}, {a + lambda, b}, {a, b}};
  try {
    Polygon p = Polygon::from_clockwise(std::move(v));
    return StandardHeptagon(std::move(a), std::move(b), std::move(c), std::move(d), std::move(lambda),
                            std::move(mu), std::move(p));
  } catch (const Error& e) {
    throw Error(Errc::BadParameters, std::string("standard heptagon is not convex: ") + e.what());
  }
}

Scalar StandardHeptagon::default_k() const {
  return std::max({Scalar(lambda_ - 1), Scalar(mu_ - 1), Scalar(1)}) + 1;
}

Standardization standardize(const Polygon& p) {
  const int i = find_noncrossing(p);
  const StdPoints sp = std_points(p, i);
  ProjMap2 to_inf = ProjMap2::identity();
  try {
    to_inf = map_line_to_infinity(sp.line, p);
  } catch (const Error& e) {
    throw Error(Errc::CertificationFailure,
                std::string("non-crossing line meets the heptagon: ") + e.what() + " for" + dump(p));
  }

  const std::array<ProjPoint, 3> src = {to_inf.apply(p.vertex(i)), to_inf.apply(p.vertex(i + 3)),
                                        to_inf.apply(p.vertex(i - 3))};
  const std::array<ProjPoint, 3> dst = {ProjPoint(Scalar(0), Scalar(0), Scalar(1)),
                                        ProjPoint(Scalar(0), Scalar(1), Scalar(1)),
                                        ProjPoint(Scalar(1), Scalar(0), Scalar(1))};
  const ProjMap2 t = affine_through_three(src, dst) * to_inf;

  if (is_finite(t.apply(sp.plus)) || is_finite(t.apply(sp.minus))) {
    throw Error(Errc::CertificationFailure, "standardization points stay finite for" + dump(p));
  }
  std::array<Point2, 7> q;
  for (long k = 0; k < 7; ++k) q[static_cast<std::size_t>(k)] = dehomogenize(t.apply(p.vertex(i + k)));

  if (q[1].x != q[2].x || q[5].y != q[6].y) {
    throw Error(Errc::CertificationFailure, "standard image lacks the parallel edges for" + dump(p));
  }
  try {
    StandardHeptagon s = StandardHeptagon::make(q[6].x, q[6].y, q[1].x, q[1].y, q[5].x - q[6].x, q[2].y - q[1].y);
    if (!std::equal(q.begin(), q.end(), s.polygon().vertices().begin())) {
      throw Error(Errc::CertificationFailure, "standard image differs from the standard vertex list");
    }
    return {std::move(s), t, i};
  } catch (const Error& e) {
    if (e.code() == Errc::CertificationFailure) throw;
    throw Error(Errc::CertificationFailure, std::string(e.what()) + " for" + dump(p));
  }
}

SectionedPolytope build_standard_extension(const StandardHeptagon& s, const std::optional<Scalar>& k_opt) {
  const Scalar k = k_opt.value_or(s.default_k());
  if (k <= s.lambda() - 1 || k <= s.mu() - 1 || k <= 0) {
    throw Error(Errc::BadK, "K must exceed max(lambda - 1, mu - 1, 0), got " + to_string(k));
  }
  const Scalar k1 = k + 1;
  const Scalar den4 = k1 - s.lambda();
  const Scalar den5 = k1 - s.mu();
  std::vector<PointD> q = {
      {0, 0, 1},
      {0, 0, -k},
      {k1, 0, -k},
      {0, k1, -k},
      {s.a() * k1 / den4, s.b() * k1 / den4, s.lambda() * k / den4},
      {k1 * s.c() / den5, k1 * s.d() / den5, s.mu() * k / den5},
  };
  return certify(SectionedPolytope{3, std::move(q), s.polygon()});
}

SectionedPolytope heptagon_extension(const Polygon& p, const ExtensionOptions& opts) {
  const Standardization st = standardize(p);
  const ProjMap2 back = st.map.inverse();
  Scalar k = st.standard.default_k();
  for (int attempt = 0; attempt <= opts.max_retries; ++attempt, k *= 2) {
    const SectionedPolytope local = build_standard_extension(st.standard, k);
    try {
      SectionedPolytope out = pullback_bounded(local, back);
      out.claimed = p;
      return certify(std::move(out));
    } catch (const Error& e) {
      if (e.code() != Errc::PullbackUnbounded) throw;
    }
  }
  throw Error(Errc::CertificationFailure, "heptagon pullback failed for every K in the retry budget for" + dump(p));
}

}  // namespace polysec
