#include <optional>
#include <random>

#include <gtest/gtest.h>

#include "polysec/compose.hpp"
#include "polysec/fuzz.hpp"
#include "polysec/heptagon.hpp"
#include "support.hpp"

namespace polysec {
namespace {

using testing::error_code_of;
using testing::pt;
using testing::q;

// Side-of-line classification computed from the vertices directly.
std::optional<Crossing> classify_by_sides(const Polygon& p, long i, const ProjLine& line) {
  std::vector<int> side(7);
  for (long k = 0; k < 7; ++k) {
    side[k] = sign(evaluate(line, p.lifted(i + k)));
    if (side[k] == 0) return std::nullopt;
  }
  bool all_same = true;
  for (long k = 1; k < 7; ++k) all_same = all_same && side[k] == side[0];
  if (all_same) return Crossing::NonCrossing;
  auto split = [&](long u, long v) {
    for (long k = 0; k < 7; ++k) {
      const bool in = k == u || k == v;
      if ((side[k] == side[u]) != in) return false;
    }
    return side[u] == side[v];
  };
  if (split(1, 2)) return Crossing::PlusCrossing;
  if (split(6, 5)) return Crossing::MinusCrossing;
  return std::nullopt;
}

Scalar bracket(std::span<const Point2> a, long i, long x, long y, long z) {
  auto at = [&](long k) { return ProjPoint(a[static_cast<std::size_t>(((i + k) % 7 + 7) % 7)]).h(); };
  return det3(at(x), at(y), at(z));
}

std::vector<Point2> random_seven(std::mt19937_64& rng) {
  std::vector<Point2> pts;
  for (int k = 0; k < 7; ++k) pts.push_back({testing::random_rational(rng), testing::random_rational(rng)});
  return pts;
}

TEST(StdPoints, IncidenceOnCoincidentHeptagon) {
  const Polygon p = testing::coincident_heptagon();
  for (long i = 0; i < 7; ++i) {
    const auto s = std_points(p, i);
    EXPECT_TRUE(incident(s.plus, join(p.lifted(i + 1), p.lifted(i + 2))));
    EXPECT_TRUE(incident(s.plus, join(p.lifted(i), p.lifted(i + 3))));
    EXPECT_TRUE(incident(s.minus, join(p.lifted(i - 1), p.lifted(i - 2))));
    EXPECT_TRUE(incident(s.minus, join(p.lifted(i), p.lifted(i - 3))));
    EXPECT_EQ(s.line, join(s.plus, s.minus));
  }
}

TEST(CoincidentHeptagon, ClassesAndCoincidentLines) {
  const Polygon p = testing::coincident_heptagon();
  const std::vector<Crossing> expected = {Crossing::NonCrossing,  Crossing::MinusCrossing, Crossing::PlusCrossing,
                                          Crossing::PlusCrossing, Crossing::MinusCrossing, Crossing::MinusCrossing,
                                          Crossing::PlusCrossing};
  int crossing = 0;
  for (long i = 0; i < 7; ++i) {
    EXPECT_EQ(classify_line(p, i), expected[i]) << "i = " << i;
    if (classify_line(p, i) != Crossing::NonCrossing) ++crossing;
  }
  EXPECT_EQ(crossing, 6);
  EXPECT_EQ(find_noncrossing(p), 0);
  const Vec3 l2 = std_points(p, 2).line.h();
  const Vec3 lm2 = std_points(p, -2).line.h();
  EXPECT_TRUE(proportional(l2, lm2));
  EXPECT_FALSE(proportional(std_points(p, 1).line.h(), std_points(p, -1).line.h()));
}

TEST(CoincidentHeptagon, Standardization) {
  const auto st = standardize(testing::coincident_heptagon());
  EXPECT_EQ(st.index, 0);
  EXPECT_EQ(st.standard.a(), q("33/46"));
  EXPECT_EQ(st.standard.b(), q("-1/2"));
  EXPECT_EQ(st.standard.c(), q("-1/2"));
  EXPECT_EQ(st.standard.d(), q("33/46"));
  EXPECT_EQ(st.standard.lambda(), q("21/115"));
  EXPECT_EQ(st.standard.mu(), q("21/115"));
}

TEST(CoincidentHeptagon, ExtensionHasSixVertices) {
  const Polygon p = testing::coincident_heptagon();
  const auto s = heptagon_extension(p);
  EXPECT_TRUE(s.certified);
  EXPECT_EQ(s.dim, 3);
  EXPECT_EQ(s.vertices.size(), 6u);
  EXPECT_EQ(extreme_points(s.vertices, 3).size(), 6u);
  EXPECT_EQ(s.claimed, p);
}

TEST(ClassifyLine, AgreesWithSideOracleAndCompatibility) {
  std::mt19937_64 rng(61);
  int compared = 0;
  for (int t = 0; t < 200; ++t) {
    const Polygon p = random_convex_polygon(7, rng);
    for (long i = 0; i < 7; ++i) {
      const Crossing c = classify_line(p, i);
      const auto oracle = classify_by_sides(p, i, std_points(p, i).line);
      if (oracle) {
        ASSERT_EQ(c, *oracle) << "i = " << i;
        ++compared;
      }
      if (c == Crossing::PlusCrossing) {
        ASSERT_NE(classify_line(p, i - 3), Crossing::MinusCrossing);
      }
    }
    const int idx = find_noncrossing(p);
    ASSERT_EQ(classify_line(p, idx), Crossing::NonCrossing);
    for (int j = 0; j < idx; ++j) ASSERT_NE(classify_line(p, j), Crossing::NonCrossing);
  }
  EXPECT_GT(compared, 1000);
}

TEST(ClassifyLine, ExpressionsMatchBrackets) {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 50; ++t) {
    const Polygon p = random_convex_polygon(7, rng);
    const auto& v = p.vertices();
    for (long i = 0; i < 7; ++i) {
      const auto e = crossing_expressions(p, i);
      const Scalar plus = bracket(v, i, -1, -2, -3) * bracket(v, i, 2, 1, 0) -
                          bracket(v, i, -1, -2, 0) * bracket(v, i, 2, 1, -3);
      const Scalar minus = bracket(v, i, 1, 2, 3) * bracket(v, i, -2, -1, 0) -
                           bracket(v, i, 1, 2, 0) * bracket(v, i, -2, -1, 3);
      ASSERT_EQ(e.plus, plus);
      ASSERT_EQ(e.minus, minus);
    }
  }
}

TEST(InvariantSum, VanishesAndMatchesBruteForce) {
  std::mt19937_64 rng(63);
  for (int t = 0; t < 300; ++t) {
    const auto a = random_seven(rng);
    Scalar total = 0;
    for (long i = 0; i < 7; ++i) {
      total += bracket(a, i, -1, -2, -3) * bracket(a, i, 2, 1, 0) -
               bracket(a, i, -1, -2, 0) * bracket(a, i, 2, 1, -3) +
               bracket(a, i, 2, 1, 0) * bracket(a, i, -1, -2, 3) -
               bracket(a, i, 2, 1, 3) * bracket(a, i, -1, -2, 0);
    }
    ASSERT_EQ(total, 0);
    const auto sums = invariant_sum(std::span<const Point2>(a));
    ASSERT_EQ(sums.total, 0);
    ASSERT_EQ(sums.ab_minus_gh, 0);
    ASSERT_EQ(sums.ef_minus_cd, 0);
  }
}

TEST(InvariantSum, IndexIdentities) {
  std::mt19937_64 rng(64);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_seven(rng);
    const auto o = det_octuple(a);
    for (int i = 0; i < 7; ++i) {
      auto at = [](int k) { return static_cast<std::size_t>((k % 7 + 7) % 7); };
      ASSERT_EQ(o.c[at(i)], o.e[at(i - 2)]);
      ASSERT_EQ(o.d[at(i)] + o.c[at(i - 3)], o.f[at(i - 2)] + o.e[at(i + 1)]);
      ASSERT_EQ(o.a[at(i)], o.g[at(i + 3)]);
    }
  }
}

TEST(InvariantSum, HomogeneousRepresentativesAgree) {
  std::mt19937_64 rng(65);
  const auto a = random_seven(rng);
  std::vector<ProjPoint> h;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Scalar s(static_cast<long>(k) + 2);
    h.emplace_back(s * a[k].x, s * a[k].y, s);
  }
  const auto from_points = invariant_sum(std::span<const Point2>(a));
  const auto from_proj = invariant_sum(std::span<const ProjPoint>(h));
  EXPECT_EQ(from_proj.total, 0);
  EXPECT_EQ(from_proj.ab_minus_gh, from_points.ab_minus_gh);
}

TEST(StandardHeptagon, MakeAndPolygon) {
  const auto s = StandardHeptagon::make(q("33/46"), q("-1/2"), q("-1/2"), q("33/46"), q("21/115"), q("21/115"));
  const Polygon& p = s.polygon();
  EXPECT_EQ(p.vertex(0), pt("0", "0"));
  EXPECT_EQ(p.vertex(1), pt("-1/2", "33/46"));
  EXPECT_EQ(p.vertex(2), (Point2{q("-1/2"), q("33/46") + q("21/115")}));
  EXPECT_EQ(p.vertex(3), pt("0", "1"));
  EXPECT_EQ(p.vertex(-3), pt("1", "0"));
  EXPECT_EQ(p.vertex(-2), (Point2{q("33/46") + q("21/115"), q("-1/2")}));
  EXPECT_EQ(p.vertex(-1), pt("33/46", "-1/2"));
  EXPECT_EQ(s.default_k(), 2);
}

TEST(StandardHeptagon, RejectsBadParameters) {
  EXPECT_EQ(error_code_of([] { StandardHeptagon::make(q("1/2"), q("-1/2"), q("-1/2"), q("1/2"), 0, q("1/4")); }),
            Errc::BadParameters);
  EXPECT_EQ(error_code_of([] { StandardHeptagon::make(2, 2, q("-1/2"), q("1/2"), q("1/4"), q("1/4")); }),
            Errc::BadParameters);
}

TEST(StandardExtension, CoordinatesAndK) {
  const auto s = StandardHeptagon::make(q("33/46"), q("-1/2"), q("-1/2"), q("33/46"), q("21/115"), q("21/115"));
  const auto ext = build_standard_extension(s);
  EXPECT_TRUE(ext.certified);
  ASSERT_EQ(ext.vertices.size(), 6u);
  const Scalar k = 2, l = q("21/115");
  EXPECT_EQ(ext.vertices[0], (PointD{0, 0, 1}));
  EXPECT_EQ(ext.vertices[1], (PointD{0, 0, -k}));
  EXPECT_EQ(ext.vertices[2], (PointD{1 + k, 0, -k}));
  EXPECT_EQ(ext.vertices[3], (PointD{0, 1 + k, -k}));
  const Scalar den = 1 + k - l;
  EXPECT_EQ(ext.vertices[4], (PointD{q("33/46") * (1 + k) / den, q("-1/2") * (1 + k) / den, l * k / den}));
  EXPECT_EQ(ext.vertices[5], (PointD{q("-1/2") * (1 + k) / den, q("33/46") * (1 + k) / den, l * k / den}));
  for (const char* kk : {"1/10", "1", "7"}) EXPECT_TRUE(build_standard_extension(s, q(kk)).certified);
  EXPECT_EQ(error_code_of([&] { build_standard_extension(s, Scalar(0)); }), Errc::BadK);
}

TEST(Standardize, MapCarriesHeptagonToStandardPosition) {
  std::mt19937_64 rng(66);
  for (int t = 0; t < 60; ++t) {
    const Polygon p = random_convex_polygon(7, rng);
    const auto st = standardize(p);
    ASSERT_EQ(st.index, find_noncrossing(p));
    const Polygon img = apply_map(p, st.map);
    ASSERT_EQ(img.canonical(), st.standard.polygon().canonical());
    ASSERT_EQ(st.map.apply(p.vertex(st.index)), ProjPoint(pt("0", "0")));
    ASSERT_EQ(st.map.apply(p.vertex(st.index + 3)), ProjPoint(pt("0", "1")));
    ASSERT_EQ(st.map.apply(p.vertex(st.index - 3)), ProjPoint(pt("1", "0")));
  }
}

TEST(HeptagonExtension, RandomHeptagonsCertify) {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 60; ++t) {
    const Polygon p = random_convex_polygon(7, rng);
    const auto s = heptagon_extension(p);
    ASSERT_TRUE(s.certified);
    ASSERT_EQ(s.dim, 3);
    ASSERT_LE(extreme_points(s.vertices, 3).size(), 6u);
    ASSERT_EQ(s.claimed, p);
  }
  EXPECT_EQ(lower_bound_3d(7), 6);
}

TEST(HeptagonExtension, RejectsOtherSizes) {
  std::mt19937_64 rng(68);
  const Polygon p = random_convex_polygon(8, rng);
  EXPECT_EQ(error_code_of([&] { heptagon_extension(p); }), Errc::NotHeptagon);
  EXPECT_EQ(error_code_of([&] { find_noncrossing(p); }), Errc::NotHeptagon);
}

}  // namespace
}  // namespace polysec
