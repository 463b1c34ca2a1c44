#include <random>

#include <gtest/gtest.h>

#include "polysec/linalg.hpp"
#include "polysec/projective.hpp"
#include "support.hpp"

namespace polysec {
namespace {

using testing::error_code_of;
using testing::q;
using testing::random_rational;

Vec3 v(long x, long y, long w) { return {Scalar(x), Scalar(y), Scalar(w)}; }

// Rule of Sarrus, written out independently of the library's triple product.
Scalar sarrus(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a.x * b.y * c.w + a.y * b.w * c.x + a.w * b.x * c.y - a.w * b.y * c.x - a.x * b.w * c.y -
         a.y * b.x * c.w;
}

Vec3 random_vec(std::mt19937_64& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng)};
}

TEST(Scalar, ParsesAndCanonicalizes) {
  EXPECT_EQ(to_string(parse_scalar("3/6")), "1/2");
  EXPECT_EQ(to_string(parse_scalar("-4")), "-4");
  EXPECT_EQ(to_string(parse_scalar("10/5")), "2");
  EXPECT_EQ(parse_scalar("-0"), 0);
}

TEST(Scalar, RejectsMalformed) {
  for (const char* bad : {"1/0", "abc", "1.5", "", "1/", "/2", "1/2/3", " 1", "4/-8"}) {
    EXPECT_EQ(error_code_of([&] { parse_scalar(bad); }), Errc::ParseError) << bad;
  }
}

TEST(Join, AxisLines) {
  const ProjPoint origin(v(0, 0, 1));
  // The cross product of (0,0,1) and (1,0,1) is (0,1,0); the same line as
  // (0,-1,0).
  const ProjLine x_axis = join(origin, ProjPoint(v(1, 0, 1)));
  EXPECT_EQ(x_axis.h(), v(0, 1, 0));
  EXPECT_EQ(x_axis, ProjLine(v(0, -1, 0)));
  EXPECT_EQ(join(origin, ProjPoint(v(0, 1, 1))), ProjLine(v(1, 0, 0)));
}

TEST(Join, LineThroughUnitPoints) {
  const ProjLine l = join(ProjPoint(v(1, 0, 1)), ProjPoint(v(0, 1, 1)));
  EXPECT_EQ(l.h(), v(-1, -1, 1));
  EXPECT_EQ(l, ProjLine(v(1, 1, -1)));
}

TEST(Join, DegenerateWhenProjectivelyEqual) {
  EXPECT_EQ(error_code_of([] { join(ProjPoint(v(1, 2, 1)), ProjPoint(v(2, 4, 2))); }), Errc::DegenerateJoin);
}

TEST(Meet, Examples) {
  const ProjLine x_axis(v(0, 1, 0));
  const ProjLine y_axis(v(1, 0, 0));
  EXPECT_EQ(meet(x_axis, y_axis), ProjPoint(v(0, 0, 1)));
  const ProjPoint at_inf = meet(ProjLine(v(0, 1, 0)), ProjLine(v(0, 1, -1)));
  EXPECT_EQ(at_inf, ProjPoint(v(1, 0, 0)));
  EXPECT_FALSE(is_finite(at_inf));
  const ProjPoint half = meet(ProjLine(v(1, 1, -1)), ProjLine(v(1, -1, 0)));
  EXPECT_EQ(dehomogenize(half), (Point2{q("1/2"), q("1/2")}));
  EXPECT_EQ(error_code_of([] { meet(ProjLine(v(1, 1, 1)), ProjLine(v(2, 2, 2))); }), Errc::DegenerateMeet);
}

TEST(Det3, Examples) {
  const ProjPoint a(v(0, 0, 1)), b(v(1, 0, 1)), c(v(0, 1, 1));
  EXPECT_EQ(det3(a, b, c), 1);
  EXPECT_EQ(det3(a, c, b), -1);
  EXPECT_EQ(det3(a, a, b), 0);
}

TEST(ProjPoint, RejectsZeroAndLiftsToPositiveW) {
  EXPECT_EQ(error_code_of([] { ProjPoint(v(0, 0, 0)); }), Errc::BadParameters);
  const ProjPoint p(v(1, 2, -1));
  EXPECT_GT(p.w(), 0);
  EXPECT_EQ(p, ProjPoint(v(-1, -2, 1)));
}

TEST(Dehomogenize, Examples) {
  EXPECT_EQ(dehomogenize(ProjPoint(v(2, 4, 2))), (Point2{Scalar(1), Scalar(2)}));
  EXPECT_FALSE(is_finite(ProjPoint(v(1, 0, 0))));
  EXPECT_EQ(dehomogenize(ProjPoint(q("3/2"), Scalar(-5), q("1/2"))), (Point2{Scalar(3), Scalar(-10)}));
  EXPECT_EQ(error_code_of([] { dehomogenize(ProjPoint(v(1, 0, 0))); }), Errc::AtInfinity);
}

TEST(Kernel, CrossProductMatchesComponentFormula) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const Vec3 p = random_vec(rng), r = random_vec(rng);
    const Vec3 expected{p.y * r.w - p.w * r.y, -(p.x * r.w - p.w * r.x), p.x * r.y - p.y * r.x};
    ASSERT_EQ(cross(p, r), expected);
  }
}

TEST(Kernel, Det3MatchesSarrusAndIsAlternating) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    const Vec3 a = random_vec(rng), b = random_vec(rng), c = random_vec(rng);
    const Scalar d = det3(a, b, c);
    ASSERT_EQ(d, sarrus(a, b, c));
    ASSERT_EQ(det3(b, a, c), -d);
    ASSERT_EQ(det3(a, c, b), -d);
    ASSERT_EQ(det3(b, c, a), d);
  }
}

TEST(Kernel, Det3IsMultilinear) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const Vec3 a = random_vec(rng), a2 = random_vec(rng), b = random_vec(rng), c = random_vec(rng);
    const Scalar s = random_rational(rng);
    const Vec3 combo{a.x + s * a2.x, a.y + s * a2.y, a.w + s * a2.w};
    ASSERT_EQ(det3(combo, b, c), det3(a, b, c) + s * det3(a2, b, c));
  }
}

TEST(Kernel, QuadrupleCrossExpansion) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 500; ++t) {
    const Vec3 a = random_vec(rng), b = random_vec(rng), c = random_vec(rng), d = random_vec(rng);
    const Scalar abd = sarrus(a, b, d), abc = sarrus(a, b, c);
    const Vec3 rhs{abd * c.x - abc * d.x, abd * c.y - abc * d.y, abd * c.w - abc * d.w};
    ASSERT_EQ(cross(cross(a, b), cross(c, d)), rhs);
  }
}

TEST(Kernel, Incidence) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 300; ++t) {
    const Vec3 hp = random_vec(rng), hq = random_vec(rng), hr = random_vec(rng);
    if (hp.is_zero() || hq.is_zero() || hr.is_zero() || sarrus(hp, hq, hr) == 0) continue;
    const ProjPoint p(hp), pq(hq), pr(hr);
    const ProjLine l = join(p, pq);
    ASSERT_TRUE(incident(p, l));
    ASSERT_TRUE(incident(pq, l));
    ASSERT_FALSE(incident(pr, l));
    ASSERT_EQ(meet(l, join(p, pr)), p);
    // Scaling representatives changes nothing projectively.
    const Scalar s = random_rational(rng) + 100;
    ASSERT_EQ(join(ProjPoint(Vec3{s * hp.x, s * hp.y, s * hp.w}), pq), l);
  }
}

TEST(Linalg, InverseDeterminantRank) {
  const Matrix m = Matrix::from_rows({{Scalar(2), Scalar(1), Scalar(0)},
                                      {Scalar(1), Scalar(3), Scalar(1)},
                                      {Scalar(0), Scalar(1), Scalar(4)}});
  EXPECT_EQ(determinant(m), sarrus(Vec3{Scalar(2), Scalar(1), Scalar(0)}, Vec3{Scalar(1), Scalar(3), Scalar(1)},
                                   Vec3{Scalar(0), Scalar(1), Scalar(4)}));
  EXPECT_EQ(m * inverse(m), Matrix::identity(3));
  EXPECT_EQ(rank(m), 3u);
  const Matrix singular = Matrix::from_rows({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}});
  EXPECT_EQ(rank(singular), 1u);
  EXPECT_EQ(error_code_of([&] { inverse(singular); }), Errc::SingularMap);
}

TEST(Linalg, SolveUnique) {
  const Matrix a = Matrix::from_rows({{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(-1)}, {Scalar(2), Scalar(0)}});
  const std::vector<Scalar> b = {Scalar(3), Scalar(1), Scalar(4)};
  const auto x = solve_unique(a, b);
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 2);
  EXPECT_EQ((*x)[1], 1);
  const std::vector<Scalar> inconsistent = {Scalar(3), Scalar(1), Scalar(5)};
  EXPECT_FALSE(solve_unique(a, inconsistent));
}

TEST(Linalg, FourierMotzkinFeasibleAndInfeasible) {
  // x >= 1, y >= x, x + y <= 10, y - x < 3.
  std::vector<LinearInequality> sys = {
      {{Scalar(1), Scalar(0)}, Scalar(-1), false},
      {{Scalar(-1), Scalar(1)}, Scalar(0), false},
      {{Scalar(-1), Scalar(-1)}, Scalar(10), false},
      {{Scalar(1), Scalar(-1)}, Scalar(3), true},
  };
  const auto x = fourier_motzkin_point(sys, 2);
  ASSERT_TRUE(x);
  for (const auto& ineq : sys) {
    const Scalar val = ineq.coeffs[0] * (*x)[0] + ineq.coeffs[1] * (*x)[1] + ineq.constant;
    EXPECT_TRUE(ineq.strict ? val > 0 : val >= 0);
  }
  // x >= 1 and x <= 0.
  std::vector<LinearInequality> bad = {{{Scalar(1)}, Scalar(-1), false}, {{Scalar(-1)}, Scalar(0), false}};
  EXPECT_FALSE(fourier_motzkin_point(bad, 1));
  // x > 0 and x < 0 share the boundary only.
  std::vector<LinearInequality> strict = {{{Scalar(1)}, Scalar(0), true}, {{Scalar(-1)}, Scalar(0), true}};
  EXPECT_FALSE(fourier_motzkin_point(strict, 1));
}

TEST(Linalg, FourierMotzkinRandomSystemsAgreeWithGrid) {
  // Systems in two variables whose feasible set, when nonempty, contains a
  // grid point of step 1/2 in [-6, 6]^2 by construction (an interior point is
  // planted on the grid).
  std::mt19937_64 rng(16);
  std::uniform_int_distribution<long> coef(-5, 5);
  std::uniform_int_distribution<long> grid(-12, 12);
  for (int t = 0; t < 200; ++t) {
    const Scalar px = Scalar(grid(rng)) / 2;
    const Scalar py = Scalar(grid(rng)) / 2;
    std::vector<LinearInequality> sys;
    for (int k = 0; k < 6; ++k) {
      const Scalar a(coef(rng)), b(coef(rng));
      const Scalar slack(std::uniform_int_distribution<long>(0, 3)(rng));
      sys.push_back({{a, b}, slack - a * px - b * py, false});
    }
    const auto x = fourier_motzkin_point(sys, 2);
    ASSERT_TRUE(x) << "planted point makes the system feasible";
    for (const auto& ineq : sys) ASSERT_GE(ineq.coeffs[0] * (*x)[0] + ineq.coeffs[1] * (*x)[1] + ineq.constant, 0);
  }
}

}  // namespace
}  // namespace polysec
