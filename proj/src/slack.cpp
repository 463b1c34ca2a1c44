#include "polysec/slack.hpp"

#include <exception>
#include <string>

#include "polysec/error.hpp"

namespace polysec {
namespace {

struct Facet {
  Point2 normal;
  Scalar offset;

  Scalar slack(const Scalar& x, const Scalar& y) const { return offset - normal.x * x - normal.y * y; }
};

Facet facet_of(const Polygon& p, long i) {
  const Point2 d = p.vertex(i + 1) - p.vertex(i);
  const Point2 a{-d.y, d.x};
  return {a, a.x * p.vertex(i).x + a.y * p.vertex(i).y};
}

AffineFunctional extend(const Facet& f, const SectionedPolytope& s) {
  std::vector<LinearInequality> system;
  system.reserve(s.vertices.size());
  for (const auto& q : s.vertices) {
    LinearInequality ineq;
    ineq.coeffs.assign(q.begin() + 2, q.end());
    ineq.constant = f.slack(q[0], q[1]);
    system.push_back(std::move(ineq));
  }
  const auto free = fourier_motzkin_point(system, static_cast<std::size_t>(s.dim - 2));
  if (!free) throw Error(Errc::NoExtension, "facet inequality has no nonnegative extension");
  AffineFunctional out;
  out.constant = f.offset;
  out.coeffs = {-f.normal.x, -f.normal.y};
  out.coeffs.insert(out.coeffs.end(), free->begin(), free->end());
  return out;
}

void require_match(const Polygon& p, const SectionedPolytope& s) {
  if (!s.certified) throw Error(Errc::CertificationFailure, "section is not certified");
  if (s.claimed.canonical() != p.canonical()) {
    throw Error(Errc::FactorizationMismatch, "extension's section is not the given polygon");
  }
}

PointD embed(const Point2& v, int dim) {
  PointD x(static_cast<std::size_t>(dim), Scalar(0));
  x[0] = v.x;
  x[1] = v.y;
  return x;
}

SlackFactorization checked(const Polygon& p, SlackFactorization f) {
  if (!verify_factorization(slack_matrix(p), f)) {
    throw Error(Errc::CertificationFailure, "factorization does not reproduce the slack matrix");
  }
  return f;
}

}  // namespace

Matrix slack_matrix(const Polygon& p) {
  const std::size_t n = p.size();
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Facet f = facet_of(p, static_cast<long>(i));
    for (std::size_t j = 0; j < n; ++j) s(i, j) = f.slack(p.vertices()[j].x, p.vertices()[j].y);
  }
  return s;
}

Scalar AffineFunctional::operator()(const PointD& x) const {
  Scalar v = constant;
  for (std::size_t k = 0; k < coeffs.size() && k < x.size(); ++k) v += coeffs[k] * x[k];
  return v;
}

AffineFunctional extend_facet_inequality(std::size_t facet, const SectionedPolytope& s) {
  return extend(facet_of(s.claimed, static_cast<long>(facet)), s);
}

SlackFactorization factorize_from_section(const Polygon& p, const SectionedPolytope& s) {
  require_match(p, s);
  const auto q = extreme_points(s.vertices, s.dim);
  const std::size_t n = p.size();
  const std::size_t k = q.size();
  SlackFactorization f{Matrix(n, k), Matrix(k, n)};
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      const AffineFunctional l = extend(facet_of(p, static_cast<long>(i)), s);
      for (std::size_t c = 0; c < k; ++c) f.r(i, c) = l(q[c]);
      const auto w = convex_coefficients(embed(p.vertices()[i], s.dim), q);
      for (std::size_t c = 0; c < k; ++c) f.c(c, i) = w[c];
    } catch (...) {
#pragma omp critical(polysec_factorize_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return checked(p, std::move(f));
}

SlackFactorization factorize_from_section_serial(const Polygon& p, const SectionedPolytope& s) {
  require_match(p, s);
  const auto q = extreme_points_serial(s.vertices, s.dim);
  const std::size_t n = p.size();
  const std::size_t k = q.size();
  SlackFactorization f{Matrix(n, k), Matrix(k, n)};
  for (std::size_t i = 0; i < n; ++i) {
    const AffineFunctional l = extend(facet_of(p, static_cast<long>(i)), s);
    for (std::size_t c = 0; c < k; ++c) f.r(i, c) = l(q[c]);
    const auto w = convex_coefficients(embed(p.vertices()[i], s.dim), q);
    for (std::size_t c = 0; c < k; ++c) f.c(c, i) = w[c];
  }
  return checked(p, std::move(f));
}

bool verify_factorization(const Matrix& slack, const SlackFactorization& f) {
  if (f.r.rows() != slack.rows() || f.c.cols() != slack.cols() || f.r.cols() != f.c.rows()) return false;
  for (std::size_t i = 0; i < f.r.rows(); ++i) {
    for (std::size_t j = 0; j < f.r.cols(); ++j) {
      if (f.r(i, j) < 0) return false;
    }
  }
  for (std::size_t i = 0; i < f.c.rows(); ++i) {
    for (std::size_t j = 0; j < f.c.cols(); ++j) {
      if (f.c(i, j) < 0) return false;
    }
  }
  return f.r * f.c == slack;
}

}  // namespace polysec
