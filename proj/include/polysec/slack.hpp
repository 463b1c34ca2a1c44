#pragma once

#include <cstddef>
#include <vector>

#include "polysec/linalg.hpp"
#include "polysec/polygon.hpp"
#include "polysec/sections.hpp"

namespace polysec {

// S(i, j) = b_i - a_i . p_j where a_i is p_{i+1} - p_i rotated by +90
// degrees (the outward normal for clockwise labels) and b_i = a_i . p_i.
Matrix slack_matrix(const Polygon& p);

// x -> constant + sum_k coeffs[k] x_k on R^d.
struct AffineFunctional {
  std::vector<Scalar> coeffs;
  Scalar constant;

  Scalar operator()(const PointD& x) const;
};

// An affine functional on R^d that agrees with the slack of facet i of the
// claimed polygon on H and is nonnegative at every vertex. Throws
// NoExtension when the Fourier-Motzkin system is infeasible.
AffineFunctional extend_facet_inequality(std::size_t facet, const SectionedPolytope& s);

struct SlackFactorization {
  Matrix r;  // n x k, rows indexed by facets
  Matrix c;  // k x n, columns are convex weights over the extreme points

  std::size_t inner_dim() const { return r.cols(); }
};

// R(i, k) = extended facet functional i at extreme point q_k and
// C(k, j) = convex weight of q_k in p_j. Requires a certified section whose
// claimed polygon equals p up to relabeling (FactorizationMismatch
// otherwise); the product is checked against slack_matrix(p) and a mismatch
// throws CertificationFailure.
SlackFactorization factorize_from_section(const Polygon& p, const SectionedPolytope& s);
SlackFactorization factorize_from_section_serial(const Polygon& p, const SectionedPolytope& s);

// Exact R C == slack and every entry of R and C nonnegative.
bool verify_factorization(const Matrix& slack, const SlackFactorization& f);

}  // namespace polysec
