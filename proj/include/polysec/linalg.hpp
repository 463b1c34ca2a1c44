#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polysec/scalar.hpp"

namespace polysec {

// Dense row-major matrix over exact rationals. Sizes in this library stay
// small (at most a few dozen rows), so no attempt is made at fraction-free
// elimination.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> row(std::size_t r) const;
  std::vector<std::vector<Scalar>> to_rows() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

std::size_t rank(Matrix m);
Scalar determinant(Matrix m);
// Throws Error(SingularMap) when the matrix is not invertible.
Matrix inverse(const Matrix& m);

// The unique x with a x = b, or nullopt when the columns of a are dependent
// or the system is inconsistent.
std::optional<std::vector<Scalar>> solve_unique(const Matrix& a, std::span<const Scalar> b);

// coeffs . x + constant >= 0 (or > 0 when strict).
struct LinearInequality {
  std::vector<Scalar> coeffs;
  Scalar constant;
  bool strict = false;
};

// Finds a point satisfying every inequality by Fourier-Motzkin elimination
// of x_0, x_1, ... in increasing order, then back-substitution in reverse
// order. Each variable takes the midpoint of its feasible interval when both
// ends are bounded, the bound itself (nudged by one for strict bounds) when
// only one end is, and zero when unconstrained. Returns nullopt when the
// system is infeasible.
std::optional<std::vector<Scalar>> fourier_motzkin_point(
    std::span<const LinearInequality> system, std::size_t num_vars);

}  // namespace polysec
