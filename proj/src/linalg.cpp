#include "polysec/linalg.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "polysec/error.hpp"

namespace polysec {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::BadParameters, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<std::vector<Scalar>> Matrix::to_rows() const {
  std::vector<std::vector<Scalar>> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::BadParameters, "matrix shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

namespace {

// In-place reduction to row echelon form; returns the pivot columns.
// `sign` flips with each row swap so callers can recover the determinant.
std::vector<std::size_t> echelon(Matrix& m, int* sign = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      if (sign) *sign = -*sign;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Scalar f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix m) { return echelon(m).size(); }

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw Error(Errc::BadParameters, "determinant of non-square matrix");
  int s = 1;
  const auto pivots = echelon(m, &s);
  if (pivots.size() < m.rows()) return 0;
  Scalar det = s;
  for (std::size_t i = 0; i < m.rows(); ++i) det *= m(i, i);
  return det;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(Errc::BadParameters, "inverse of non-square matrix");
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug(p, c) == 0) ++p;
    if (p == n) throw Error(Errc::SingularMap, "matrix is singular");
    if (p != c) {
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(p, j), aug(c, j));
    }
    const Scalar inv = 1 / aug(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) aug(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug(i, c) == 0) continue;
      const Scalar f = aug(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(c, j);
    }
  }
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  }
  return out;
}

std::optional<std::vector<Scalar>> solve_unique(const Matrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) throw Error(Errc::BadParameters, "right-hand side size mismatch");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = echelon(aug);
  if (pivots.size() != n) return std::nullopt;  // dependent columns or pivot in b
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  std::vector<Scalar> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Scalar acc = aug(k, n);
    for (std::size_t j = k + 1; j < n; ++j) acc -= aug(k, j) * x[j];
    x[k] = acc / aug(k, k);
  }
  return x;
}

namespace {

// Scales so the first nonzero coefficient has magnitude one; identical rows
// after this normalization are redundant.
LinearInequality normalized(LinearInequality q) {
  for (const auto& c : q.coeffs) {
    if (c != 0) {
      const Scalar s = abs(c);
      for (auto& v : q.coeffs) v /= s;
      q.constant /= s;
      break;
    }
  }
  return q;
}

struct IneqLess {
  bool operator()(const LinearInequality& a, const LinearInequality& b) const {
    if (a.strict != b.strict) return a.strict < b.strict;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
      if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] < b.coeffs[i];
    }
    return a.constant < b.constant;
  }
};

std::vector<LinearInequality> dedup(std::vector<LinearInequality> in) {
  std::set<LinearInequality, IneqLess> seen;
  for (auto& q : in) seen.insert(normalized(std::move(q)));
  return {seen.begin(), seen.end()};
}

}  // namespace

std::optional<std::vector<Scalar>> fourier_motzkin_point(
    std::span<const LinearInequality> system, std::size_t num_vars) {
  // levels[k] holds the system with x_0..x_{k-1} eliminated.
  std::vector<std::vector<LinearInequality>> levels;
  levels.emplace_back(system.begin(), system.end());
  for (const auto& q : levels.front()) {
    if (q.coeffs.size() != num_vars) throw Error(Errc::BadParameters, "inequality arity mismatch");
  }
  levels.front() = dedup(std::move(levels.front()));

  for (std::size_t v = 0; v < num_vars; ++v) {
    const auto& cur = levels.back();
    std::vector<LinearInequality> lower, upper, next;
    for (const auto& q : cur) {
      if (q.coeffs[v] > 0) lower.push_back(q);
      else if (q.coeffs[v] < 0) upper.push_back(q);
      else next.push_back(q);
    }
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        // lo: a x_v + r >= 0 with a > 0; up: b x_v + s >= 0 with b < 0.
        // Combination (-b) * lo + a * up eliminates x_v.
        const Scalar wl = -up.coeffs[v];
        const Scalar wu = lo.coeffs[v];
        LinearInequality c;
        c.coeffs.resize(num_vars);
        for (std::size_t j = 0; j < num_vars; ++j) {
          c.coeffs[j] = wl * lo.coeffs[j] + wu * up.coeffs[j];
        }
        c.coeffs[v] = 0;
        c.constant = wl * lo.constant + wu * up.constant;
        c.strict = lo.strict || up.strict;
        next.push_back(std::move(c));
      }
    }
    levels.push_back(dedup(std::move(next)));
  }

  for (const auto& q : levels.back()) {
    if (q.strict ? q.constant <= 0 : q.constant < 0) return std::nullopt;
  }

  std::vector<Scalar> x(num_vars);
  for (std::size_t v = num_vars; v-- > 0;) {
    // Bounds on x_v from levels[v], where x_{v+1..} are already fixed.
    std::optional<Scalar> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& q : levels[v]) {
      const Scalar& a = q.coeffs[v];
      if (a == 0) continue;
      Scalar rest = q.constant;
      for (std::size_t j = v + 1; j < num_vars; ++j) rest += q.coeffs[j] * x[j];
      const Scalar bound = -rest / a;
      if (a > 0) {
        if (!lo || bound > *lo || (bound == *lo && q.strict)) {
          lo = bound;
          lo_strict = q.strict;
        }
      } else {
        if (!hi || bound < *hi || (bound == *hi && q.strict)) {
          hi = bound;
          hi_strict = q.strict;
        }
      }
    }
    if (lo && hi) {
      if (*lo > *hi || (*lo == *hi && (lo_strict || hi_strict))) return std::nullopt;
      x[v] = (*lo + *hi) / 2;
    } else if (lo) {
      x[v] = lo_strict ? *lo + 1 : *lo;
    } else if (hi) {
      x[v] = hi_strict ? *hi - 1 : *hi;
    } else {
      x[v] = 0;
    }
  }
  return x;
}

}  // namespace polysec
