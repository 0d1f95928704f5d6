#include "kirwanlab/matrix.hpp"

#include "kirwanlab/error.hpp"

namespace kirwanlab {

ExactMatrix identity(std::size_t n) { return ExactMatrix::identity(n, Rational(0), Rational(1)); }

ExactMatrix scaled(ExactMatrix m, const Rational& c) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= c;
  return m;
}

Vector multiply(const ExactMatrix& a, std::span<const Rational> x) {
  if (x.size() != a.cols()) throw std::invalid_argument("multiply: shape mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

bool is_zero(const ExactMatrix& m) {
  for (const auto& v : m.data())
    if (v != 0) return false;
  return true;
}

Rref rref(ExactMatrix m) {
  Rref out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    const Rational inv = 1 / m(row, col);
    // Only the nonzero entries of the pivot row take part in the elimination.
    std::vector<std::size_t> support;
    for (std::size_t j = col; j < m.cols(); ++j)
      if (m(row, j) != 0) {
        m(row, j) *= inv;
        support.push_back(j);
      }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j : support) m(i, j) -= factor * m(row, j);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).pivot_columns.size(); }

namespace {

std::vector<Vector> nullspace_from(const Rref& r, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : r.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < r.pivot_columns.size(); ++k) v[r.pivot_columns[k]] = -r.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<Vector> nullspace(const ExactMatrix& m) { return nullspace_from(rref(m), m.cols()); }

Vector AffineSolutionSpace::member(std::span<const Rational> coefficients) const {
  if (coefficients.size() != nullspace_basis.size())
    throw std::invalid_argument("AffineSolutionSpace::member: wrong number of coefficients");
  Vector out = particular;
  for (std::size_t k = 0; k < nullspace_basis.size(); ++k)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += coefficients[k] * nullspace_basis[k][i];
  return out;
}

bool AffineSolutionSpace::contains(std::span<const Rational> x) const {
  if (x.size() != ambient_dim) return false;
  ExactMatrix span_with(ambient_dim, nullspace_basis.size() + 1);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    for (std::size_t k = 0; k < nullspace_basis.size(); ++k) span_with(i, k) = nullspace_basis[k][i];
    span_with(i, nullspace_basis.size()) = x[i] - particular[i];
  }
  return rank(span_with) == nullspace_basis.size();
}

AffineSolutionSpace solve_affine(const ExactMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_affine: rows of A and length of b differ");
  ExactMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Rref r = rref(std::move(aug));
  if (!r.pivot_columns.empty() && r.pivot_columns.back() == a.cols())
    throw Inconsistent("linear system has no solution");

  AffineSolutionSpace space;
  space.ambient_dim = a.cols();
  space.particular.assign(a.cols(), Rational(0));
  for (std::size_t k = 0; k < r.pivot_columns.size(); ++k)
    space.particular[r.pivot_columns[k]] = r.reduced(k, a.cols());
  // The augmented rref restricted to the first cols() columns is the rref of A.
  space.nullspace_basis = nullspace_from(r, a.cols());
  return space;
}

ExactMatrix invert(const ExactMatrix& a) {
  if (a.rows() != a.cols()) throw Singular("cannot invert a non-square matrix");
  const std::size_t n = a.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  Rref r = rref(std::move(aug));
  if (r.pivot_columns.size() < n || r.pivot_columns[n - 1] != n - 1) throw Singular("matrix is singular");
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

namespace {

PolyMatrix minor_of(const PolyMatrix& a, std::size_t skip_row, std::size_t skip_col) {
  PolyMatrix m(a.rows() - 1, a.cols() - 1);
  for (std::size_t i = 0, mi = 0; i < a.rows(); ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0, mj = 0; j < a.cols(); ++j) {
      if (j == skip_col) continue;
      m(mi, mj++) = a(i, j);
    }
    ++mi;
  }
  return m;
}

}  // namespace

Polynomial determinant(const PolyMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: non-square matrix");
  if (a.rows() == 0) return Polynomial();
  if (a.rows() == 1) return a(0, 0);
  Polynomial det;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (a(0, j).is_zero()) continue;
    Polynomial term = a(0, j) * determinant(minor_of(a, 0, j));
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

PolyMatrix invert(const PolyMatrix& a) {
  if (a.rows() != a.cols()) throw Singular("cannot invert a non-square matrix");
  const std::size_t n = a.rows();
  const Polynomial det = determinant(a);
  if (det.size() != 1 || !det.terms().begin()->first.is_one())
    throw Singular("determinant is not a unit of the coefficient ring");
  const Rational inv_det = 1 / det.terms().begin()->second;
  PolyMatrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = Polynomial::constant(det.nvars(), inv_det);
    return inv;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial cof = determinant(minor_of(a, j, i)) * inv_det;
      inv(i, j) = (i + j) % 2 == 0 ? cof : -cof;
    }
  return inv;
}

}  // namespace kirwanlab
