#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "kirwanlab/polynomial.hpp"
#include "kirwanlab/rational.hpp"

namespace kirwanlab {

/// Dense row-major matrix. T is Rational or Polynomial.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("Matrix: data size mismatch");
  }

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<T>& data() const noexcept { return data_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Matrix transpose() const {
    Matrix t(cols_, rows_, data_.empty() ? T() : data_.front());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        T acc = T();
        for (std::size_t k = 0; k < a.cols_; ++k) acc += a(i, k) * b(k, j);
        out(i, j) = acc;
      }
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("Matrix: shape mismatch in difference");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Polynomial>;
using Vector = std::vector<Rational>;

ExactMatrix identity(std::size_t n);
ExactMatrix scaled(ExactMatrix m, const Rational& c);
Vector multiply(const ExactMatrix& a, std::span<const Rational> x);
bool is_zero(const ExactMatrix& m);

struct Rref {
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form; pivots are chosen left to right.
Rref rref(ExactMatrix m);
std::size_t rank(const ExactMatrix& m);

/// Basis of {x : A x = 0}, one vector per free column, with a 1 in that
/// column and zeros in the other free columns.
std::vector<Vector> nullspace(const ExactMatrix& m);

/// All solutions of a linear system: particular + span(nullspace_basis).
struct AffineSolutionSpace {
  Vector particular;
  std::vector<Vector> nullspace_basis;
  std::size_t ambient_dim = 0;

  std::size_t dimension() const noexcept { return nullspace_basis.size(); }
  /// particular + sum_i coefficients[i] * nullspace_basis[i].
  Vector member(std::span<const Rational> coefficients) const;
  /// True iff x lies in the affine space.
  bool contains(std::span<const Rational> x) const;
};

/// Throws Inconsistent when rank(A) < rank(A|b). The particular solution is
/// zero at every free column of the rref.
AffineSolutionSpace solve_affine(const ExactMatrix& a, std::span<const Rational> b);

/// Throws Singular.
ExactMatrix invert(const ExactMatrix& a);

/// Inverse over the polynomial ring: requires the determinant to be a nonzero
/// constant. Throws Singular otherwise.
PolyMatrix invert(const PolyMatrix& a);
Polynomial determinant(const PolyMatrix& a);

}  // namespace kirwanlab
