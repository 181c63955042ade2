#ifndef ANOLIE_MATRIX_HPP
#define ANOLIE_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "anolie/rational.hpp"

namespace anolie {

template <typename F>
using Vector = std::vector<F>;

template <typename F>
Vector<F> unit_vector(std::size_t n, std::size_t i) {
  Vector<F> v(n, F(0));
  v.at(i) = F(1);
  return v;
}

template <typename F>
bool is_zero(const Vector<F>& v) {
  return std::all_of(v.begin(), v.end(), [](const F& x) { return x == F(0); });
}

/// Dense row-major matrix over an exact field F. Column j is the image of
/// the j-th basis vector.
template <typename F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
  Matrix(std::initializer_list<std::initializer_list<F>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InputError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  static Matrix diagonal(const Vector<F>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  static Matrix from_columns(const std::vector<Vector<F>>& cols) {
    const std::size_t n = cols.empty() ? 0 : cols.front().size();
    Matrix m(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != n) throw InputError("columns of unequal length");
      for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector<F> column(std::size_t j) const {
    Vector<F> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  F trace() const {
    F t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (aik == F(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vector<F> operator*(const Matrix& a, const Vector<F>& x) {
    if (a.cols_ != x.size()) throw InputError("matrix-vector product: shape mismatch");
    Vector<F> y(a.rows_, F(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator*(const F& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << '[';
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << "]\n";
    }
    return os;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <typename F>
Matrix<F> block_diagonal(const std::vector<Matrix<F>>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.square()) throw InputError("block_diagonal: blocks must be square");
    n += b.rows();
  }
  Matrix<F> m(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

/// Gaussian elimination to reduced row echelon form, in place. Returns the
/// pivot columns.
template <typename F>
std::vector<std::size_t> reduce_to_rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == F(0)) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const F inv = F(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == F(0)) continue;
      const F factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename F>
F determinant(Matrix<F> m) {
  if (!m.square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  F det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col) == F(0)) ++p;
    if (p == n) return F(0);
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det = det * m(col, col);
    const F inv = F(1) / m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == F(0)) continue;
      const F factor = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return det;
}

/// Exact inverse by Gauss-Jordan. Throws InputError when singular.
template <typename F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (!m.square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  const auto pivots = reduce_to_rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw InputError("matrix is singular");
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <typename F>
Matrix<F> power(const Matrix<F>& m, long e) {
  if (!m.square()) throw InputError("power of a non-square matrix");
  Matrix<F> base = e < 0 ? inverse(m) : m;
  Matrix<F> result = Matrix<F>::identity(m.rows());
  for (long n = e < 0 ? -e : e; n > 0; n >>= 1) {
    if (n & 1) result = result * base;
    if (n > 1) base = base * base;
  }
  return result;
}

/// Basis of the span of `vectors`, in reduced echelon form.
template <typename F>
std::vector<Vector<F>> span_basis(const std::vector<Vector<F>>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  Matrix<F> m(vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) throw InputError("span_basis: vector of wrong length");
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = vectors[i][j];
  }
  const auto pivots = reduce_to_rref(m);
  std::vector<Vector<F>> basis;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    Vector<F> row(dim);
    for (std::size_t j = 0; j < dim; ++j) row[j] = m(i, j);
    basis.push_back(std::move(row));
  }
  return basis;
}

template <typename F>
std::size_t rank(const Matrix<F>& m) {
  Matrix<F> copy = m;
  return reduce_to_rref(copy).size();
}

/// Basis of {x : m x = 0}.
template <typename F>
std::vector<Vector<F>> nullspace(const Matrix<F>& m) {
  Matrix<F> r = m;
  const auto pivots = reduce_to_rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<F> x(m.cols(), F(0));
    x[free] = F(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r(i, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

template <typename F>
bool in_span(const std::vector<Vector<F>>& basis, const Vector<F>& v) {
  auto extended = basis;
  extended.push_back(v);
  return span_basis(extended, v.size()).size() == span_basis(basis, v.size()).size();
}

inline bool is_integral(const Matrix<Rational>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_integer(m(i, j))) return false;
  return true;
}

}  // namespace anolie

#endif  // ANOLIE_MATRIX_HPP
