#pragma once

#include <cassert>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace findim::linalg {

template <class T>
concept Field = requires(T a, T b) {
  { T(0) };
  { T(1) };
  { a + b };
  { a - b };
  { a * b };
  { a / b };
  { a == b } -> std::convertible_to<bool>;
};

/// Dense row-major matrix over an exact field.
template <Field T>
class Matrix {
public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == T(0))) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix column(std::size_t c) const {
    Matrix v(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) v(r, 0) = (*this)(r, c);
    return v;
  }

  /// Columns [first, first + count).
  Matrix columns(std::size_t first, std::size_t count) const {
    Matrix m(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < count; ++c) m(r, c) = (*this)(r, first + c);
    return m;
  }

  Matrix select_columns(const std::vector<std::size_t>& which) const {
    Matrix m(rows_, which.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < which.size(); ++c) m(r, c) = (*this)(r, which[c]);
    return m;
  }

  /// Horizontal concatenation [*this | other].
  Matrix hcat(const Matrix& other) const {
    assert(rows_ == other.rows_ || empty() || other.empty());
    const std::size_t rows = rows_ ? rows_ : other.rows_;
    Matrix m(rows, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t r = 0; r < other.rows_; ++r)
      for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (bkj == T(0)) continue;
          m(i, j) += aik * bkj;
        }
      }
    return m;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  T trace() const {
    assert(rows_ == cols_);
    T t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  /// Reduces to reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = rows_;
      for (std::size_t r = row; r < rows_; ++r)
        if (!((*this)(r, col) == T(0))) {
          sel = r;
          break;
        }
      if (sel == rows_) continue;
      swap_rows(sel, row);
      const T inv = T(1) / (*this)(row, col);
      for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row) continue;
        const T f = (*this)(r, col);
        if (f == T(0)) continue;
        for (std::size_t c = col; c < cols_; ++c) {
          const T& p = (*this)(row, c);
          if (!(p == T(0))) (*this)(r, c) -= f * p;
        }
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  /// Basis of {x : A x = 0}, as the columns of the result.
  Matrix nullspace() const {
    Matrix m = *this;
    const auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!is_pivot[c]) free.push_back(c);
    Matrix basis(cols_, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
      basis(free[k], k) = T(1);
      for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -m(i, free[k]);
    }
    return basis;
  }

  /// Maximal linearly independent subset of the columns, in order.
  Matrix column_basis() const {
    Matrix m = *this;
    return select_columns(m.rref());
  }

  /// Indices of standard basis vectors completing the column span to the whole space.
  std::vector<std::size_t> complement_coordinates() const {
    Matrix t = transpose();
    const auto pivots = t.rref();
    std::vector<bool> used(rows_, false);
    for (auto p : pivots) used[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < rows_; ++r)
      if (!used[r]) out.push_back(r);
    return out;
  }

  bool invertible() const { return rows_ == cols_ && rank() == rows_; }

private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Solves A X = B for X when the columns of A are independent and B lies in their span.
/// Returns false if B is not in the column span of A.
template <Field T>
bool solve(const Matrix<T>& a, const Matrix<T>& b, Matrix<T>& x) {
  assert(a.rows() == b.rows() || a.cols() == 0);
  const std::size_t n = a.cols();
  x = Matrix<T>(n, b.cols());
  if (b.cols() == 0) return true;
  if (n == 0) return b.is_zero();
  Matrix<T> aug = a.hcat(b);
  const auto pivots = aug.rref();
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= n) return false;
  }
  assert(pivots.size() == n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < b.cols(); ++c) x(i, c) = aug(i, n + c);
  return true;
}

template <Field T>
Matrix<T> inverse(const Matrix<T>& a) {
  Matrix<T> x;
  [[maybe_unused]] bool ok = solve(a, Matrix<T>::identity(a.rows()), x);
  assert(ok);
  return x;
}

template <Field T>
std::string to_string(const Matrix<T>& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << "]\n";
  }
  return os.str();
}

} // namespace findim::linalg
