#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "vhess/errors.hpp"
#include "vhess/field.hpp"

namespace vhess {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw UsageError("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class F>
struct Echelon {
  Matrix<typename F::Elem> rref;  // reduced row echelon form, nonzero rows first
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <class F>
Echelon<F> row_reduce(const F& field, Matrix<typename F::Elem> m) {
  Echelon<F> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && field.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    auto inv = field.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = field.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || field.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!field.is_zero(m(r, j))) m(i, j) = field.sub(m(i, j), field.mul(factor, m(r, j)));
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rref = std::move(m);
  return out;
}

/// Rank by forward elimination only.
template <class F>
std::size_t rank(const F& field, Matrix<typename F::Elem> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && field.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    auto inv = field.inv(m(r, c));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (field.is_zero(m(i, c))) continue;
      auto factor = field.mul(m(i, c), inv);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = field.sub(m(i, j), field.mul(factor, m(r, j)));
    }
    ++r;
  }
  return r;
}

/// Basis of {v : M v = 0}, one vector per free column, read off the reduced echelon form.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& field, const Matrix<typename F::Elem>& m) {
  auto ech = row_reduce(field, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Elem> v(m.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t k = 0; k < ech.pivots.size(); ++k) v[ech.pivots[k]] = field.neg(ech.rref(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
typename F::Elem determinant(const F& field, Matrix<typename F::Elem> m) {
  if (m.rows() != m.cols()) throw UsageError("determinant of a non-square matrix");
  auto det = field.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && field.is_zero(m(piv, c))) ++piv;
    if (piv == n) return field.zero();
    if (piv != c) {
      m.swap_rows(piv, c);
      det = field.neg(det);
    }
    det = field.mul(det, m(c, c));
    auto inv = field.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (field.is_zero(m(i, c))) continue;
      auto factor = field.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = field.sub(m(i, j), field.mul(factor, m(c, j)));
    }
  }
  return det;
}

template <class F>
std::vector<typename F::Elem> mat_vec(const F& field, const Matrix<typename F::Elem>& m,
                                      const std::vector<typename F::Elem>& v) {
  if (v.size() != m.cols()) throw UsageError("matrix-vector size mismatch");
  std::vector<typename F::Elem> out(m.rows(), field.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!field.is_zero(m(i, j)) && !field.is_zero(v[j])) out[i] = field.add(out[i], field.mul(m(i, j), v[j]));
    }
  }
  return out;
}

/// Row space maintained in reduced form as rows are streamed in; used when the number of
/// candidate rows is much larger than the rank that is eventually reached.
template <class F>
class IncrementalEchelon {
 public:
  using Elem = typename F::Elem;

  IncrementalEchelon(F field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}

  /// Returns true when the row increased the rank.
  bool insert(std::vector<Elem> row) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      auto c = pivots_[k];
      if (field_.is_zero(row[c])) continue;
      auto factor = row[c];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!field_.is_zero(rows_[k][j])) row[j] = field_.sub(row[j], field_.mul(factor, rows_[k][j]));
      }
    }
    std::size_t c = 0;
    while (c < cols_ && field_.is_zero(row[c])) ++c;
    if (c == cols_) return false;
    auto inv = field_.inv(row[c]);
    for (auto& x : row) x = field_.mul(x, inv);
    for (auto& other : rows_) {
      if (field_.is_zero(other[c])) continue;
      auto factor = other[c];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!field_.is_zero(row[j])) other[j] = field_.sub(other[j], field_.mul(factor, row[j]));
      }
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(c);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  std::vector<std::vector<Elem>> kernel() const {
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<std::vector<Elem>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Elem> v(cols_, field_.zero());
      v[free] = field_.one();
      for (std::size_t k = 0; k < rows_.size(); ++k) v[pivots_[k]] = field_.neg(rows_[k][free]);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  F field_;
  std::size_t cols_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace vhess
