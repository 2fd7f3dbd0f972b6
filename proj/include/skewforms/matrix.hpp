#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "skewforms/scalars.hpp"

namespace skewforms {

template <class S>
using Vec = std::vector<S>;

/// Dense row-major matrix over an exact field.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), d_(rows * cols, S(0)) {}
  Matrix(std::size_t rows, std::size_t cols, const S& fill) : r_(rows), c_(cols), d_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<S>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  S& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

  Vec<S> row(std::size_t i) const { return Vec<S>(d_.begin() + i * c_, d_.begin() + (i + 1) * c_); }
  Vec<S> col(std::size_t j) const {
    Vec<S> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<Vec<S>> row_list() const {
    std::vector<Vec<S>> out;
    for (std::size_t i = 0; i < r_; ++i) out.push_back(row(i));
    return out;
  }
  void append_row(const Vec<S>& v) {
    if (r_ == 0 && c_ == 0) c_ = v.size();
    if (v.size() != c_) throw std::invalid_argument("row length mismatch");
    d_.insert(d_.end(), v.begin(), v.end());
    ++r_;
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const S& x = a(i, k);
        if (is_zero(x)) continue;
        for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
      }
    return m;
  }
  friend Vec<S> operator*(const Matrix& a, const Vec<S>& v) {
    if (a.c_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vec<S> out(a.r_, S(0));
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t j = 0; j < a.c_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero_matrix() const {
    for (const auto& x : d_)
      if (!is_zero(x)) return false;
    return true;
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<S> d_;
};

/// In-place reduced row echelon form; returns the pivot columns. Zero rows
/// are dropped so the result has exactly rank-many rows.
template <class S>
std::vector<std::size_t> rref_in_place(Matrix<S>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(m(piv, c))) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    S inv = S(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      S f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix<S> trimmed(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) trimmed(i, j) = m(i, j);
  m = std::move(trimmed);
  return pivots;
}

template <class S>
Matrix<S> rref(Matrix<S> m) {
  rref_in_place(m);
  return m;
}

template <class S>
std::size_t rank(Matrix<S> m) {
  return rref_in_place(m).size();
}

/// Basis of {x : m x = 0}, one vector per free column, in column order.
template <class S>
std::vector<Vec<S>> nullspace(Matrix<S> m) {
  const std::size_t cols = m.cols();
  auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec<S>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec<S> v(cols, S(0));
    v[f] = S(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class S>
S determinant(Matrix<S> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  S det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && is_zero(m(piv, c))) ++piv;
    if (piv == n) return S(0);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    S inv = S(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      S f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Inverse of a square matrix; throws std::domain_error when singular.
template <class S>
Matrix<S> inverse(const Matrix<S>& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
  Matrix<S> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = S(1);
  }
  auto piv = rref_in_place(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix<S> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

/// Solves m x = b; returns one solution or nothing when inconsistent.
template <class S>
std::optional<Vec<S>> solve(const Matrix<S>& m, const Vec<S>& b) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Matrix<S> aug(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
    aug(i, cols) = b[i];
  }
  auto piv = rref_in_place(aug);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  Vec<S> x(cols, S(0));
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, cols);
  return x;
}

template <class S>
S dot(const Vec<S>& a, const Vec<S>& b) {
  S acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

template <class S>
Vec<S> operator+(Vec<S> a, const Vec<S>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
template <class S>
Vec<S> operator-(Vec<S> a, const Vec<S>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
template <class S>
Vec<S> operator*(const S& s, Vec<S> a) {
  for (auto& x : a) x *= s;
  return a;
}

template <class S>
bool is_zero_vector(const Vec<S>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

using QMatrix = Matrix<Rational>;
using QVec = Vec<Rational>;

}  // namespace skewforms
