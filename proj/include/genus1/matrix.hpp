#pragma once

#include "genus1/arith.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace genus1 {

// Small dense row-major matrix over BigInt or BigRat.
template <class T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    for (const auto &row : rows) {
      if (row.size() != c_)
        throw Error("ragged matrix literal", "Matrix");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }
  static Matrix diag(const std::vector<T> &d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
      m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }

  T &operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  friend bool operator==(const Matrix &, const Matrix &) = default;

  friend Matrix operator*(const Matrix &x, const Matrix &y) {
    if (x.c_ != y.r_)
      throw Error("dimension mismatch", "Matrix::operator*");
    Matrix z(x.r_, y.c_);
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t k = 0; k < x.c_; ++k) {
        if (x(i, k) == 0)
          continue;
        for (std::size_t j = 0; j < y.c_; ++j)
          z(i, j) += x(i, k) * y(k, j);
      }
    return z;
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  template <class F> auto map(F f) const {
    using U = decltype(f(std::declval<T>()));
    Matrix<U> m(r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        m(i, j) = f((*this)(i, j));
    return m;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < r_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < c_; ++j) {
        if (j)
          s += ",";
        s += genus1::to_string((*this)(i, j));
      }
      s += "]";
    }
    return s + "]";
  }

private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<BigRat>;

inline RatMatrix to_rat(const IntMatrix &m) {
  return m.map([](const BigInt &x) { return BigRat(x); });
}

// Exact determinant by fraction-free elimination (Bareiss).
template <class T> T det(const Matrix<T> &m) {
  if (!m.square())
    throw Error("determinant of non-square matrix", "det");
  const std::size_t n = m.rows();
  if (n == 0)
    return T(1);
  Matrix<T> a = m;
  T prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0)
        ++piv;
      if (piv == n)
        return T(0);
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a(k, j), a(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : T(-a(n - 1, n - 1));
}

inline RatMatrix inverse(const RatMatrix &m) {
  if (!m.square())
    throw Error("inverse of non-square matrix", "inverse");
  const std::size_t n = m.rows();
  RatMatrix a = m, inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0)
      ++piv;
    if (piv == n)
      throw Error("singular matrix", "inverse");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(k, j), a(piv, j));
      std::swap(inv(k, j), inv(piv, j));
    }
    BigRat s = 1 / a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= s;
      inv(k, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0)
        continue;
      BigRat f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

} // namespace genus1
