#pragma once

/*
 * Dense row-major matrices and fraction-free (Bareiss) elimination.
 *
 * Bareiss over an integral domain R: after step k every entry of the trailing
 * block is a (k+1)x(k+1) minor of the input, and the update
 *
 *     a[i][j] <- (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / a[k-1][k-1]
 *
 * divides exactly.  The scalar type provides exact_quotient(a, b) which must
 * throw on a nonzero remainder.
 */

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "quon/errors.hpp"
#include "quon/polynomial.hpp"

namespace quon {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& one, const T& zero = T()) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Top-left k x k block.
  Matrix leading_block(std::size_t k) const {
    Matrix b(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) b(r, c) = (*this)(r, c);
    return b;
  }

  template <typename F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw SizeMismatch("matrix product dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

inline Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) { return divide_exact(a, b); }

inline Rational exact_quotient(const Rational& a, const Rational& b) {
  if (b == 0) throw DivisionByZero("rational division by zero");
  return a / b;
}

inline Integer exact_quotient(const Integer& a, const Integer& b) {
  if (b == 0) throw DivisionByZero("integer division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw InexactDivision("integer division not exact");
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Polynomial mul_sub_entry(const Polynomial& a, const Polynomial& b, const Polynomial& c,
                                const Polynomial& d) {
  return mul_sub(a, b, c, d);
}

template <typename T>
T mul_sub_entry(const T& a, const T& b, const T& c, const T& d) {
  return a * b - c * d;
}

/// Determinant by Bareiss elimination with row pivoting on zero pivots.
template <typename T>
T bareiss_determinant(Matrix<T> a, const T& one) {
  if (!a.square()) throw SizeMismatch("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return one;
  const T zero{};
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == zero) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == zero) ++p;
      if (p == n) return zero;
      a.swap_rows(k, p);
      negate = !negate;
    }
    const T& pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = exact_quotient(mul_sub_entry(pivot, a(i, j), a(i, k), a(k, j)), prev);
      a(i, k) = zero;
    }
    prev = a(k, k);
  }
  T det = a(n - 1, n - 1);
  return negate ? T(zero - det) : det;
}

/*
 * All leading principal minors d_1..d_n.  Without pivoting the Bareiss pivot
 * after step k is exactly d_{k+1}; once a pivot vanishes the remaining minors
 * are computed one block at a time with pivoting.
 */
template <typename T>
std::vector<T> bareiss_leading_minors(const Matrix<T>& input, const T& one) {
  if (!input.square()) throw SizeMismatch("leading minors of a non-square matrix");
  const std::size_t n = input.rows();
  const T zero{};
  std::vector<T> minors;
  minors.reserve(n);
  Matrix<T> a = input;
  T prev = one;
  std::size_t k = 0;
  for (; k < n; ++k) {
    if (a(k, k) == zero) break;
    minors.push_back(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = exact_quotient(mul_sub_entry(a(k, k), a(i, j), a(i, k), a(k, j)), prev);
      a(i, k) = zero;
    }
    prev = a(k, k);
  }
  if (k < n) {
    minors.push_back(zero);
    for (std::size_t size = k + 2; size <= n; ++size)
      minors.push_back(bareiss_determinant(input.leading_block(size), one));
  }
  return minors;
}

}  // namespace quon
