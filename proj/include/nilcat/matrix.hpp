#pragma once

#include <utility>
#include <vector>

#include "nilcat/errors.hpp"
#include "nilcat/rational.hpp"

namespace nilcat {

/// Dense matrix over Rational. Row-major storage.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(std::size_t(rows) * cols, Rational(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int r, int c) { return e_[std::size_t(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return e_[std::size_t(r) * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!nilcat::is_zero(x)) return false;
    return true;
  }

  std::vector<Rational> row(int r) const {
    return {e_.begin() + std::size_t(r) * cols_, e_.begin() + std::size_t(r + 1) * cols_};
  }

  std::vector<Rational> col(int c) const {
    std::vector<Rational> out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Matrix operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape");
    Matrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Rational& a = (*this)(i, k);
        if (nilcat::is_zero(a)) continue;
        for (int j = 0; j < rhs.cols_; ++j) {
          const Rational& b = rhs(k, j);
          if (!nilcat::is_zero(b)) out(i, j) += a * b;
        }
      }
    return out;
  }

  Matrix operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix difference shape");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - rhs.e_[i];
    return out;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    if (int(v.size()) != cols_) throw DimensionMismatch("matrix-vector shape");
    std::vector<Rational> out(rows_, Rational(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const Rational& a = (*this)(i, j);
        if (!nilcat::is_zero(a) && !nilcat::is_zero(v[j])) out[i] += a * v[j];
      }
    return out;
  }

  /// Row-major flattening, used to treat n x n matrices as n^2-vectors.
  std::vector<Rational> flatten() const { return e_; }

  static Matrix from_flat(int rows, int cols, const std::vector<Rational>& flat) {
    Matrix m(rows, cols);
    m.e_ = flat;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> e_;
};

struct RrefResult {
  Matrix reduced;
  int rank = 0;
  std::vector<int> pivots;
};

/// Reduced row-echelon form over the rationals. Canonical for the row space:
/// leading entries are 1, pivot columns are cleared above and below, zero rows
/// are dropped to the bottom.
inline RrefResult rref(const Matrix& m) {
  Matrix a = m;
  const int rows = a.rows(), cols = a.cols();
  int r = 0;
  std::vector<int> pivots;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(a(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < cols; ++j) std::swap(a(r, j), a(piv, j));
    const Rational inv = Rational(1) / a(r, c);
    for (int j = c; j < cols; ++j)
      if (!is_zero(a(r, j))) a(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const Rational f = a(i, c);
      for (int j = c; j < cols; ++j)
        if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(r, cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j) reduced(i, j) = a(i, j);
  return {std::move(reduced), r, std::move(pivots)};
}

/// Rank via fraction-free (Bareiss) elimination on an integer scaling of the
/// matrix. Keeps intermediate entries as exact minors, which controls
/// coefficient growth on the rank-sequence computations.
inline int rank(const Matrix& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class lcm_den = 1;
    for (int j = 0; j < cols; ++j) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (int j = 0; j < cols; ++j) {
      const Rational& q = m(i, j);
      a[i][j] = q.get_num() * (lcm_den / q.get_den());
    }
  }
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a[r].swap(a[piv]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class t = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace nilcat
