#pragma once

#include <vector>

#include "nilcat/errors.hpp"
#include "nilcat/matrix.hpp"

namespace nilcat {

/// Linear subspace of Q^n held as a reduced row-echelon basis. The echelon
/// basis is canonical for the subspace, so equality is entry-wise comparison.
class Subspace {
public:
  Subspace() = default;

  static Subspace zero(int ambient) { return Subspace(ambient, Matrix(0, ambient)); }

  static Subspace full(int ambient) { return Subspace(ambient, Matrix::identity(ambient)); }

  /// Canonical span of a set of row vectors.
  static Subspace span(int ambient, const std::vector<std::vector<Rational>>& vectors) {
    for (const auto& v : vectors)
      if (int(v.size()) != ambient) throw DimensionMismatch("span: vector of wrong ambient dimension");
    Matrix rows(int(vectors.size()), ambient);
    for (int i = 0; i < int(vectors.size()); ++i)
      for (int j = 0; j < ambient; ++j) rows(i, j) = vectors[i][j];
    return span_rows(rows);
  }

  static Subspace span_rows(const Matrix& rows) {
    return Subspace(rows.cols(), rref(rows).reduced);
  }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  std::vector<Rational> basis_vector(int i) const { return basis_.row(i); }

  /// Residual of v after eliminating the pivot coordinates against the
  /// echelon basis; zero iff v lies in the subspace.
  std::vector<Rational> reduce(std::vector<Rational> v) const {
    if (int(v.size()) != ambient_) throw DimensionMismatch("reduce: wrong ambient dimension");
    for (int r = 0; r < basis_.rows(); ++r) {
      int p = pivot_col(r);
      if (p < 0 || is_zero(v[p])) continue;
      const Rational f = v[p];
      for (int j = p; j < ambient_; ++j)
        if (!is_zero(basis_(r, j))) v[j] -= f * basis_(r, j);
    }
    return v;
  }

  bool contains(const std::vector<Rational>& v) const {
    auto rest = reduce(v);
    for (const auto& x : rest)
      if (!is_zero(x)) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("contains: ambient mismatch");
    for (int r = 0; r < other.dim(); ++r)
      if (!contains(other.basis_vector(r))) return false;
    return true;
  }

  Subspace sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("sum: ambient mismatch");
    Matrix rows(dim() + other.dim(), ambient_);
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < ambient_; ++j) rows(i, j) = basis_(i, j);
    for (int i = 0; i < other.dim(); ++i)
      for (int j = 0; j < ambient_; ++j) rows(dim() + i, j) = other.basis_(i, j);
    return span_rows(rows);
  }

  /// Intersection via the kernel trick: x in A cap B iff x = u^T A = v^T B,
  /// i.e. (u, v) lies in the kernel of [A^T | -B^T].
  Subspace intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("intersect: ambient mismatch");
    const int a = dim(), b = other.dim();
    if (a == 0 || b == 0) return zero(ambient_);
    Matrix sys(ambient_, a + b);
    for (int j = 0; j < a; ++j)
      for (int i = 0; i < ambient_; ++i) sys(i, j) = basis_(j, i);
    for (int j = 0; j < b; ++j)
      for (int i = 0; i < ambient_; ++i) sys(i, a + j) = -other.basis_(j, i);
    const RrefResult red = rref(sys);
    std::vector<std::vector<Rational>> vecs;
    int pi = 0;
    for (int c = 0; c < a + b; ++c) {
      if (pi < int(red.pivots.size()) && red.pivots[pi] == c) {
        ++pi;
        continue;
      }
      // free column c -> one kernel vector (u, v); keep x = u^T A
      std::vector<Rational> coeff(a + b, Rational(0));
      coeff[c] = 1;
      for (int r = 0; r < int(red.pivots.size()); ++r) coeff[red.pivots[r]] = -red.reduced(r, c);
      std::vector<Rational> x(ambient_, Rational(0));
      for (int r = 0; r < a; ++r)
        if (!is_zero(coeff[r]))
          for (int j = 0; j < ambient_; ++j) x[j] += coeff[r] * basis_(r, j);
      vecs.push_back(std::move(x));
    }
    return span(ambient_, vecs);
  }

  friend bool operator==(const Subspace& x, const Subspace& y) {
    return x.ambient_ == y.ambient_ && x.basis_ == y.basis_;
  }

private:
  Subspace(int ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

  int pivot_col(int r) const {
    for (int j = 0; j < ambient_; ++j)
      if (!is_zero(basis_(r, j))) return j;
    return -1;
  }

  int ambient_ = 0;
  Matrix basis_{0, 0};
};

/// Canonical basis of the right kernel {v : M v = 0}; dim = cols - rank.
inline Subspace kernel_basis(const Matrix& m) {
  const RrefResult red = rref(m);
  const int cols = m.cols();
  std::vector<std::vector<Rational>> vecs;
  int pi = 0;
  for (int c = 0; c < cols; ++c) {
    if (pi < int(red.pivots.size()) && red.pivots[pi] == c) {
      ++pi;
      continue;
    }
    std::vector<Rational> v(cols, Rational(0));
    v[c] = 1;
    for (int r = 0; r < int(red.pivots.size()); ++r) v[red.pivots[r]] = -red.reduced(r, c);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(cols, vecs);
}

}  // namespace nilcat
