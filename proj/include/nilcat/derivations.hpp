#pragma once

#include <string>
#include <vector>

#include "nilcat/lie_algebra.hpp"
#include "nilcat/matrix.hpp"
#include "nilcat/subspace.hpp"

namespace nilcat {

/// Der(g) as a subspace of n x n matrices flattened row-major.
struct DerivationSpace {
  int algebra_dim = 0;
  Subspace space;

  int dim() const { return space.dim(); }

  std::vector<Matrix> basis_matrices() const {
    std::vector<Matrix> out;
    out.reserve(space.dim());
    for (int r = 0; r < space.dim(); ++r)
      out.push_back(Matrix::from_flat(algebra_dim, algebra_dim, space.basis_vector(r)));
    return out;
  }
};

/// Kernel of D[Xi,Xj] - [DXi,Xj] - [Xi,DXj] = 0 over all basis pairs.
/// Unknowns are the entries D_{p,q} at flat index p*n+q.
inline DerivationSpace derivation_space(const LieAlgebra& g) {
  const int n = g.dim();
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto cij = g.bracket_basis(i, j);
      for (int p = 0; p < n; ++p) {
        std::vector<Rational> row(std::size_t(n) * n, Rational(0));
        bool nonzero = false;
        for (const auto& t : cij) {
          row[std::size_t(p) * n + t.k] += t.c;
          nonzero = true;
        }
        for (int q = 0; q < n; ++q) {
          for (const auto& t : g.bracket_basis(q, j))
            if (t.k == p) {
              row[std::size_t(q) * n + i] -= t.c;
              nonzero = true;
            }
          for (const auto& t : g.bracket_basis(i, q))
            if (t.k == p) {
              row[std::size_t(q) * n + j] -= t.c;
              nonzero = true;
            }
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  Matrix sys(int(rows.size()), n * n);
  for (int r = 0; r < int(rows.size()); ++r)
    for (int c = 0; c < n * n; ++c) sys(r, c) = rows[r][c];
  return {n, kernel_basis(sys)};
}

struct DerivationViolation {
  int i = 0, j = 0;
  std::vector<Rational> residual;
};

/// Residuals D[Xi,Xj] - [DXi,Xj] - [Xi,DXj] on all pairs; empty iff d is a
/// derivation.
inline std::vector<DerivationViolation> derivation_residuals(const LieAlgebra& g, const Matrix& d) {
  const int n = g.dim();
  if (d.rows() != n || d.cols() != n) throw DimensionMismatch("derivation candidate must be n x n");
  std::vector<DerivationViolation> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<Rational> res(n, Rational(0));
      for (const auto& t : g.bracket_basis(i, j))
        for (int p = 0; p < n; ++p)
          if (!is_zero(d(p, t.k))) res[p] += d(p, t.k) * t.c;
      const auto dei = d.col(i), dej = d.col(j);
      const auto lhs1 = g.bracket(dei, g.basis_vector(j));
      const auto lhs2 = g.bracket(g.basis_vector(i), dej);
      bool nonzero = false;
      for (int p = 0; p < n; ++p) {
        res[p] -= lhs1[p] + lhs2[p];
        if (!is_zero(res[p])) nonzero = true;
      }
      if (nonzero) out.push_back({i, j, std::move(res)});
    }
  return out;
}

inline bool is_derivation(const LieAlgebra& g, const Matrix& d) {
  return derivation_residuals(g, d).empty();
}

struct CharNilpotence {
  bool characteristically_nilpotent = false;
  /// Dimensions of D0 = Der(g), D1 = [Der, D0], ... until 0 or stabilization.
  std::vector<int> chain_dims;
  /// Zero subspace on success; the stabilized nonzero subspace otherwise.
  Subspace terminal;
};

/// Der(g) is nilpotent iff its lower central series, computed directly on
/// matrix subspaces, reaches zero.
inline CharNilpotence characteristically_nilpotent(const LieAlgebra& g) {
  const int n = g.dim();
  const DerivationSpace der = derivation_space(g);
  const auto der_mats = der.basis_matrices();
  Subspace cur = der.space;
  std::vector<int> dims{cur.dim()};
  while (true) {
    std::vector<std::vector<Rational>> gens;
    for (const auto& a : der_mats)
      for (int b = 0; b < cur.dim(); ++b) {
        const Matrix bm = Matrix::from_flat(n, n, cur.basis_vector(b));
        gens.push_back((a * bm - bm * a).flatten());
      }
    Subspace next = Subspace::span(n * n, gens);
    if (next.dim() == cur.dim()) return {cur.dim() == 0, dims, cur};
    dims.push_back(next.dim());
    cur = std::move(next);
    if (cur.dim() == 0) return {true, dims, cur};
  }
}

/// Solution space of the weight system {l_i + l_j = l_k : c_ij^k != 0} in the
/// defining basis. dim >= 1 certifies a nonzero diagonal (hence semisimple)
/// derivation, so rank(g) >= 1; dim 0 alone proves nothing about rank.
inline Subspace diagonal_torus(const LieAlgebra& g) {
  const int n = g.dim();
  std::vector<std::vector<Rational>> rows;
  for (const auto& [key, terms] : g.brackets()) {
    const auto [i, j] = key;
    for (const auto& t : terms) {
      std::vector<Rational> row(n, Rational(0));
      row[i] += 1;
      row[j] += 1;
      row[t.k] -= 1;
      rows.push_back(std::move(row));
    }
  }
  Matrix sys(int(rows.size()), n);
  for (int r = 0; r < int(rows.size()); ++r)
    for (int c = 0; c < n; ++c) sys(r, c) = rows[r][c];
  return kernel_basis(sys);
}

inline Matrix diagonal_matrix(const std::vector<Rational>& weights) {
  Matrix m(int(weights.size()), int(weights.size()));
  for (int i = 0; i < int(weights.size()); ++i) m(i, i) = weights[i];
  return m;
}

}  // namespace nilcat
