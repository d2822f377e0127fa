#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilcat/lie_algebra.hpp"

namespace nilcat {

/// Alternating bilinear map g x g -> g, stored sparsely on keys i < j.
class TwoCochain {
public:
  explicit TwoCochain(int dim) : dim_(dim) {}

  int dim() const { return dim_; }

  void add_value(int i, int j, int k, const Rational& c) {
    if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
      throw IndexOutOfRange("cochain index out of range");
    if (i == j) throw DiagonalBracket("cochain value on (X,X)");
    const bool flip = i > j;
    auto& vec = values_[flip ? std::make_pair(j, i) : std::make_pair(i, j)];
    if (vec.empty()) vec.assign(dim_, Rational(0));
    vec[k] += flip ? -c : c;
  }

  std::vector<Rational> eval_basis(int i, int j) const {
    std::vector<Rational> out(dim_, Rational(0));
    if (i == j) return out;
    const bool flip = i > j;
    const auto it = values_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == values_.end()) return out;
    out = it->second;
    if (flip)
      for (auto& x : out) x = -x;
    return out;
  }

  std::vector<Rational> eval(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
    std::vector<Rational> out(dim_, Rational(0));
    for (const auto& [key, val] : values_) {
      const auto [i, j] = key;
      const Rational f = u[i] * v[j] - u[j] * v[i];
      if (is_zero(f)) continue;
      for (int k = 0; k < dim_; ++k)
        if (!is_zero(val[k])) out[k] += f * val[k];
    }
    return out;
  }

  const std::map<std::pair<int, int>, std::vector<Rational>>& values() const { return values_; }

private:
  int dim_;
  std::map<std::pair<int, int>, std::vector<Rational>> values_;
};

struct CocycleViolation {
  int i = 0, j = 0, k = 0;
  std::vector<Rational> residual;
};

/// Chevalley-Eilenberg coboundary with adjoint coefficients on basis triples:
/// (dc)(x,y,z) = [x,c(y,z)] - [y,c(x,z)] + [z,c(x,y)]
///             - c([x,y],z) + c([x,z],y) - c([y,z],x).
/// Empty result iff c is a 2-cocycle.
inline std::vector<CocycleViolation> cocycle2_check(const LieAlgebra& g, const TwoCochain& c) {
  const int n = g.dim();
  if (c.dim() != n) throw DimensionMismatch("cochain dimension mismatch");
  std::vector<CocycleViolation> out;
  const auto bracket_vec = [&](int b, const std::vector<Rational>& v) {
    return g.bracket(g.basis_vector(b), v);
  };
  const auto c_vec_basis = [&](const std::vector<Rational>& w, int b) {
    std::vector<Rational> acc(n, Rational(0));
    for (int s = 0; s < n; ++s) {
      if (is_zero(w[s])) continue;
      const auto val = c.eval_basis(s, b);
      for (int k = 0; k < n; ++k)
        if (!is_zero(val[k])) acc[k] += w[s] * val[k];
    }
    return acc;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::vector<Rational> res = bracket_vec(i, c.eval_basis(j, k));
        const auto t2 = bracket_vec(j, c.eval_basis(i, k));
        const auto t3 = bracket_vec(k, c.eval_basis(i, j));
        std::vector<Rational> bij(n, Rational(0)), bik(n, Rational(0)), bjk(n, Rational(0));
        for (const auto& t : g.bracket_basis(i, j)) bij[t.k] += t.c;
        for (const auto& t : g.bracket_basis(i, k)) bik[t.k] += t.c;
        for (const auto& t : g.bracket_basis(j, k)) bjk[t.k] += t.c;
        const auto t4 = c_vec_basis(bij, k);
        const auto t5 = c_vec_basis(bik, j);
        const auto t6 = c_vec_basis(bjk, i);
        bool nonzero = false;
        for (int p = 0; p < n; ++p) {
          res[p] += -t2[p] + t3[p] - t4[p] + t5[p] - t6[p];
          if (!is_zero(res[p])) nonzero = true;
        }
        if (nonzero) out.push_back({i, j, k, std::move(res)});
      }
  return out;
}

// ---------------------------------------------------------------------------
// The deformation maps used by the classification, on the split algebra of
// dimension n with basis X1..X6, Y1..Y_{n-6}. Theta indices are 1-based.
// ---------------------------------------------------------------------------

namespace basis {
inline int X(int i) { return i - 1; }          // X1..X6 -> 0..5
inline int Y(int j) { return 5 + j; }          // Y1..Y_{n-6} -> 6..n-1
inline int theta_count(int n) { return n - 6; }
}  // namespace basis

/// psi1_{i,j}: [Y_i, Y_j] = X6. The defining display's argument indices are
/// normalized so the map is supported exactly on the pair (Y_i, Y_j).
inline TwoCochain psi1_map(int n, int i, int j) {
  using namespace basis;
  if (i < 1 || j < 1 || i > theta_count(n) || j > theta_count(n) || i == j)
    throw IndexOutOfRange("psi1 indices out of range");
  TwoCochain c(n);
  c.add_value(Y(i), Y(j), X(6), 1);
  return c;
}

/// psi_i^s for s in {2,3,4}: [Y_i, X_l] = X_{l+s} for 2 <= l <= 6-s.
inline TwoCochain psi_map(int n, int i, int s) {
  using namespace basis;
  if (i < 1 || i > theta_count(n)) throw IndexOutOfRange("psi index out of range");
  if (s < 2 || s > 4) throw IndexOutOfRange("psi shift must be 2, 3 or 4");
  TwoCochain c(n);
  for (int l = 2; l <= 6 - s; ++l) c.add_value(Y(i), X(l), X(l + s), 1);
  return c;
}

/// phi_{1,k}: [X5, X2] = [X3, X4] = Y_k.
inline TwoCochain phi1k_map(int n, int k) {
  using namespace basis;
  if (k < 1 || k > theta_count(n)) throw IndexOutOfRange("phi1k index out of range");
  TwoCochain c(n);
  c.add_value(X(5), X(2), Y(k), 1);
  c.add_value(X(3), X(4), Y(k), 1);
  return c;
}

/// phi_{3,k}: [X3, X2] = Y_k.
inline TwoCochain phi3k_map(int n, int k) {
  using namespace basis;
  if (k < 1 || k > theta_count(n)) throw IndexOutOfRange("phi3k index out of range");
  TwoCochain c(n);
  c.add_value(X(3), X(2), Y(k), 1);
  return c;
}

/// phi1: [X5, X2] = [X3, X4] = X6.
inline TwoCochain phi1_map(int n) {
  using namespace basis;
  TwoCochain c(n);
  c.add_value(X(5), X(2), X(6), 1);
  c.add_value(X(3), X(4), X(6), 1);
  return c;
}

/// phi2: [X_k, X2] = X_{k+2} for k = 3, 4 (the map the defining list leaves
/// with a stray label; context fixes it as phi2).
inline TwoCochain phi2_map(int n) {
  using namespace basis;
  TwoCochain c(n);
  c.add_value(X(3), X(2), X(5), 1);
  c.add_value(X(4), X(2), X(6), 1);
  return c;
}

/// phi3: [X3, X2] = X6.
inline TwoCochain phi3_map(int n) {
  using namespace basis;
  TwoCochain c(n);
  c.add_value(X(3), X(2), X(6), 1);
  return c;
}

/// Every named map defined on the dimension-n base algebra, labelled.
inline std::vector<std::pair<std::string, TwoCochain>> standard_cocycle_maps(int n) {
  using namespace basis;
  std::vector<std::pair<std::string, TwoCochain>> out;
  const int m = theta_count(n);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      out.emplace_back("psi1_" + std::to_string(i) + "," + std::to_string(j), psi1_map(n, i, j));
  for (int s = 2; s <= 4; ++s)
    for (int i = 1; i <= m; ++i)
      out.emplace_back("psi_" + std::to_string(i) + "^" + std::to_string(s), psi_map(n, i, s));
  for (int k = 1; k <= m; ++k) out.emplace_back("phi1_" + std::to_string(k), phi1k_map(n, k));
  for (int k = 1; k <= m; ++k) out.emplace_back("phi3_" + std::to_string(k), phi3k_map(n, k));
  out.emplace_back("phi1", phi1_map(n));
  out.emplace_back("phi2", phi2_map(n));
  out.emplace_back("phi3", phi3_map(n));
  return out;
}

}  // namespace nilcat
