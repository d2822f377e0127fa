#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilcat/errors.hpp"
#include "nilcat/matrix.hpp"
#include "nilcat/partition.hpp"
#include "nilcat/prng.hpp"
#include "nilcat/subspace.hpp"

namespace nilcat {

struct BracketTerm {
  int k = 0;
  Rational c;
  friend bool operator==(const BracketTerm& a, const BracketTerm& b) { return a.k == b.k && a.c == b.c; }
};

/// One input bracket [X_i, X_j] = sum_k c_k X_k. Indices are 0-based.
struct BracketSpec {
  int i = 0;
  int j = 0;
  std::vector<BracketTerm> terms;
};

/// Finite-dimensional algebra given by sparse antisymmetric structure
/// constants. Keys are stored with i < j; [X_j, X_i] is implied by
/// antisymmetry. Construction normalizes; the Jacobi identity is checked
/// separately by verify_jacobi.
class LieAlgebra {
public:
  using BracketMap = std::map<std::pair<int, int>, std::vector<BracketTerm>>;

  static LieAlgebra from_brackets(int dim, std::vector<std::string> labels,
                                  const std::vector<BracketSpec>& entries) {
    if (int(labels.size()) != dim) throw DimensionMismatch("label count != dim");
    std::map<std::pair<int, int>, std::map<int, Rational>> acc;
    for (const auto& e : entries) {
      if (e.i < 0 || e.i >= dim || e.j < 0 || e.j >= dim)
        throw IndexOutOfRange("bracket index out of range");
      if (e.i == e.j) throw DiagonalBracket("bracket [X,X] is not allowed");
      const bool flip = e.i > e.j;
      const auto key = flip ? std::make_pair(e.j, e.i) : std::make_pair(e.i, e.j);
      for (const auto& t : e.terms) {
        if (t.k < 0 || t.k >= dim) throw IndexOutOfRange("bracket target out of range");
        acc[key][t.k] += flip ? -t.c : t.c;
      }
    }
    LieAlgebra g;
    g.dim_ = dim;
    g.labels_ = std::move(labels);
    for (auto& [key, terms] : acc) {
      std::vector<BracketTerm> out;
      for (auto& [k, c] : terms)
        if (!is_zero(c)) out.push_back({k, c});
      if (!out.empty()) g.brackets_[key] = std::move(out);
    }
    return g;
  }

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const BracketMap& brackets() const { return brackets_; }

  /// [X_i, X_j] for any index order; antisymmetry applied.
  std::vector<BracketTerm> bracket_basis(int i, int j) const {
    if (i == j) return {};
    const bool flip = i > j;
    const auto it = brackets_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == brackets_.end()) return {};
    if (!flip) return it->second;
    std::vector<BracketTerm> out = it->second;
    for (auto& t : out) t.c = -t.c;
    return out;
  }

  /// Bilinear extension [u, v].
  std::vector<Rational> bracket(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
    if (int(u.size()) != dim_ || int(v.size()) != dim_) throw DimensionMismatch("bracket operand size");
    std::vector<Rational> out(dim_, Rational(0));
    for (const auto& [key, terms] : brackets_) {
      const auto [i, j] = key;
      const Rational f = u[i] * v[j] - u[j] * v[i];
      if (is_zero(f)) continue;
      for (const auto& t : terms) out[t.k] += f * t.c;
    }
    return out;
  }

  /// Matrix of y -> [x, y] in the defining basis.
  Matrix ad_matrix(const std::vector<Rational>& x) const {
    Matrix m(dim_, dim_);
    for (const auto& [key, terms] : brackets_) {
      const auto [i, j] = key;
      if (!is_zero(x[i]))
        for (const auto& t : terms) m(t.k, j) += x[i] * t.c;
      if (!is_zero(x[j]))
        for (const auto& t : terms) m(t.k, i) -= x[j] * t.c;
    }
    return m;
  }

  Matrix ad_basis(int i) const {
    std::vector<Rational> e(dim_, Rational(0));
    e[i] = 1;
    return ad_matrix(e);
  }

  std::vector<Rational> basis_vector(int i) const {
    std::vector<Rational> e(dim_, Rational(0));
    e[i] = 1;
    return e;
  }

private:
  int dim_ = 0;
  std::vector<std::string> labels_;
  BracketMap brackets_;
};

struct JacobiViolation {
  int i = 0, j = 0, k = 0;
  std::vector<Rational> residual;
};

/// Jacobi residual [[Xi,Xj],Xk] + [[Xk,Xi],Xj] + [[Xj,Xk],Xi] on every basis
/// triple; empty result iff the structure constants define a Lie law.
inline std::vector<JacobiViolation> verify_jacobi(const LieAlgebra& g) {
  const int n = g.dim();
  std::vector<JacobiViolation> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::vector<Rational> res(n, Rational(0));
        const int tri[3][2] = {{i, j}, {k, i}, {j, k}};
        const int last[3] = {k, j, i};
        for (int t = 0; t < 3; ++t)
          for (const auto& inner : g.bracket_basis(tri[t][0], tri[t][1]))
            for (const auto& outer : g.bracket_basis(inner.k, last[t])) res[outer.k] += inner.c * outer.c;
        bool nonzero = false;
        for (const auto& x : res)
          if (!is_zero(x)) {
            nonzero = true;
            break;
          }
        if (nonzero) out.push_back({i, j, k, std::move(res)});
      }
  return out;
}

/// C^0 = g, C^{k+1} = [g, C^k], computed until stabilization. For nilpotent
/// algebras the last entry is the zero subspace.
inline std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  const int n = g.dim();
  std::vector<Subspace> series{Subspace::full(n)};
  while (true) {
    const Subspace& cur = series.back();
    std::vector<std::vector<Rational>> gens;
    for (int i = 0; i < n; ++i) {
      const auto ei = g.basis_vector(i);
      for (int b = 0; b < cur.dim(); ++b) gens.push_back(g.bracket(ei, cur.basis_vector(b)));
    }
    Subspace next = Subspace::span(n, gens);
    if (next.dim() == cur.dim()) break;
    series.push_back(std::move(next));
    if (series.back().dim() == 0) break;
  }
  return series;
}

inline bool is_nilpotent(const std::vector<Subspace>& series) { return series.back().dim() == 0; }

inline bool is_nilpotent(const LieAlgebra& g) { return is_nilpotent(lower_central_series(g)); }

/// First k with C^k g = 0; requires nilpotency.
inline int nilindex(const LieAlgebra& g) {
  const auto series = lower_central_series(g);
  if (!is_nilpotent(series)) throw NotNilpotent("nilindex of a non-nilpotent algebra");
  return int(series.size()) - 1;
}

inline bool subspace_self_commutes(const LieAlgebra& g, const Subspace& s) {
  for (int a = 0; a < s.dim(); ++a)
    for (int b = a + 1; b < s.dim(); ++b) {
      const auto w = g.bracket(s.basis_vector(a), s.basis_vector(b));
      for (const auto& x : w)
        if (!is_zero(x)) return false;
    }
  return true;
}

/// Smallest k >= 0 with [C^k g, C^k g] = 0; 0 means abelian. This is the
/// operative meaning of k-abelian used throughout.
inline int commutativity_index(const LieAlgebra& g) {
  const auto series = lower_central_series(g);
  if (!is_nilpotent(series)) throw NotNilpotent("commutativity index of a non-nilpotent algebra");
  for (int k = 0; k < int(series.size()); ++k)
    if (subspace_self_commutes(g, series[k])) return k;
  return int(series.size()) - 1;  // zero subspace commutes; unreachable
}

/// Jordan type of ad(x) for x outside the derived subalgebra.
inline Partition char_seq_at(const LieAlgebra& g, const std::vector<Rational>& x) {
  const auto series = lower_central_series(g);
  const Subspace& derived = series.size() > 1 ? series[1] : Subspace::zero(g.dim());
  bool zero = true;
  for (const auto& v : x)
    if (!is_zero(v)) {
      zero = false;
      break;
    }
  if (zero || derived.contains(x)) throw VectorInDerivedAlgebra("characteristic sequence needs x outside C^1 g");
  return nilpotent_jordan_partition(g.ad_matrix(x));
}

/// Lexicographic maximum of char_seq_at over all basis vectors outside C^1 g
/// plus `samples` pseudo-random integer combinations with coefficients in
/// -3..3 (deterministic in `seed`). A certified lower bound for the
/// characteristic sequence; the classification claims it is attained.
inline Partition char_seq_estimate(const LieAlgebra& g, std::uint64_t seed, int samples) {
  const int n = g.dim();
  const auto series = lower_central_series(g);
  if (!is_nilpotent(series)) throw NotNilpotent("characteristic sequence of a non-nilpotent algebra");
  const Subspace& derived = series.size() > 1 ? series[1] : Subspace::zero(n);
  Partition best;
  const auto consider = [&](const std::vector<Rational>& x) {
    bool zero = true;
    for (const auto& v : x)
      if (!is_zero(v)) {
        zero = false;
        break;
      }
    if (zero || derived.contains(x)) return;
    Partition p = nilpotent_jordan_partition(g.ad_matrix(x));
    if (best.empty() || best < p) best = p;
  };
  for (int i = 0; i < n; ++i) consider(g.basis_vector(i));
  SplitMix64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = rng.range(-3, 3);
    consider(x);
  }
  return best;
}

/// {x : [x, v] = 0 for all v in s}, as the kernel of the stacked linear maps
/// x -> [x, v_b].
inline Subspace centralizer(const LieAlgebra& g, const Subspace& s) {
  const int n = g.dim();
  if (s.dim() == 0) return Subspace::full(n);
  Matrix sys(s.dim() * n, n);
  for (int b = 0; b < s.dim(); ++b) {
    const auto v = s.basis_vector(b);
    for (int j = 0; j < n; ++j) {
      const auto w = g.bracket(g.basis_vector(j), v);
      for (int r = 0; r < n; ++r) sys(b * n + r, j) = w[r];
    }
  }
  return kernel_basis(sys);
}

inline Subspace center(const LieAlgebra& g) { return centralizer(g, Subspace::full(g.dim())); }

struct QuotientResult {
  LieAlgebra algebra;
  /// (dim - ideal.dim) x dim matrix sending a vector of g to its coordinates
  /// on the echelon-pivot complement basis.
  Matrix projection;
  /// Original coordinates kept as the complement basis (ascending).
  std::vector<int> kept;
};

/// Quotient by a verified ideal. The complement basis is the set of
/// non-pivot coordinates of the ideal's echelon basis, so the output is
/// canonical and stable under permutations of the input generators.
inline QuotientResult quotient(const LieAlgebra& g, const Subspace& ideal) {
  const int n = g.dim();
  if (ideal.ambient() != n) throw DimensionMismatch("ideal ambient mismatch");
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < ideal.dim(); ++b)
      if (!ideal.contains(g.bracket(g.basis_vector(i), ideal.basis_vector(b))))
        throw NotAnIdeal("subspace is not an ideal");

  std::vector<bool> is_pivot(n, false);
  for (int r = 0; r < ideal.dim(); ++r) {
    for (int j = 0; j < n; ++j)
      if (!is_zero(ideal.basis()(r, j))) {
        is_pivot[j] = true;
        break;
      }
  }
  std::vector<int> kept;
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) kept.push_back(j);
  const int q = int(kept.size());

  // reduce() zeroes pivot coordinates, so the residual is supported on the
  // kept coordinates; column j of the projection is reduce(e_j) in those.
  Matrix proj(q, n);
  for (int j = 0; j < n; ++j) {
    const auto img = ideal.reduce(g.basis_vector(j));
    for (int a = 0; a < q; ++a) proj(a, j) = img[kept[a]];
  }

  std::vector<std::string> labels;
  for (int a = 0; a < q; ++a) labels.push_back(g.labels()[kept[a]]);
  std::vector<BracketSpec> entries;
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b) {
      const auto w = ideal.reduce(g.bracket(g.basis_vector(kept[a]), g.basis_vector(kept[b])));
      std::vector<BracketTerm> terms;
      for (int c = 0; c < q; ++c)
        if (!is_zero(w[kept[c]])) terms.push_back({c, w[kept[c]]});
      if (!terms.empty()) entries.push_back({a, b, std::move(terms)});
    }
  return {LieAlgebra::from_brackets(q, std::move(labels), entries), std::move(proj), std::move(kept)};
}

}  // namespace nilcat
