#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nilcat/errors.hpp"

namespace nilcat {
namespace e6 {

/// Integer coordinates over the simple roots alpha_1..alpha_6.
struct Root {
  std::array<int, 6> c{};

  int& operator[](int i) { return c[i]; }
  int operator[](int i) const { return c[i]; }

  int height() const {
    int h = 0;
    for (int x : c) h += x;
    return h;
  }

  bool positive() const {
    for (int x : c)
      if (x < 0) return false;
    return height() > 0;
  }

  friend Root operator+(const Root& a, const Root& b) {
    Root r;
    for (int i = 0; i < 6; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Root operator-(const Root& a, const Root& b) {
    Root r;
    for (int i = 0; i < 6; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend auto operator<=>(const Root&, const Root&) = default;

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < 6; ++i) {
      if (i) os << ',';
      os << c[i];
    }
    os << ')';
    return os.str();
  }
};

inline Root simple(int i) {
  if (i < 1 || i > 6) throw IndexOutOfRange("simple root index must be in 1..6");
  Root r;
  r.c[i - 1] = 1;
  return r;
}

/// Sum of all six simple roots; a root of E6.
inline Root delta1() {
  Root r;
  r.c.fill(1);
  return r;
}

/// E6 root system generated from the Cartan matrix by reflection closure.
/// Numbering: chain 1-3-4-5-6 with node 2 attached to 4, which is the
/// labelling fixed by the maximal-root coefficients (1,2,2,3,2,1).
class RootSystem {
public:
  static RootSystem build_e6() {
    RootSystem rs;
    rs.cartan_ = {{{2, 0, -1, 0, 0, 0},
                   {0, 2, 0, -1, 0, 0},
                   {-1, 0, 2, -1, 0, 0},
                   {0, -1, -1, 2, -1, 0},
                   {0, 0, 0, -1, 2, -1},
                   {0, 0, 0, 0, -1, 2}}};
    std::set<Root> all;
    std::vector<Root> frontier;
    for (int i = 1; i <= 6; ++i) {
      all.insert(simple(i));
      frontier.push_back(simple(i));
    }
    while (!frontier.empty()) {
      std::vector<Root> next;
      for (const Root& b : frontier)
        for (int i = 0; i < 6; ++i) {
          const Root r = rs.reflect(b, i);
          if (all.insert(r).second) next.push_back(r);
        }
      frontier = std::move(next);
    }
    rs.all_ = std::move(all);
    for (const Root& r : rs.all_)
      if (r.positive()) rs.positive_.push_back(r);
    std::sort(rs.positive_.begin(), rs.positive_.end(),
              [](const Root& a, const Root& b) {
                if (a.height() != b.height()) return a.height() < b.height();
                return a < b;
              });
    return rs;
  }

  /// s_i(beta) = beta - <beta, alpha_i^v> alpha_i (0-based node index).
  Root reflect(const Root& beta, int i) const {
    int pairing = 0;
    for (int j = 0; j < 6; ++j) pairing += beta[j] * cartan_[j][i];
    Root r = beta;
    r.c[i] -= pairing;
    return r;
  }

  const std::vector<Root>& positive_roots() const { return positive_; }
  bool is_root(const Root& r) const { return all_.count(r) != 0; }
  const std::array<std::array<int, 6>, 6>& cartan() const { return cartan_; }

  std::size_t size() const { return all_.size(); }

  /// The unique positive root dominating all others coefficient-wise.
  Root maximal_root() const {
    Root best = positive_.back();
    for (const Root& r : positive_) {
      bool dominated = true;
      for (int i = 0; i < 6; ++i)
        if (r[i] > best[i]) dominated = false;
      if (!dominated) throw Error("no coefficient-wise maximal root");
    }
    return best;
  }

private:
  std::array<std::array<int, 6>, 6> cartan_{};
  std::set<Root> all_;
  std::vector<Root> positive_;
};

/// Nonempty subset of the simple roots, 1-based indices.
struct ParabolicSpec {
  std::vector<int> delta1;

  static ParabolicSpec of(std::vector<int> indices) {
    if (indices.empty()) throw IndexOutOfRange("delta1 must be nonempty");
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    for (int i : indices)
      if (i < 1 || i > 6) throw IndexOutOfRange("delta1 indices must be in 1..6");
    return {std::move(indices)};
  }

  std::string str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < delta1.size(); ++i) {
      if (i) os << ',';
      os << "a" << delta1[i];
    }
    os << '}';
    return os.str();
  }
};

/// Delta1-height: the sum of a root's coefficients over the chosen simples.
inline int delta1_height(const Root& r, const ParabolicSpec& spec) {
  int h = 0;
  for (int i : spec.delta1) h += r[i - 1];
  return h;
}

struct LayerDecomposition {
  /// Positive roots with nonzero delta1-support; the nilradical's root set.
  std::vector<Root> phi2_plus;
  /// Partition of phi2_plus by delta1-height.
  std::map<int, std::vector<Root>> layers;
};

inline LayerDecomposition layers(const RootSystem& rs, const ParabolicSpec& spec) {
  LayerDecomposition out;
  for (const Root& r : rs.positive_roots()) {
    const int h = delta1_height(r, spec);
    if (h >= 1) {
      out.phi2_plus.push_back(r);
      out.layers[h].push_back(r);
    }
  }
  return out;
}

/// dim C^k n(Delta1) = number of roots in layers of height >= k+1.
inline std::vector<int> nilradical_lcs_dims(const RootSystem& rs, const ParabolicSpec& spec) {
  const auto dec = layers(rs, spec);
  int max_h = 0;
  for (const auto& [h, v] : dec.layers) max_h = std::max(max_h, h);
  std::vector<int> dims;
  for (int k = 0; k <= max_h; ++k) {
    int d = 0;
    for (const auto& [h, v] : dec.layers)
      if (h >= k + 1) d += int(v.size());
    dims.push_back(d);
  }
  return dims;
}

enum class AbelianKind { two_abelian, one_abelian, deeper_abelian };

struct WitnessResult {
  AbelianKind kind = AbelianKind::one_abelian;
  /// For two_abelian: roots of height >= 2 whose sum is a root.
  std::optional<std::pair<Root, Root>> witness;
  /// For deeper_abelian: the offending height >= 3 pair.
  std::optional<std::pair<Root, Root>> deep_pair;
};

/// Decides the abelianity class of n(Delta1) by brute force over layer pairs:
/// brackets are governed by root addition, so [C^1, C^1] != 0 iff two roots of
/// height >= 2 sum to a root, and [C^2, C^2] = 0 iff no two roots of height
/// >= 3 do.
inline WitnessResult two_abelian_witness(const RootSystem& rs, const ParabolicSpec& spec) {
  const auto dec = layers(rs, spec);
  std::vector<Root> high2, high3;
  for (const Root& r : dec.phi2_plus) {
    const int h = delta1_height(r, spec);
    if (h >= 2) high2.push_back(r);
    if (h >= 3) high3.push_back(r);
  }
  WitnessResult res;
  for (std::size_t a = 0; a < high3.size() && !res.deep_pair; ++a)
    for (std::size_t b = a + 1; b < high3.size(); ++b)
      if (rs.is_root(high3[a] + high3[b])) {
        res.deep_pair = {high3[a], high3[b]};
        break;
      }
  if (res.deep_pair) {
    res.kind = AbelianKind::deeper_abelian;
    return res;
  }
  for (std::size_t a = 0; a < high2.size() && !res.witness; ++a)
    for (std::size_t b = a + 1; b < high2.size(); ++b)
      if (rs.is_root(high2[a] + high2[b])) {
        res.witness = {high2[a], high2[b]};
        break;
      }
  res.kind = res.witness ? AbelianKind::two_abelian : AbelianKind::one_abelian;
  return res;
}

/// The sixteen subsets whose nilradicals are asserted to be 2-abelian.
inline const std::vector<std::vector<int>>& script_l() {
  static const std::vector<std::vector<int>> sets = {
      {1, 4}, {4, 6}, {3, 5}, {3, 4}, {4, 5}, {2, 3}, {2, 5}, {2, 4},
      {1, 2, 3}, {2, 5, 6}, {1, 2, 5}, {2, 3, 6}, {1, 4, 6}, {1, 2, 6},
      {1, 3, 5}, {3, 5, 6}};
  return sets;
}

}  // namespace e6
}  // namespace nilcat
