#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilcat/derivations.hpp"
#include "nilcat/lie_algebra.hpp"

namespace nilcat {

/// Aggregate of the invariants computed for one algebra. Fields that only
/// make sense for nilpotent algebras are optional.
struct AnalysisReport {
  int dim = 0;
  std::vector<int> lcs_dims;
  bool nilpotent = false;
  std::optional<int> nilindex;
  std::optional<int> commutativity_index;
  /// Jordan type at the first basis vector outside C^1 g (the catalog's
  /// claimed characteristic vector when one exists).
  std::optional<Partition> char_seq_claimed;
  std::optional<Partition> char_seq_sampled;
  int derived_dim = 0;
  int derivation_dim = 0;
  int diagonal_torus_dim = 0;
  std::optional<bool> char_nilpotent;
  std::vector<int> der_chain_dims;
  std::uint64_t seed = 0;
  int samples = 0;
};

inline AnalysisReport analyze(const LieAlgebra& g, std::uint64_t seed = 0, int samples = 64) {
  AnalysisReport rep;
  rep.dim = g.dim();
  rep.seed = seed;
  rep.samples = samples;
  const auto series = lower_central_series(g);
  for (const auto& s : series) rep.lcs_dims.push_back(s.dim());
  rep.nilpotent = series.back().dim() == 0;
  rep.derived_dim = series.size() > 1 ? series[1].dim() : 0;
  if (rep.nilpotent) {
    rep.nilindex = int(series.size()) - 1;
    rep.commutativity_index = commutativity_index(g);
    const Subspace& derived = series.size() > 1 ? series[1] : Subspace::zero(g.dim());
    for (int i = 0; i < g.dim(); ++i) {
      const auto e = g.basis_vector(i);
      if (!derived.contains(e)) {
        rep.char_seq_claimed = char_seq_at(g, e);
        break;
      }
    }
    rep.char_seq_sampled = char_seq_estimate(g, seed, samples);
  }
  rep.derivation_dim = derivation_space(g).dim();
  rep.diagonal_torus_dim = diagonal_torus(g).dim();
  if (rep.nilpotent) {
    const auto cn = characteristically_nilpotent(g);
    rep.char_nilpotent = cn.characteristically_nilpotent;
    rep.der_chain_dims = cn.chain_dims;
  }
  return rep;
}

inline nlohmann::ordered_json analysis_to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["dim"] = r.dim;
  j["lcs_dims"] = r.lcs_dims;
  j["nilpotent"] = r.nilpotent;
  if (r.nilindex) j["nilindex"] = *r.nilindex;
  if (r.commutativity_index) j["commutativity_index"] = *r.commutativity_index;
  if (r.char_seq_claimed) j["char_seq_at_basis"] = r.char_seq_claimed->parts();
  if (r.char_seq_sampled) j["char_seq_sampled"] = r.char_seq_sampled->parts();
  j["derived_dim"] = r.derived_dim;
  j["derivation_dim"] = r.derivation_dim;
  j["diagonal_torus_dim"] = r.diagonal_torus_dim;
  if (r.char_nilpotent) {
    j["characteristically_nilpotent"] = *r.char_nilpotent;
    j["der_chain_dims"] = r.der_chain_dims;
  }
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  return j;
}

inline std::string analysis_to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "dim: " << r.dim << "\n";
  os << "lcs dims:";
  for (int d : r.lcs_dims) os << ' ' << d;
  os << "\n";
  os << "nilpotent: " << (r.nilpotent ? "yes" : "no") << "\n";
  if (r.nilindex) os << "nilindex: " << *r.nilindex << "\n";
  if (r.commutativity_index) os << "commutativity index: " << *r.commutativity_index << "\n";
  if (r.char_seq_claimed) os << "char seq at first basis candidate: " << r.char_seq_claimed->str() << "\n";
  if (r.char_seq_sampled)
    os << "char seq sampled (seed " << r.seed << ", " << r.samples << " samples): "
       << r.char_seq_sampled->str() << "\n";
  os << "derived dim: " << r.derived_dim << "\n";
  os << "derivation space dim: " << r.derivation_dim << "\n";
  os << "diagonal torus dim: " << r.diagonal_torus_dim << "\n";
  if (r.char_nilpotent) {
    os << "characteristically nilpotent: " << (*r.char_nilpotent ? "yes" : "no") << " (Der chain:";
    for (int d : r.der_chain_dims) os << ' ' << d;
    os << ")\n";
  }
  return os.str();
}

}  // namespace nilcat
