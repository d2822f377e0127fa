#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilcat/lie_algebra.hpp"

namespace nilcat {

/// File format: JSON object {dim, labels, brackets:[{i,j,terms:[{k,c}]}]}
/// with 1-based indices, i < j, and coefficients as exact rational strings.
/// Unlisted brackets are zero.
inline nlohmann::ordered_json algebra_to_json(const LieAlgebra& g) {
  nlohmann::ordered_json j;
  j["dim"] = g.dim();
  j["labels"] = g.labels();
  nlohmann::ordered_json brackets = nlohmann::ordered_json::array();
  for (const auto& [key, terms] : g.brackets()) {
    nlohmann::ordered_json entry;
    entry["i"] = key.first + 1;
    entry["j"] = key.second + 1;
    nlohmann::ordered_json jt = nlohmann::ordered_json::array();
    for (const auto& t : terms) jt.push_back({{"k", t.k + 1}, {"c", to_string(t.c)}});
    entry["terms"] = jt;
    brackets.push_back(entry);
  }
  j["brackets"] = brackets;
  return j;
}

inline LieAlgebra algebra_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("brackets"))
    throw ParseError("algebra file: expected an object with dim and brackets");
  const int dim = j.at("dim").get<int>();
  if (dim <= 0) throw ParseError("algebra file: dim must be positive");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = j.at("labels").get<std::vector<std::string>>();
    if (int(labels.size()) != dim) throw ParseError("algebra file: label count != dim");
  } else {
    for (int i = 1; i <= dim; ++i) labels.push_back("e" + std::to_string(i));
  }
  std::vector<BracketSpec> entries;
  for (const auto& e : j.at("brackets")) {
    const int i = e.at("i").get<int>();
    const int jj = e.at("j").get<int>();
    if (i < 1 || jj < 1 || i > dim || jj > dim) throw ParseError("algebra file: index out of range");
    if (i >= jj) throw ParseError("algebra file: brackets must have i < j");
    BracketSpec spec{i - 1, jj - 1, {}};
    for (const auto& t : e.at("terms")) {
      const int k = t.at("k").get<int>();
      if (k < 1 || k > dim) throw ParseError("algebra file: target index out of range");
      if (!t.at("c").is_string()) throw ParseError("algebra file: coefficients must be rational strings");
      spec.terms.push_back({k - 1, parse_rational(t.at("c").get<std::string>())});
    }
    entries.push_back(std::move(spec));
  }
  return LieAlgebra::from_brackets(dim, std::move(labels), entries);
}

inline std::string algebra_to_text(const LieAlgebra& g) { return algebra_to_json(g).dump(1) + "\n"; }

inline LieAlgebra algebra_from_text(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("algebra file: ") + e.what());
  }
  try {
    return algebra_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("algebra file: ") + e.what());
  }
}

inline void write_algebra_file(const LieAlgebra& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open for writing: " + path);
  out << algebra_to_text(g);
}

inline LieAlgebra read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return algebra_from_text(ss.str());
}

}  // namespace nilcat
