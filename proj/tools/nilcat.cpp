// Command-line front end: build catalog algebras, analyze algebra files,
// run the verification suites, and inspect E6 parabolic nilradicals.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "nilcat/analysis.hpp"
#include "nilcat/catalog.hpp"
#include "nilcat/e6.hpp"
#include "nilcat/serialize.hpp"
#include "nilcat/suites.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

struct BuildArgs {
  std::string family;
  int dim = 0;
  std::string alpha;
  int m = 0;
  int k = 0;
  std::string a = "1";
  std::string b = "1";
  std::string out;
};

int cmd_catalog_list(bool as_json) {
  using namespace nilcat;
  if (as_json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : list_families()) {
      nlohmann::ordered_json j;
      j["family"] = e.id;
      j["parity"] = e.parity == Parity::even ? "even" : "odd";
      j["min_m"] = e.min_m;
      j["needs_alpha"] = e.needs_alpha;
      j["derived_dim"] = e.derived_dim;
      j["cn_dims"] = e.cn_dims;
      j["recipe"] = e.recipe;
      arr.push_back(j);
    }
    std::cout << arr.dump(1) << "\n";
    return kOk;
  }
  for (const auto& e : list_families()) {
    std::cout << "g^" << e.id << "  " << (e.parity == Parity::even ? "even" : "odd ")
              << "  m >= " << e.min_m << (e.needs_alpha ? "  alpha" : "       ")
              << "  dim C1 = " << e.derived_dim;
    if (!e.cn_dims.empty()) {
      std::cout << "  CN at";
      for (int n : e.cn_dims) std::cout << ' ' << n;
    }
    std::cout << "  " << e.recipe << "\n";
  }
  return kOk;
}

int cmd_catalog_build(const BuildArgs& args) {
  using namespace nilcat;
  std::optional<LieAlgebra> g;
  if (args.family == "g0") {
    if (args.dim == 0) throw Error("g0 requires --dim");
    g = build_g0(args.dim);
  } else if (args.family == "gm") {
    if (args.m == 0) throw Error("gm requires --m");
    g = build_gm(args.m);
  } else if (args.family == "rmk") {
    if (args.m == 0 || args.k == 0) throw Error("rmk requires --m and --k");
    g = build_rmk(args.m, args.k, parse_rational(args.a), parse_rational(args.b));
  } else if (args.family.size() > 1 && args.family[0] == 'g') {
    int id = 0;
    for (char c : args.family.substr(1)) {
      if (c < '0' || c > '9') throw Error("unknown family token: " + args.family);
      id = id * 10 + (c - '0');
    }
    if (args.dim == 0) throw Error("family builds require --dim");
    std::optional<Rational> alpha;
    if (!args.alpha.empty()) alpha = parse_rational(args.alpha);
    g = build_family(id, args.dim, alpha);
  } else {
    throw Error("unknown family token: " + args.family +
                " (expected g0, g1..g45, gm or rmk)");
  }
  if (args.out.empty())
    std::cout << algebra_to_text(*g);
  else
    write_algebra_file(*g, args.out);
  return kOk;
}

int cmd_analyze(const std::string& path, bool as_json, std::uint64_t seed, int samples) {
  using namespace nilcat;
  const LieAlgebra g = read_algebra_file(path);
  const auto jac = verify_jacobi(g);
  if (!jac.empty()) {
    std::cerr << "error: not a Lie algebra; first violating triple ("
              << g.labels()[jac[0].i] << "," << g.labels()[jac[0].j] << ","
              << g.labels()[jac[0].k] << ")\n";
    return kInputError;
  }
  const auto rep = analyze(g, seed, samples);
  if (as_json)
    std::cout << analysis_to_json(rep).dump(1) << "\n";
  else
    std::cout << analysis_to_text(rep);
  return kOk;
}

int cmd_verify(const std::string& suite, int max_dim, std::uint64_t seed, bool as_json) {
  using namespace nilcat;
  const auto rep = suites::run_suite(suite, max_dim, seed);
  if (as_json)
    std::cout << rep.to_json().dump(1) << "\n";
  else
    std::cout << rep.to_text();
  return rep.all_passed() ? kOk : kVerifyFailed;
}

int cmd_e6(const std::string& subset, bool as_json) {
  using namespace nilcat;
  std::vector<int> indices;
  int cur = -1;
  for (char c : subset) {
    if (c >= '0' && c <= '9') {
      cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
    } else if (c == ',') {
      if (cur >= 0) indices.push_back(cur);
      cur = -1;
    } else {
      throw Error("bad subset syntax: " + subset);
    }
  }
  if (cur >= 0) indices.push_back(cur);
  const auto spec = e6::ParabolicSpec::of(indices);
  const auto rs = e6::RootSystem::build_e6();
  const auto dec = e6::layers(rs, spec);
  const auto dims = e6::nilradical_lcs_dims(rs, spec);
  const auto wit = e6::two_abelian_witness(rs, spec);
  const char* verdict = wit.kind == e6::AbelianKind::two_abelian
                            ? "TwoAbelian"
                            : (wit.kind == e6::AbelianKind::one_abelian ? "OneAbelian" : "DeeperAbelian");
  if (as_json) {
    nlohmann::ordered_json j;
    j["delta1"] = spec.delta1;
    j["phi2_plus"] = dec.phi2_plus.size();
    nlohmann::ordered_json layers = nlohmann::ordered_json::object();
    for (const auto& [h, v] : dec.layers) layers[std::to_string(h)] = v.size();
    j["layers"] = layers;
    j["lcs_dims"] = dims;
    j["verdict"] = verdict;
    if (wit.witness) {
      j["witness"] = {wit.witness->first.str(), wit.witness->second.str(),
                      (wit.witness->first + wit.witness->second).str()};
    }
    std::cout << j.dump(1) << "\n";
    return kOk;
  }
  std::cout << "Delta1 = " << spec.str() << "\n";
  std::cout << "|Phi2+| = " << dec.phi2_plus.size() << "\n";
  std::cout << "layers:";
  for (const auto& [h, v] : dec.layers) std::cout << " " << h << ":" << v.size();
  std::cout << "\nlcs dims:";
  for (int d : dims) std::cout << ' ' << d;
  std::cout << "\nverdict: " << verdict << "\n";
  if (wit.witness) {
    const auto& [a, b] = *wit.witness;
    std::cout << "witness: " << a.str() << " (h=" << e6::delta1_height(a, spec) << ") + " << b.str()
              << " (h=" << e6::delta1_height(b, spec) << ") = " << (a + b).str() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification workbench for the (n-5)-filiform catalog"};
  app.require_subcommand(1);

  auto* cat = app.add_subcommand("catalog", "catalog metadata and builders");
  cat->require_subcommand(1);
  bool list_json = false;
  auto* list = cat->add_subcommand("list", "list the 45 families");
  list->add_flag("--json", list_json, "machine-readable output");

  BuildArgs build_args;
  auto* build = cat->add_subcommand("build", "build one catalog algebra");
  build->add_option("family", build_args.family, "g0, g1..g45, gm or rmk")->required();
  build->add_option("--dim", build_args.dim, "dimension for g0/g1..g45");
  build->add_option("--alpha", build_args.alpha, "parameter for families 24 and 25");
  build->add_option("--m", build_args.m, "m for gm/rmk");
  build->add_option("--k", build_args.k, "k for rmk");
  build->add_option("--a", build_args.a, "rmk's [X2,X3] coefficient (default 1)");
  build->add_option("--b", build_args.b, "rmk's [X2,X4] coefficient (default 1)");
  build->add_option("-o,--out", build_args.out, "output file (default stdout)");

  std::string analyze_path;
  bool analyze_json = false;
  std::uint64_t analyze_seed = 0;
  int analyze_samples = 64;
  auto* an = app.add_subcommand("analyze", "full invariant report for one algebra file");
  an->add_option("file", analyze_path, "algebra file")->required();
  an->add_flag("--json", analyze_json, "machine-readable output");
  an->add_option("--seed", analyze_seed, "sampling seed (default 0)");
  an->add_option("--samples", analyze_samples, "sample count (default 64)");

  std::string suite = "all";
  int max_dim = 16;
  std::uint64_t verify_seed = 0;
  bool verify_json = false;
  auto* ver = app.add_subcommand("verify", "run the verification suites");
  ver->add_option("--suite", suite, "catalog|cocycles|cn|rigid|e6|all (default all)");
  ver->add_option("--max-dim", max_dim, "largest catalog dimension (default 16)");
  ver->add_option("--seed", verify_seed, "sampling seed (default 0)");
  ver->add_flag("--json", verify_json, "machine-readable output");

  std::string subset;
  bool e6_json = false;
  auto* e6cmd = app.add_subcommand("e6", "layer table and abelianity verdict for one Delta1");
  e6cmd->add_option("subset", subset, "comma-separated simple-root indices, e.g. 1,4")->required();
  e6cmd->add_flag("--json", e6_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (list->parsed()) return cmd_catalog_list(list_json);
    if (build->parsed()) return cmd_catalog_build(build_args);
    if (an->parsed()) return cmd_analyze(analyze_path, analyze_json, analyze_seed, analyze_samples);
    if (ver->parsed()) return cmd_verify(suite, max_dim, verify_seed, verify_json);
    if (e6cmd->parsed()) return cmd_e6(subset, e6_json);
  } catch (const nilcat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
