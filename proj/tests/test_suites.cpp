#include <catch_amalgamated.hpp>

#include <set>

#include "nilcat/analysis.hpp"
#include "nilcat/suites.hpp"

using namespace nilcat;

TEST_CASE("cocycle suite passes at small dimensions") {
  const auto rep = suites::run_cocycles(9, 0);
  CHECK(rep.all_passed());
  CHECK(rep.checks.size() == 3);  // n = 7, 8, 9
}

TEST_CASE("e6 suite passes") {
  const auto rep = suites::run_e6(16, 0);
  INFO(rep.to_text());
  CHECK(rep.all_passed());
}

TEST_CASE("catalog suite at dimension 9 fails on exactly the two filiformity defects") {
  // Families 9 and 10 at dimension 9 pair Y2 with Y3 while phi_{1,1} is
  // present; any such law has characteristic sequence (5,2,1,1), so the
  // source's (n-5)-filiformity claim fails for them (see the project notes).
  const auto rep = suites::run_catalog(9, 0);
  std::set<std::string> failing;
  for (const auto& c : rep.checks)
    if (!c.passed) failing.insert(c.id);
  CHECK(failing == std::set<std::string>{"cat/g9^9/invariants", "cat/g9^10/invariants"});
}

TEST_CASE("catalog suite passes at dimension 8") {
  const auto rep = suites::run_catalog(8, 0);
  INFO(rep.to_text());
  CHECK(rep.all_passed());
}

TEST_CASE("cn suite at dimension 7 matches the asserted list exactly") {
  const auto rep = suites::run_cn(7, 0);
  INFO(rep.to_text());
  CHECK(rep.all_passed());
}

TEST_CASE("cn suite at dimension 9 fails on exactly the four documented defects") {
  // The asserted list of characteristically nilpotent laws is provably
  // inconsistent with the classification itself for g8^30, g8^34, g8^39
  // and g9^36 (see the project notes); the suite reports those honestly.
  const auto rep = suites::run_cn(9, 0);
  std::set<std::string> failing;
  for (const auto& c : rep.checks)
    if (!c.passed) failing.insert(c.id);
  CHECK(failing == std::set<std::string>{"cn/g8^30", "cn/g8^34", "cn/g8^39", "cn/g9^36"});
}

TEST_CASE("reports are deterministic") {
  const auto a = suites::run_suite("all", 9, 0);
  const auto b = suites::run_suite("all", 9, 0);
  CHECK(a.to_text() == b.to_text());
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_json().dump(1) == b.to_json().dump(1));
}

TEST_CASE("unknown suite name is rejected") {
  CHECK_THROWS_AS(suites::run_suite("bogus", 9, 0), Error);
}

TEST_CASE("analysis report for a solvable algebra omits nilpotent-only fields") {
  const auto r = analyze(build_rmk(4, 4, Rational(1), Rational(1)), 0, 4);
  CHECK(!r.nilpotent);
  CHECK(!r.nilindex.has_value());
  CHECK(!r.commutativity_index.has_value());
  CHECK(!r.char_seq_sampled.has_value());
  CHECK(r.lcs_dims.front() == 9);
  CHECK(r.lcs_dims.back() != 0);
}

TEST_CASE("analysis report for a catalog algebra") {
  const auto r = analyze(build_family(11, 7), 0, 16);
  CHECK(r.nilpotent);
  CHECK(r.nilindex == 5);
  CHECK(r.commutativity_index == 2);
  CHECK(r.char_seq_claimed == Partition({5, 1, 1}));
  CHECK(r.char_seq_sampled == Partition({5, 1, 1}));
  CHECK(r.derivation_dim == 10);
  CHECK(r.diagonal_torus_dim == 0);
  CHECK(r.char_nilpotent == true);
}
