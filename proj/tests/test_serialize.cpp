#include <catch_amalgamated.hpp>

#include "nilcat/catalog.hpp"
#include "nilcat/serialize.hpp"

using namespace nilcat;

TEST_CASE("round trip is the identity on structure constants") {
  for (const auto& g : {build_g0(9), build_family(1, 8), build_family(19, 10),
                        build_family(24, 7, Rational(3) / 2),
                        build_rmk(4, 5, Rational(1), Rational(1))}) {
    const auto back = algebra_from_text(algebra_to_text(g));
    CHECK(back.dim() == g.dim());
    CHECK(back.labels() == g.labels());
    CHECK(back.brackets() == g.brackets());
  }
}

TEST_CASE("alpha shows up exactly in the phi2-derived brackets") {
  const auto g = build_family(24, 7, Rational(3) / 2);
  const auto j = algebra_to_json(g);
  int occurrences = 0;
  for (const auto& e : j["brackets"])
    for (const auto& t : e["terms"])
      if (t["c"] == "-3/2") ++occurrences;
  // [X2,X3] = -a X5 - Y1 and [X2,X4] = -a X6 after normalization
  CHECK(occurrences == 2);
  bool x2x3 = false, x2x4 = false;
  for (const auto& e : j["brackets"]) {
    if (e["i"] == 2 && e["j"] == 3)
      for (const auto& t : e["terms"]) x2x3 = x2x3 || (t["k"] == 5 && t["c"] == "-3/2");
    if (e["i"] == 2 && e["j"] == 4)
      for (const auto& t : e["terms"]) x2x4 = x2x4 || (t["k"] == 6 && t["c"] == "-3/2");
  }
  CHECK(x2x3);
  CHECK(x2x4);
}

TEST_CASE("rational grammar is enforced") {
  const std::string tpl = R"({"dim":3,"labels":["a","b","c"],
    "brackets":[{"i":1,"j":2,"terms":[{"k":3,"c":"COEFF"}]}]})";
  auto with = [&](const std::string& c) {
    std::string s = tpl;
    s.replace(s.find("COEFF"), 5, c);
    return s;
  };
  CHECK_NOTHROW(algebra_from_text(with("-5/3")));
  CHECK_THROWS_AS(algebra_from_text(with("1.5")), ParseError);
  CHECK_THROWS_AS(algebra_from_text(with("1e3")), ParseError);
  CHECK_THROWS_AS(algebra_from_text(with(" 1")), ParseError);
}

TEST_CASE("structural validation") {
  CHECK_THROWS_AS(algebra_from_text("not json"), ParseError);
  CHECK_THROWS_AS(algebra_from_text(R"({"dim":0,"brackets":[]})"), ParseError);
  CHECK_THROWS_AS(
      algebra_from_text(R"({"dim":3,"brackets":[{"i":2,"j":1,"terms":[{"k":1,"c":"1"}]}]})"),
      ParseError);
  CHECK_THROWS_AS(
      algebra_from_text(R"({"dim":3,"brackets":[{"i":1,"j":4,"terms":[{"k":1,"c":"1"}]}]})"),
      ParseError);
  CHECK_THROWS_AS(
      algebra_from_text(R"({"dim":3,"brackets":[{"i":1,"j":2,"terms":[{"k":3,"c":1}]}]})"),
      ParseError);
  // labels default when omitted
  const auto g = algebra_from_text(R"({"dim":2,"brackets":[]})");
  CHECK(g.labels() == std::vector<std::string>{"e1", "e2"});
}
