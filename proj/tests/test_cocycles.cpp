#include <catch_amalgamated.hpp>

#include "nilcat/catalog.hpp"
#include "nilcat/cocycles.hpp"

using namespace nilcat;

TEST_CASE("zero cochain is a cocycle") {
  const auto g = build_g0(8);
  CHECK(cocycle2_check(g, TwoCochain(8)).empty());
}

TEST_CASE("cochain storage is alternating") {
  TwoCochain c(7);
  c.add_value(3, 1, 5, Rational(2));
  CHECK(c.eval_basis(1, 3)[5] == Rational(-2));
  CHECK(c.eval_basis(3, 1)[5] == Rational(2));
  CHECK_THROWS_AS(c.add_value(2, 2, 0, Rational(1)), DiagonalBracket);
}

TEST_CASE("phi1 is a cocycle of g0 for n = 7..12") {
  for (int n = 7; n <= 12; ++n) CHECK(cocycle2_check(build_g0(n), phi1_map(n)).empty());
}

TEST_CASE("every classification map is a cocycle of g0") {
  for (int n : {7, 9, 12}) {
    const auto g = build_g0(n);
    for (const auto& [name, c] : standard_cocycle_maps(n)) {
      INFO(name << " on g0^" << n);
      CHECK(cocycle2_check(g, c).empty());
    }
  }
}

TEST_CASE("sign-flipped phi1 is not a cocycle") {
  // (X5,X2) -> X6 together with (X3,X4) -> -X6 fails the coboundary identity
  const int n = 7;
  TwoCochain c(n);
  c.add_value(basis::X(5), basis::X(2), basis::X(6), Rational(1));
  c.add_value(basis::X(3), basis::X(4), basis::X(6), Rational(-1));
  CHECK(!cocycle2_check(build_g0(n), c).empty());
}

TEST_CASE("psi range guards") {
  CHECK_THROWS_AS(psi1_map(7, 1, 2), IndexOutOfRange);  // only one theta at n=7
  CHECK_THROWS_AS(psi_map(7, 2, 3), IndexOutOfRange);
  CHECK_THROWS_AS(psi_map(8, 1, 5), IndexOutOfRange);
  CHECK_THROWS_AS(phi1k_map(8, 3), IndexOutOfRange);
}

TEST_CASE("adding a listed cocycle keeps the Jacobi residual zero") {
  // the catalog recipes are first-order directions that actually integrate
  const auto g = build_family(44, 8);  // g0 + phi1 + psi1_{1,2}
  CHECK(verify_jacobi(g).empty());
}
