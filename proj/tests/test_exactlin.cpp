#include <catch_amalgamated.hpp>

#include "nilcat/matrix.hpp"
#include "nilcat/partition.hpp"
#include "nilcat/rational.hpp"
#include "nilcat/subspace.hpp"
#include "test_helpers.hpp"

using namespace nilcat;

TEST_CASE("rational parsing and formatting") {
  CHECK(to_string(parse_rational("3/2")) == "3/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(to_string(parse_rational("0")) == "0");
  CHECK(parse_rational("2/4") == Rational(1) / 2);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("+2"), ParseError);
  // exactness: (a/b)*(b/a) = 1
  const Rational q = parse_rational("355/113");
  CHECK(q * (Rational(113) / 355) == 1);
}

TEST_CASE("rref basics") {
  const Matrix id = Matrix::identity(2);
  const auto r = rref(id);
  CHECK(r.rank == 2);
  CHECK(r.reduced == id);

  Matrix dup(2, 2);
  dup(0, 0) = 1; dup(0, 1) = 1; dup(1, 0) = 1; dup(1, 1) = 1;
  const auto rd = rref(dup);
  CHECK(rd.rank == 1);
  CHECK(rd.reduced(0, 0) == 1);
  CHECK(rd.reduced(0, 1) == 1);
}

TEST_CASE("rref is idempotent and agrees with the minor-expansion rank oracle") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    const Matrix m = testutil::random_matrix(rng, 4, 6, -2, 2);
    const auto r = rref(m);
    CHECK(r.rank == testutil::rank_by_minors(m));
    CHECK(rank(m) == r.rank);  // Bareiss path agrees
    const auto again = rref(r.reduced);
    CHECK(again.reduced == r.reduced);
    // row spaces coincide
    CHECK(Subspace::span_rows(m) == Subspace::span_rows(r.reduced));
  }
}

TEST_CASE("kernel basics") {
  CHECK(kernel_basis(Matrix::identity(3)).dim() == 0);

  Matrix shift(3, 3);
  shift(0, 1) = 1;
  shift(1, 2) = 1;
  const auto ker = kernel_basis(shift);
  REQUIRE(ker.dim() == 1);
  CHECK(ker.basis_vector(0) == std::vector<Rational>{1, 0, 0});
}

TEST_CASE("kernel vectors satisfy M v = 0 and dim = cols - rank") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = testutil::random_matrix(rng, 3, 5, -2, 2);
    const auto ker = kernel_basis(m);
    CHECK(ker.dim() == 5 - rref(m).rank);
    for (int r = 0; r < ker.dim(); ++r) {
      const auto img = m.apply(ker.basis_vector(r));
      for (const auto& x : img) CHECK(is_zero(x));
    }
  }
}

TEST_CASE("nilpotent jordan partition") {
  CHECK(nilpotent_jordan_partition(Matrix(3, 3)) == Partition({1, 1, 1}));

  Matrix shift(5, 5);
  for (int i = 0; i + 1 < 5; ++i) shift(i, i + 1) = 1;
  CHECK(nilpotent_jordan_partition(shift) == Partition({5}));

  CHECK_THROWS_AS(nilpotent_jordan_partition(Matrix::identity(3)), NotNilpotent);

  // parts sum to the dimension and are weakly decreasing on random strictly
  // upper triangular matrices
  SplitMix64 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    Matrix n(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) n(i, j) = rng.range(-2, 2);
    const auto p = nilpotent_jordan_partition(n);
    CHECK(p.sum() == 6);
    for (std::size_t i = 0; i + 1 < p.parts().size(); ++i)
      CHECK(p.parts()[i] >= p.parts()[i + 1]);
  }
}

TEST_CASE("rank sequence of a nilpotent matrix strictly decreases to zero") {
  Matrix n(6, 6);
  SplitMix64 rng(5);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) n(i, j) = rng.range(-1, 2);
  std::vector<int> ranks{6};
  Matrix p = n;
  while (ranks.back() != 0) {
    ranks.push_back(rank(p));
    p = p * n;
  }
  for (std::size_t i = 0; i + 1 < ranks.size(); ++i) CHECK(ranks[i] > ranks[i + 1]);
}

TEST_CASE("span membership") {
  const auto s = Subspace::span(2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
  CHECK(s.contains({Rational(3), Rational(-7)}));
  const auto z = Subspace::span(4, {});
  CHECK(z.dim() == 0);
  CHECK(z.contains(std::vector<Rational>(4, Rational(0))));
  CHECK(!z.contains({Rational(1), Rational(0), Rational(0), Rational(0)}));
  CHECK_THROWS_AS(Subspace::span(3, {{Rational(1)}}), DimensionMismatch);
}

TEST_CASE("sum and intersection dimension identity") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::vector<Rational>> va, vb;
    const int ka = rng.range(0, 3), kb = rng.range(0, 3);
    for (int i = 0; i < ka; ++i) {
      std::vector<Rational> v(5);
      for (auto& x : v) x = rng.range(-2, 2);
      va.push_back(v);
    }
    for (int i = 0; i < kb; ++i) {
      std::vector<Rational> v(5);
      for (auto& x : v) x = rng.range(-2, 2);
      vb.push_back(v);
    }
    const auto A = Subspace::span(5, va), B = Subspace::span(5, vb);
    const auto S = A.sum(B), I = A.intersect(B);
    CHECK(A.dim() + B.dim() == S.dim() + I.dim());
    CHECK(S.contains(A));
    CHECK(S.contains(B));
    CHECK(A.contains(I));
    CHECK(B.contains(I));
    // canonical equality: sum is symmetric
    CHECK(S == B.sum(A));
    CHECK(I == B.intersect(A));
  }
}
