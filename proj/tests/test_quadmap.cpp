#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mvopq/catalog.hpp"
#include "mvopq/errors.hpp"
#include "mvopq/quadmap.hpp"

using namespace mvopq;

TEST_CASE("chain table") {
  const ChainTable t = ChainTable::build(6);
  CHECK(t.max_order() == 6);
  CHECK(t.at(0, 0) == MatPoly::identity(1));
  CHECK(t.at(1, 1) == MatPoly::scalar({0, 2}));
  CHECK(t.at(2, 1) == MatPoly::scalar({2}));
  CHECK(t.at(2, 2) == MatPoly::scalar({0, 0, 4}));
  CHECK(t.at(3, 0).is_zero());
  CHECK(t.at(2, 3).is_zero());
  CHECK_THROWS_AS(t.at(7, 0), DomainError);

  // d^j/dx^j [g(x^2)] = sum_k T_{j,k}(x) g^(k)(x^2) for random g
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Rational> cs;
    for (int k = 0; k <= 4; ++k) cs.emplace_back(d(rng));
    const MatPoly g = MatPoly::scalar(cs);
    MatPoly lhs = g.square_expand();
    for (int j = 1; j <= 6; ++j) {
      lhs = lhs.derivative();
      MatPoly rhs = MatPoly::zero(1);
      MatPoly gk = g;
      for (int k = 0; k <= j; ++k) {
        if (k > 0) gk = gk.derivative();
        if (k >= 1) rhs += t.at(j, k) * gk.square_expand();
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("scalar transforms") {
  const DiffOp delta = DiffOp::delta(1);
  // 4y d^2 + (2 - 4y) d
  const DiffOp even_expected(1, {{2, MatPoly::scalar({0, 4})}, {1, MatPoly::scalar({2, -4})}});
  CHECK(transform_even(delta) == even_expected);
  // 4y d^2 + (6 - 4y) d - 2
  const DiffOp odd_expected(1, {{2, MatPoly::scalar({0, 4})},
                                {1, MatPoly::scalar({6, -4})},
                                {0, MatPoly::scalar({-2})}});
  CHECK(transform_odd(delta) == odd_expected);
  // bare second derivative: 4y d^2 + 6 d on the odd side
  const DiffOp d2(1, {{2, MatPoly::identity(1)}});
  CHECK(transform_odd(d2) ==
        DiffOp(1, {{2, MatPoly::scalar({0, 4})}, {1, MatPoly::scalar({6})}}));
  // eigenvalue bookkeeping: -4n and -4n-2
  for (int n = 0; n <= 5; ++n) {
    CHECK(lambda_eigenvalue(transform_even(delta), n) == Matrix{{Rational(-4 * n)}});
    CHECK(lambda_eigenvalue(transform_odd(delta), n) == Matrix{{Rational(-4 * n - 2)}});
  }
}

TEST_CASE("second order matrix operator transforms in closed form") {
  // D = d^2 I + d 2x M + A_0 with M constant goes to
  //   even: 4y d^2 I + d (4y M + 2 I) + A_0
  //   odd:  4y d^2 I + d (4y M + 6 I) + A_0 + 2 M
  const CatalogEntry e = catalog_build("dg2005-3x3");
  const DiffOp D = e.operators.at(0);
  const Matrix M = Rational(2) * Matrix{{0, 0, 1}, {0, 0, 1}, {0, 0, 0}} - Matrix::identity(3);
  const Matrix A0{{-4, 0, 2}, {0, -4, 2}, {0, 0, 0}};
  REQUIRE(D == DiffOp(3, {{2, MatPoly::identity(3)},
                          {1, MatPoly::monomial(Rational(2) * M, 1)},
                          {0, MatPoly::constant(A0)}}));

  const MatPoly y4 = MatPoly::monomial(Rational(4) * M, 1);
  const DiffOp even_expected(3, {{2, MatPoly::scalar({0, 4}).to_diag(3)},
                                 {1, y4 + MatPoly::constant(Rational(2) * Matrix::identity(3))},
                                 {0, MatPoly::constant(A0)}});
  CHECK(transform_even(D) == even_expected);

  const DiffOp odd_expected(3, {{2, MatPoly::scalar({0, 4}).to_diag(3)},
                                {1, y4 + MatPoly::constant(Rational(6) * Matrix::identity(3))},
                                {0, MatPoly::constant(A0 + Rational(2) * M)}});
  CHECK(transform_odd(D) == odd_expected);
}

TEST_CASE("transforms reject mismatched parity") {
  CHECK_THROWS_AS(transform_even(DiffOp(1, {{0, MatPoly::x_power(1, 1)}})), ParityError);
  CHECK_THROWS_AS(transform_even(DiffOp(1, {{1, MatPoly::scalar({0, 0, 1})}})), ParityError);
  CHECK_THROWS_AS(transform_odd(DiffOp(1, {{1, MatPoly::identity(1)}})), ParityError);
  CHECK_THROWS_AS(transform_even(DiffOp(1, {{2, MatPoly::x_power(1, -2)}})), ParityError);
}

TEST_CASE("parity of monic polynomials") {
  const VerifyReport rep = parity_check(catalog_build("dg2004-2x2").weight, 7);
  CHECK(rep.overall());
  CHECK(rep.records.size() == 8);
  for (const auto& r : rep.records) CHECK(r.name == "parity");
}

TEST_CASE("polynomial correspondence under y = x^2") {
  const VerifyReport scalar_rep = correspondence_check(WeightSpec::scalar_hermite(1), 6);
  CHECK(scalar_rep.overall());
  const VerifyReport rep = correspondence_check(catalog_build("dg2004-2x2").weight, 6);
  CHECK(rep.overall());
  bool saw_even = false, saw_odd = false;
  for (const auto& r : rep.records) {
    if (r.name == "even-side") saw_even = true;
    if (r.name == "odd-side") saw_odd = true;
  }
  CHECK(saw_even);
  CHECK(saw_odd);
}

TEST_CASE("spectral match") {
  const CatalogEntry e = catalog_build("dg2004-2x2");
  const VerifyReport rep = spectral_match_check(e.weight, e.operators.at(0), 4);
  CHECK(rep.overall());
  CHECK(rep.records.size() == 20);
}

TEST_CASE("even transform keeps symmetry") {
  const CatalogEntry e = catalog_build("dg2004-2x2");
  const WeightSpec V = pushforward(e.weight, Parity::even);
  CHECK(symmetry_check(V, transform_even(e.operators.at(0)), 8).overall());
}
