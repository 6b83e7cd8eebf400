#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mvopq/classical.hpp"
#include "mvopq/diffop.hpp"
#include "mvopq/errors.hpp"

using namespace mvopq;

namespace {

Matrix rand_matrix(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rational(d(rng));
  return m;
}

MatPoly rand_poly(std::mt19937_64& rng, int n, int deg) {
  MatPoly p = MatPoly::zero(n);
  for (int k = 0; k <= deg; ++k) p += MatPoly::monomial(rand_matrix(rng, n), k);
  return p;
}

// random proper operator of order 2: deg C_j <= j
DiffOp rand_proper(std::mt19937_64& rng, int n) {
  DiffOp d(n);
  for (int j = 0; j <= 2; ++j) d.add_term(j, rand_poly(rng, n, j));
  return d;
}

}  // namespace

TEST_CASE("apply") {
  const std::vector<MatPoly> h = hermite_monic(3);
  CHECK(apply(h[2], DiffOp::delta(1)) == Rational(-4) * h[2]);
  CHECK(apply(MatPoly::x_power(1, 1), DiffOp(1, {{2, MatPoly::identity(1)}})).is_zero());
  CHECK(apply(MatPoly::zero(2), DiffOp::delta(2)).is_zero());
  CHECK_THROWS_AS(apply(MatPoly::identity(3), DiffOp::delta(2)), DimensionError);
}

TEST_CASE("hermite operator eigenvalues") {
  const DiffOp delta = DiffOp::delta(1);
  for (int n = 0; n <= 6; ++n)
    CHECK(lambda_eigenvalue(delta, n) == Matrix{{Rational(-2 * n)}});
  // order zero: Lambda is the constant coefficient of C_0
  const DiffOp c(2, {{0, MatPoly::constant(Matrix{{1, 2}, {3, 4}})}});
  CHECK(lambda_eigenvalue(c, 5) == Matrix{{1, 2}, {3, 4}});
}

TEST_CASE("compose") {
  const DiffOp delta = DiffOp::delta(1);
  const DiffOp dd = compose(delta, delta);
  for (int n = 0; n <= 5; ++n)
    CHECK(lambda_eigenvalue(dd, n) == Matrix{{Rational(4 * n * n)}});
  CHECK(compose(delta, DiffOp::identity(1)) == delta);
  CHECK(compose(DiffOp::identity(1), delta) == delta);

  std::mt19937_64 rng(771);
  for (int trial = 0; trial < 6; ++trial) {
    const DiffOp D1 = rand_proper(rng, 2);
    const DiffOp D2 = rand_proper(rng, 2);
    const DiffOp D3 = rand_proper(rng, 2);
    const MatPoly P = rand_poly(rng, 2, 4);
    // defining action property and associativity
    CHECK(apply(P, compose(D1, D2)) == apply(apply(P, D1), D2));
    CHECK(compose(compose(D1, D2), D3) == compose(D1, compose(D2, D3)));
    // Lambda is multiplicative over composition and additive over sums
    for (int n = 0; n <= 4; ++n) {
      CHECK(lambda_eigenvalue(compose(D1, D2), n) ==
            lambda_eigenvalue(D1, n) * lambda_eigenvalue(D2, n));
      CHECK(lambda_eigenvalue(D1 + D2, n) ==
            lambda_eigenvalue(D1, n) + lambda_eigenvalue(D2, n));
    }
    // leading coefficient transforms by the right eigenvalue
    const int deg = 4;
    CHECK(apply(P, D1).coeff(deg) == P.coeff(deg) * lambda_eigenvalue(D1, deg));
  }
}

TEST_CASE("properness") {
  CHECK(DiffOp::delta(2).is_proper());
  CHECK(DiffOp(1, {{1, MatPoly::x_power(1, 1)}}).is_proper());
  CHECK_FALSE(DiffOp(1, {{0, MatPoly::x_power(1, 1)}}).is_proper());
  CHECK_FALSE(DiffOp(1, {{1, MatPoly::x_power(1, -1)}}).is_proper());
  CHECK_FALSE(DiffOp(1, {{2, MatPoly::scalar({0, 0, 0, 1})}}).is_proper());
}

TEST_CASE("conjugation by x") {
  // d^2 I -> d^2 I + 2 x^{-1} d I
  const DiffOp d2(1, {{2, MatPoly::identity(1)}});
  const DiffOp e = conjugate_by_x(d2);
  CHECK(e.coeff(2) == MatPoly::identity(1));
  CHECK(e.coeff(1) == MatPoly::scalar({2}, -1));
  CHECK(e.coeff(0).is_zero());
  // defining identity x (F . E) = (x F) . D
  std::mt19937_64 rng(20240819);
  const MatPoly x = MatPoly::x_power(2, 1);
  for (int trial = 0; trial < 6; ++trial) {
    const DiffOp D = rand_proper(rng, 2);
    const DiffOp E = conjugate_by_x(D);
    const MatPoly F = rand_poly(rng, 2, 4);
    CHECK(x * apply(F, E) == apply(x * F, D));
  }
}

TEST_CASE("assembly from delta polynomials") {
  CHECK(op_from_delta_poly({{{Rational(0), Rational(1)}}}) == DiffOp::delta(1));
  CHECK(op_from_delta_poly({{{Rational(0), Rational(0), Rational(1)}}}) ==
        compose(DiffOp::delta(1), DiffOp::delta(1)));
  // 2x2 grid places entry polynomials at the matching matrix slots
  const DiffOp g = op_from_delta_poly({{{Rational(1)}, {Rational(0), Rational(2)}},
                                       {{Rational(0)}, {Rational(3)}}});
  const DiffOp expected =
      DiffOp(2, {{0, MatPoly::constant(Matrix{{1, 0}, {0, 3}})}}) +
      compose(DiffOp(2, {{0, MatPoly::constant(Matrix{{0, 2}, {0, 0}})}}), DiffOp::delta(2));
  CHECK(g == expected);
}

TEST_CASE("eigen check") {
  const VerifyReport ok = eigen_check(WeightSpec::scalar_hermite(1), DiffOp::delta(1), 5);
  CHECK(ok.overall());
  CHECK(ok.records.size() == 6);
  for (const auto& r : ok.records) CHECK(r.name == "eigen");

  // d . x preserves degree but is not an eigen operator of the Hermite weight
  const DiffOp bad(1, {{1, MatPoly::x_power(1, 1)}});
  const VerifyReport rep = eigen_check(WeightSpec::scalar_hermite(1), bad, 4);
  CHECK_FALSE(rep.overall());
  CHECK(rep.records[0].pass);
  CHECK(rep.records[1].pass);
  CHECK_FALSE(rep.records[2].pass);
  CHECK(rep.records[2].n == 2);
  CHECK_FALSE(rep.records[2].witness.empty());
}

TEST_CASE("symmetry check") {
  const VerifyReport ok = symmetry_check(WeightSpec::scalar_hermite(1), DiffOp::delta(1), 6);
  CHECK(ok.overall());
  for (const auto& r : ok.records) CHECK(r.name == "symmetry");

  const DiffOp d1(1, {{1, MatPoly::identity(1)}});
  CHECK_FALSE(symmetry_check(WeightSpec::scalar_hermite(1), d1, 3).overall());
}
