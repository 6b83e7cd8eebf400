#include "mvopq/weights.hpp"

#include "mvopq/errors.hpp"

namespace mvopq {

Base Base::laguerre(const Rational& alpha) {
  if (!(Rational(2) * alpha).is_integer())
    throw DomainError("Laguerre parameter must be an integer or half-integer");
  if (alpha <= Rational(-1)) throw DomainError("Laguerre parameter must exceed -1");
  return {BaseKind::laguerre, alpha};
}

Rational normalized_moment(const Base& base, int k) {
  if (k < 0) throw DomainError("negative moment index");
  if (base.kind == BaseKind::hermite) {
    if (k % 2 != 0) return 0;
    const unsigned m = static_cast<unsigned>(k / 2);
    return odd_double_factorial(m) / Rational(2).pow(m);
  }
  if (base.alpha.is_integer()) {
    // Gamma(k + alpha + 1) / Gamma(alpha + 1) in the integer case.
    Rational m = 1;
    for (int j = 1; j <= k; ++j) m *= base.alpha + Rational(j);
    return m;
  }
  // alpha = a + 1/2 with integer a >= -1.
  const Rational a_rat = base.alpha - Rational(1, 2);
  const long a = a_rat.numerator().get_si();
  const long s = static_cast<long>(k) + a + 1;
  return odd_double_factorial(static_cast<unsigned>(s)) / Rational(2).pow(static_cast<unsigned>(s));
}

MomentTable MomentTable::build(const Base& base, int k_max) {
  MomentTable t{base, {}};
  t.values.reserve(k_max + 1);
  for (int k = 0; k <= k_max; ++k) t.values.push_back(normalized_moment(base, k));
  return t;
}

WeightSpec::WeightSpec(Base base, MatPoly Z) : base_(base), Z_(std::move(Z)) {
  if (Z_.is_zero()) throw DomainError("weight with zero polynomial part");
  if (!Z_.is_polynomial()) throw DomainError("weight polynomial part has negative powers");
  if (Z_.transpose() != Z_) throw DomainError("weight polynomial part must be symmetric");
}

Matrix matrix_moment(const WeightSpec& W, int k) {
  Matrix g = Matrix::zero(W.size());
  const MatPoly& Z = W.Z();
  for (int m = 0; m <= Z.degree(); ++m) {
    const Matrix Zm = Z.coeff(m);
    if (Zm.is_zero()) continue;
    g += normalized_moment(W.base(), k + m) * Zm;
  }
  return g;
}

Matrix gram_block(const WeightSpec& W, int i, int j) {
  if (i < 0 || j < 0) throw DomainError("negative Gram index");
  return matrix_moment(W, i + j);
}

Matrix inner_product(const MatPoly& P, const MatPoly& Q, const WeightSpec& W) {
  if (P.size() != W.size() || Q.size() != W.size())
    throw DimensionError("inner product size mismatch");
  Matrix acc = Matrix::zero(W.size());
  if (P.is_zero() || Q.is_zero()) return acc;
  if (!P.is_polynomial() || !Q.is_polynomial())
    throw DomainError("inner product of non-polynomial arguments");
  for (int i = P.low_degree(); i <= P.degree(); ++i) {
    const Matrix Pi = P.coeff(i);
    if (Pi.is_zero()) continue;
    for (int j = Q.low_degree(); j <= Q.degree(); ++j) {
      const Matrix Qj = Q.coeff(j);
      if (Qj.is_zero()) continue;
      acc += Pi * matrix_moment(W, i + j) * Qj.transpose();
    }
  }
  return acc;
}

WeightSpec pushforward(const WeightSpec& W, Parity side) {
  if (W.base().kind != BaseKind::hermite)
    throw DomainError("pushforward starts from a Hermite-type weight");
  if (!W.Z().is_even()) throw ParityError("pushforward needs an even weight");
  const MatPoly Zt = W.Z().sqrt_substitute();
  const Rational alpha = side == Parity::even ? Rational(-1, 2) : Rational(1, 2);
  return WeightSpec::laguerre(alpha, Zt);
}

std::optional<Rational> positivity_probe(const WeightSpec& W,
                                         const std::vector<Rational>& points) {
  std::vector<Rational> pts = points;
  if (pts.empty()) {
    if (W.base().kind == BaseKind::hermite)
      pts = {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1), Rational(-1),
             Rational(2),  Rational(-2),  Rational(7, 3),  Rational(-7, 3)};
    else
      pts = {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2), Rational(3), Rational(17, 5)};
  }
  for (const auto& x0 : pts) {
    if (W.base().kind == BaseKind::laguerre && x0.sign() <= 0)
      throw DomainError("Laguerre-type weights are sampled on the positive half line");
    const Matrix z = W.Z().eval(x0);
    if (!z.is_positive_definite()) return x0;
  }
  return std::nullopt;
}

}  // namespace mvopq
