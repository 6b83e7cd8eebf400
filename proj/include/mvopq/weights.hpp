#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvopq/matpoly.hpp"

namespace mvopq {

enum class BaseKind { hermite, laguerre };
enum class Parity { even, odd };

/**
 * Scalar base weight: either exp(-x^2) on the real line or y^alpha exp(-y)
 * on the positive half line.  The Laguerre parameter is restricted to
 * half-integers and integers with alpha > -1, which keeps every normalized
 * moment rational.
 */
struct Base {
  BaseKind kind;
  Rational alpha;  // meaningful for Laguerre only

  static Base hermite() { return {BaseKind::hermite, 0}; }
  static Base laguerre(const Rational& alpha);

  bool operator==(const Base& o) const { return kind == o.kind && alpha == o.alpha; }
};

// Moment of the base weight divided by the common Gaussian unit, so that the
// Hermite moments and the half-integer Laguerre moments live on one scale:
//   hermite:          m_{2k} = (2k-1)!!/2^k, odd moments 0
//   laguerre a+1/2:   m_k = (2(k+a+1)-1)!!/2^(k+a+1)
//   laguerre integer: m_k = (k+alpha)!/alpha!
Rational normalized_moment(const Base& base, int k);

/// Precomputed read-only run of moments 0..k_max.
struct MomentTable {
  Base base;
  std::vector<Rational> values;

  static MomentTable build(const Base& base, int k_max);
  const Rational& at(int k) const { return values.at(k); }
};

/**
 * Matrix weight W(x) = base(x) * Z(x) with Z a symmetric matrix polynomial.
 */
class WeightSpec {
 public:
  WeightSpec(Base base, MatPoly Z);

  static WeightSpec hermite(MatPoly Z) { return WeightSpec(Base::hermite(), std::move(Z)); }
  static WeightSpec laguerre(const Rational& alpha, MatPoly Z) {
    return WeightSpec(Base::laguerre(alpha), std::move(Z));
  }
  // exp(-x^2) I_n, the scalar Hermite weight in size n.
  static WeightSpec scalar_hermite(int n) { return hermite(MatPoly::identity(n)); }
  static WeightSpec scalar_laguerre(const Rational& alpha, int n) {
    return laguerre(alpha, MatPoly::identity(n));
  }

  const Base& base() const { return base_; }
  const MatPoly& Z() const { return Z_; }
  int size() const { return Z_.size(); }

  bool operator==(const WeightSpec& o) const { return base_ == o.base_ && Z_ == o.Z_; }

 private:
  Base base_;
  MatPoly Z_;
};

// k-th matrix moment of W: sum_m Z_m * normalized_moment(k + m).
Matrix matrix_moment(const WeightSpec& W, int k);

// Gram block <x^i I, x^j I>_W = matrix moment i + j.
Matrix gram_block(const WeightSpec& W, int i, int j);

// <P, Q>_W = sum_{i,j} P_i G_{i+j} Q_j^T for genuine polynomials P, Q.
Matrix inner_product(const MatPoly& P, const MatPoly& Q, const WeightSpec& W);

/**
 * The two Laguerre-type weights carried by an even Hermite-type weight
 * under y = x^2:
 *   even: V(y) = y^(-1/2) exp(-y) Z(sqrt(y))
 *   odd:  U(y) = y^(+1/2) exp(-y) Z(sqrt(y))
 * Requires a Hermite base and even Z.
 */
WeightSpec pushforward(const WeightSpec& W, Parity side);

// Samples Z at rational points (positive points for Laguerre bases) and
// checks symmetric positive-definiteness of each sample.  Returns the first
// failing point, if any.
std::optional<Rational> positivity_probe(const WeightSpec& W,
                                         const std::vector<Rational>& points = {});

}  // namespace mvopq
