#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mvopq/matrix.hpp"

namespace mvopq {

/**
 * Square-matrix-valued Laurent polynomial P(x) = sum_k C_k x^k over the
 * rationals, k ranging over a finite window that may start below zero.
 *
 * Canonical form: no zero coefficient at either end of the window; the zero
 * polynomial has an empty coefficient list and low_degree() = 0.  Negative
 * powers exist to support operator conjugation by x; ordinary polynomials
 * always report low_degree() >= 0.
 */
class MatPoly {
 public:
  MatPoly() : size_(0), low_(0) {}
  // Coefficients ascending from degree `low`.
  MatPoly(int size, int low, std::vector<Matrix> coeffs);

  static MatPoly zero(int size) { return MatPoly(size, 0, {}); }
  static MatPoly constant(const Matrix& c);
  static MatPoly monomial(const Matrix& c, int k);
  static MatPoly identity(int size) { return constant(Matrix::identity(size)); }
  // x^k * I
  static MatPoly x_power(int size, int k) { return monomial(Matrix::identity(size), k); }
  // 1x1 polynomial with the given coefficients starting at degree `low`.
  static MatPoly scalar(std::vector<Rational> coeffs, int low = 0);

  int size() const { return size_; }
  bool is_zero() const { return coeffs_.empty(); }
  int low_degree() const { return low_; }
  int degree() const;  // throws DomainError on the zero polynomial
  bool is_polynomial() const { return coeffs_.empty() || low_ >= 0; }

  // Coefficient of x^k; zero matrix outside the stored window.
  Matrix coeff(int k) const;

  bool is_even() const;
  bool is_odd() const;

  MatPoly operator-() const;
  MatPoly& operator+=(const MatPoly& o);
  MatPoly& operator-=(const MatPoly& o);
  friend MatPoly operator+(MatPoly a, const MatPoly& b) { return a += b; }
  friend MatPoly operator-(MatPoly a, const MatPoly& b) { return a -= b; }
  friend MatPoly operator*(const MatPoly& a, const MatPoly& b);
  friend MatPoly operator*(const Rational& c, const MatPoly& p);
  friend MatPoly operator*(const Matrix& m, const MatPoly& p);
  friend MatPoly operator*(const MatPoly& p, const Matrix& m);
  friend bool operator==(const MatPoly& a, const MatPoly& b);
  friend bool operator!=(const MatPoly& a, const MatPoly& b) { return !(a == b); }

  MatPoly transpose() const;
  MatPoly derivative() const;
  MatPoly shifted(int k) const;  // multiply by x^k

  // Horner evaluation; x0 must be nonzero when negative powers are present.
  Matrix eval(const Rational& x0) const;

  // P = even + odd, split by exponent parity.
  std::pair<MatPoly, MatPoly> parity_split() const;

  // Even polynomial p(x) -> q with q(y) = p(sqrt(y)), i.e. q_k = p_{2k}.
  // Throws ParityError unless this is an even genuine polynomial.
  MatPoly sqrt_substitute() const;

  // q(y) -> q(x^2); inverse of sqrt_substitute on even polynomials.
  MatPoly square_expand() const;

  std::string entry_to_string(int i, int j, const std::string& var = "x") const;
  std::string to_string(const std::string& var = "x") const;

  // Scalar (1x1) polynomial times the identity of the given size.
  MatPoly to_diag(int size) const;

 private:
  void normalize();

  int size_;
  int low_;
  std::vector<Matrix> coeffs_;
};

}  // namespace mvopq
