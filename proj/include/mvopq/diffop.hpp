#pragma once

#include <map>
#include <string>
#include <vector>

#include "mvopq/matpoly.hpp"
#include "mvopq/orthopoly.hpp"
#include "mvopq/report.hpp"
#include "mvopq/weights.hpp"

namespace mvopq {

/**
 * Right-acting differential operator D = sum_j (d/dx)^j . C_j(x): a
 * polynomial P picks up P . D = sum_j P^(j) C_j.  Coefficients may carry
 * negative powers of x; an operator is "proper" when every C_j is a genuine
 * polynomial with deg C_j <= j, which is the class that maps any polynomial
 * of degree n to one of degree at most n.
 */
class DiffOp {
 public:
  explicit DiffOp(int size) : size_(size) {}
  DiffOp(int size, const std::vector<std::pair<int, MatPoly>>& terms);

  static DiffOp identity(int size);
  // d^2/dx^2 - 2 d/dx x, the scalar Hermite operator in matrix size `size`.
  static DiffOp delta(int size);

  int size() const { return size_; }
  const std::map<int, MatPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  MatPoly coeff(int j) const;

  bool is_proper() const;

  void add_term(int order, const MatPoly& c);

  DiffOp& operator+=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  DiffOp operator-() const;
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a += -b; }
  friend DiffOp operator*(const Rational& c, const DiffOp& d);
  friend bool operator==(const DiffOp& a, const DiffOp& b) {
    return a.size_ == b.size_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

  std::string to_string(const std::string& var = "x") const;

 private:
  int size_;
  std::map<int, MatPoly> terms_;  // order -> nonzero coefficient
};

// P . D.
MatPoly apply(const MatPoly& P, const DiffOp& D);

// Operator with P . compose(D1, D2) = (P . D1) . D2 for every P.
DiffOp compose(const DiffOp& D1, const DiffOp& D2);

// Lambda_n(D) = sum_j [n]_j F_j^j with F_j^j the x^j coefficient of C_j.
// For proper D and monic P_n of an eigen-pair, P_n . D = Lambda_n P_n.
Matrix lambda_eigenvalue(const DiffOp& D, int n);

// Operator E with "E x = x D": x (F . E) = (x F) . D for all F.  Picks up
// negative powers: E_j = C_j + (j+1) x^{-1} C_{j+1}.
DiffOp conjugate_by_x(const DiffOp& D);

// Assembles sum_k M_k delta^k from a grid of scalar delta-polynomials:
// grid[i][j] lists the delta-coefficients of entry (i, j), ascending.
DiffOp op_from_delta_poly(const std::vector<std::vector<std::vector<Rational>>>& grid);

// Asserts P_n . D = Lambda_n(D) P_n for the weight's monic sequence.
VerifyReport eigen_check(const MonicSequence& seq, const DiffOp& D);
VerifyReport eigen_check(const WeightSpec& W, const DiffOp& D, int n_max);

// Asserts <x^i I . D, x^j I>_W = <x^i I, x^j I . D>_W for i, j <= deg_max.
// By right-module reduction this pins down symmetry on all polynomials of
// degree <= deg_max.
VerifyReport symmetry_check(const WeightSpec& W, const DiffOp& D, int deg_max);

}  // namespace mvopq
