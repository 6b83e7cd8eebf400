#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "mvopq/rational.hpp"

namespace mvopq {

/**
 * Dense matrix over the rationals, row-major.
 *
 * Mostly used square (Gram blocks, operator coefficients), but rectangular
 * shapes are allowed so block constructions can use them.  All arithmetic is
 * exact; determinants and inverses use Gaussian elimination with the first
 * nonzero pivot, so results are deterministic.
 */
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(int n);
  static Matrix zero(int n) { return Matrix(n, n); }
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& at(int i, int j);
  const Rational& at(int i, int j) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_symmetric() const;

  Matrix transpose() const;
  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, Matrix a);

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Rational determinant() const;
  // Leading principal minors det(A[0..k][0..k]) for k = 0..n-1.
  std::vector<Rational> leading_principal_minors() const;
  // Symmetric with all leading principal minors positive.
  bool is_positive_definite() const;

  bool is_invertible() const { return !determinant().is_zero(); }
  Matrix inverse() const;  // throws SingularMatrixError

  // Solves X * A = B for X (row-vector convention used by the Gram systems).
  // A must be square and invertible; B has the same number of columns as A.
  static Matrix solve_right(const Matrix& A, const Matrix& B);

  std::string to_string() const;

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

}  // namespace mvopq
