#include "mvopq/matrix.hpp"

#include <sstream>
#include <utility>

#include "mvopq/errors.hpp"

namespace mvopq {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw DimensionError("ragged matrix literal");
    for (const auto& x : row) data_.push_back(x);
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw DimensionError("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Rational& Matrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw DimensionError("matrix index out of range");
  return data_[i * cols_ + j];
}

const Rational& Matrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw DimensionError("matrix index out of range");
  return data_[i * cols_ + j];
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  return *this == identity(rows_);
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Matrix operator*(const Rational& c, Matrix a) {
  for (auto& x : a.data_) x *= c;
  return a;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

// Row-reduces [A | B] in place, returning false when A turns out singular.
bool gauss_jordan(Matrix& A, Matrix& B) {
  const int n = A.rows();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!A.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(A.at(pivot, j), A.at(col, j));
      for (int j = 0; j < B.cols(); ++j) std::swap(B.at(pivot, j), B.at(col, j));
    }
    const Rational inv = A.at(col, col).inverse();
    for (int j = 0; j < n; ++j) A.at(col, j) *= inv;
    for (int j = 0; j < B.cols(); ++j) B.at(col, j) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Rational f = A.at(r, col);
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) A.at(r, j) -= f * A.at(col, j);
      for (int j = 0; j < B.cols(); ++j) B.at(r, j) -= f * B.at(col, j);
    }
  }
  return true;
}

}  // namespace

Rational Matrix::determinant() const {
  if (!is_square()) throw DimensionError("determinant of non-square matrix");
  Matrix a = *this;
  const int n = rows_;
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    const Rational inv = a.at(col, col).inverse();
    for (int r = col + 1; r < n; ++r) {
      const Rational f = a.at(r, col) * inv;
      if (f.is_zero()) continue;
      for (int j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
    }
  }
  return det;
}

std::vector<Rational> Matrix::leading_principal_minors() const {
  if (!is_square()) throw DimensionError("principal minors of non-square matrix");
  std::vector<Rational> minors;
  minors.reserve(rows_);
  for (int k = 1; k <= rows_; ++k) {
    Matrix sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub.at(i, j) = at(i, j);
    minors.push_back(sub.determinant());
  }
  return minors;
}

bool Matrix::is_positive_definite() const {
  if (!is_symmetric()) return false;
  for (const auto& m : leading_principal_minors())
    if (m.sign() <= 0) return false;
  return true;
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw DimensionError("inverse of non-square matrix");
  Matrix a = *this;
  Matrix b = identity(rows_);
  if (!gauss_jordan(a, b)) throw SingularMatrixError("matrix is singular");
  return b;
}

Matrix Matrix::solve_right(const Matrix& A, const Matrix& B) {
  if (!A.is_square()) throw DimensionError("solve_right needs a square system");
  if (B.cols() != A.rows()) throw DimensionError("solve_right shape mismatch");
  // X A = B  <=>  A^T X^T = B^T.
  Matrix at = A.transpose();
  Matrix bt = B.transpose();
  if (!gauss_jordan(at, bt)) throw SingularMatrixError("singular linear system");
  return bt.transpose();
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace mvopq
