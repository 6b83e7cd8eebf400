#include "mvopq/matpoly.hpp"

#include <algorithm>
#include <sstream>

#include "mvopq/errors.hpp"

namespace mvopq {

MatPoly::MatPoly(int size, int low, std::vector<Matrix> coeffs)
    : size_(size), low_(low), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.rows() != size_ || c.cols() != size_)
      throw DimensionError("matrix polynomial coefficient has wrong shape");
  normalize();
}

MatPoly MatPoly::constant(const Matrix& c) { return monomial(c, 0); }

MatPoly MatPoly::monomial(const Matrix& c, int k) {
  if (!c.is_square()) throw DimensionError("matrix polynomial needs square coefficients");
  return MatPoly(c.rows(), k, {c});
}

MatPoly MatPoly::scalar(std::vector<Rational> coeffs, int low) {
  std::vector<Matrix> cs;
  cs.reserve(coeffs.size());
  for (auto& v : coeffs) {
    Matrix m(1, 1);
    m.at(0, 0) = v;
    cs.push_back(m);
  }
  return MatPoly(1, low, std::move(cs));
}

void MatPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  size_t drop = 0;
  while (drop < coeffs_.size() && coeffs_[drop].is_zero()) ++drop;
  if (drop > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + drop);
    low_ += static_cast<int>(drop);
  }
  if (coeffs_.empty()) low_ = 0;
}

int MatPoly::degree() const {
  if (is_zero()) throw DomainError("degree of the zero polynomial");
  return low_ + static_cast<int>(coeffs_.size()) - 1;
}

Matrix MatPoly::coeff(int k) const {
  const int idx = k - low_;
  if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return Matrix::zero(size_);
  return coeffs_[idx];
}

bool MatPoly::is_even() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (((low_ + static_cast<int>(i)) % 2 != 0) && !coeffs_[i].is_zero()) return false;
  return true;
}

bool MatPoly::is_odd() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (((low_ + static_cast<int>(i)) % 2 == 0) && !coeffs_[i].is_zero()) return false;
  return true;
}

MatPoly MatPoly::operator-() const {
  MatPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

MatPoly& MatPoly::operator+=(const MatPoly& o) {
  if (size_ != o.size_) throw DimensionError("matrix polynomial sum size mismatch");
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int low = std::min(low_, o.low_);
  const int high = std::max(degree(), o.degree());
  std::vector<Matrix> cs;
  cs.reserve(high - low + 1);
  for (int k = low; k <= high; ++k) cs.push_back(coeff(k) + o.coeff(k));
  low_ = low;
  coeffs_ = std::move(cs);
  normalize();
  return *this;
}

MatPoly& MatPoly::operator-=(const MatPoly& o) { return *this += -o; }

MatPoly operator*(const MatPoly& a, const MatPoly& b) {
  if (a.size_ != b.size_) throw DimensionError("matrix polynomial product size mismatch");
  if (a.is_zero() || b.is_zero()) return MatPoly::zero(a.size_);
  std::vector<Matrix> cs(a.coeffs_.size() + b.coeffs_.size() - 1, Matrix::zero(a.size_));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return MatPoly(a.size_, a.low_ + b.low_, std::move(cs));
}

MatPoly operator*(const Rational& c, const MatPoly& p) {
  MatPoly q = p;
  for (auto& m : q.coeffs_) m = c * m;
  q.normalize();
  return q;
}

MatPoly operator*(const Matrix& m, const MatPoly& p) {
  MatPoly q = p;
  for (auto& c : q.coeffs_) c = m * c;
  q.normalize();
  return q;
}

MatPoly operator*(const MatPoly& p, const Matrix& m) {
  MatPoly q = p;
  for (auto& c : q.coeffs_) c = c * m;
  q.normalize();
  return q;
}

bool operator==(const MatPoly& a, const MatPoly& b) {
  return a.size_ == b.size_ && a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
}

MatPoly MatPoly::transpose() const {
  MatPoly p = *this;
  for (auto& c : p.coeffs_) c = c.transpose();
  return p;
}

MatPoly MatPoly::derivative() const {
  if (is_zero()) return *this;
  std::vector<Matrix> cs;
  cs.reserve(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i)
    cs.push_back(Rational(low_ + static_cast<int>(i)) * coeffs_[i]);
  return MatPoly(size_, low_ - 1, std::move(cs));
}

MatPoly MatPoly::shifted(int k) const {
  if (is_zero()) return *this;
  MatPoly p = *this;
  p.low_ += k;
  return p;
}

Matrix MatPoly::eval(const Rational& x0) const {
  if (is_zero()) return Matrix::zero(size_);
  if (low_ < 0 && x0.is_zero()) throw DomainError("evaluating negative powers at zero");
  Matrix acc = coeffs_.back();
  for (int i = static_cast<int>(coeffs_.size()) - 2; i >= 0; --i)
    acc = x0 * acc + coeffs_[i];
  if (low_ > 0) acc = x0.pow(static_cast<unsigned>(low_)) * acc;
  if (low_ < 0) acc = x0.inverse().pow(static_cast<unsigned>(-low_)) * acc;
  return acc;
}

std::pair<MatPoly, MatPoly> MatPoly::parity_split() const {
  if (low_ < 0) throw DomainError("parity split of a Laurent polynomial");
  std::vector<Matrix> even, odd;
  even.reserve(coeffs_.size());
  odd.reserve(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const bool k_even = (low_ + static_cast<int>(i)) % 2 == 0;
    even.push_back(k_even ? coeffs_[i] : Matrix::zero(size_));
    odd.push_back(k_even ? Matrix::zero(size_) : coeffs_[i]);
  }
  return {MatPoly(size_, low_, std::move(even)), MatPoly(size_, low_, std::move(odd))};
}

MatPoly MatPoly::sqrt_substitute() const {
  if (is_zero()) return *this;
  if (low_ < 0) throw ParityError("sqrt substitution needs a genuine polynomial");
  if (!is_even()) throw ParityError("sqrt substitution needs an even polynomial");
  std::vector<Matrix> cs;
  for (int k = 0; 2 * k <= degree(); ++k) cs.push_back(coeff(2 * k));
  return MatPoly(size_, 0, std::move(cs));
}

MatPoly MatPoly::square_expand() const {
  if (is_zero()) return *this;
  std::vector<Matrix> cs;
  cs.reserve(2 * coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    cs.push_back(coeffs_[i]);
    if (i + 1 < coeffs_.size()) cs.push_back(Matrix::zero(size_));
  }
  return MatPoly(size_, 2 * low_, std::move(cs));
}

MatPoly MatPoly::to_diag(int size) const {
  if (size_ != 1) throw DimensionError("to_diag expects a scalar polynomial");
  std::vector<Matrix> cs;
  cs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) cs.push_back(c.at(0, 0) * Matrix::identity(size));
  return MatPoly(size, low_, cs);
}

std::string MatPoly::entry_to_string(int i, int j, const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (size_t idx = 0; idx < coeffs_.size(); ++idx) {
    const Rational& c = coeffs_[idx].at(i, j);
    if (c.is_zero()) continue;
    const int k = low_ + static_cast<int>(idx);
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    if (k == 0) {
      os << a;
    } else {
      if (!a.is_one()) os << a << "*";
      os << var;
      if (k != 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string MatPoly::to_string(const std::string& var) const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < size_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < size_; ++j) os << (j ? ", " : "") << entry_to_string(i, j, var);
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace mvopq
