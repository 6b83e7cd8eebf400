#include "mvopq/diffop.hpp"

#include <sstream>

#include "mvopq/errors.hpp"

namespace mvopq {

DiffOp::DiffOp(int size, const std::vector<std::pair<int, MatPoly>>& terms) : size_(size) {
  for (const auto& [order, c] : terms) add_term(order, c);
}

DiffOp DiffOp::identity(int size) {
  DiffOp d(size);
  d.add_term(0, MatPoly::identity(size));
  return d;
}

DiffOp DiffOp::delta(int size) {
  DiffOp d(size);
  d.add_term(2, MatPoly::identity(size));
  d.add_term(1, Rational(-2) * MatPoly::x_power(size, 1));
  return d;
}

MatPoly DiffOp::coeff(int j) const {
  auto it = terms_.find(j);
  return it == terms_.end() ? MatPoly::zero(size_) : it->second;
}

bool DiffOp::is_proper() const {
  for (const auto& [order, c] : terms_) {
    if (!c.is_polynomial()) return false;
    if (c.degree() > order) return false;
  }
  return true;
}

void DiffOp::add_term(int order, const MatPoly& c) {
  if (order < 0) throw DomainError("negative operator order");
  if (c.size() != size_) throw DimensionError("operator coefficient size mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(order);
  if (it == terms_.end()) {
    terms_.emplace(order, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  if (size_ != o.size_) throw DimensionError("operator sum size mismatch");
  for (const auto& [order, c] : o.terms_) add_term(order, c);
  return *this;
}

DiffOp DiffOp::operator-() const {
  DiffOp d(size_);
  for (const auto& [order, c] : terms_) d.terms_.emplace(order, -c);
  return d;
}

DiffOp operator*(const Rational& c, const DiffOp& d) {
  DiffOp r(d.size_);
  if (c.is_zero()) return r;
  for (const auto& [order, coeff] : d.terms_) r.terms_.emplace(order, c * coeff);
  return r;
}

std::string DiffOp::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    os << "d^" << it->first << " . " << it->second.to_string(var);
    first = false;
  }
  return os.str();
}

MatPoly apply(const MatPoly& P, const DiffOp& D) {
  if (P.size() != D.size()) throw DimensionError("apply size mismatch");
  MatPoly result = MatPoly::zero(P.size());
  MatPoly deriv = P;
  int at = 0;
  for (const auto& [order, c] : D.terms()) {
    while (at < order) {
      deriv = deriv.derivative();
      ++at;
    }
    result += deriv * c;
  }
  return result;
}

DiffOp compose(const DiffOp& D1, const DiffOp& D2) {
  if (D1.size() != D2.size()) throw DimensionError("compose size mismatch");
  DiffOp R(D1.size());
  for (const auto& [j, c1] : D1.terms()) {
    for (const auto& [k, c2] : D2.terms()) {
      // (P^(j) c1)^(k) c2 spreads over orders j..j+k by Leibniz.
      MatPoly c1_deriv = c1;
      for (int m = k; m >= 0; --m) {
        // c1_deriv = c1^{(k-m)} when entering iteration m.
        R.add_term(j + m, binomial(static_cast<unsigned>(k), static_cast<unsigned>(m)) *
                              (c1_deriv * c2));
        if (m > 0) c1_deriv = c1_deriv.derivative();
      }
    }
  }
  return R;
}

Matrix lambda_eigenvalue(const DiffOp& D, int n) {
  if (!D.is_proper()) throw DomainError("eigenvalue formula needs a proper operator");
  Matrix L = Matrix::zero(D.size());
  for (const auto& [j, c] : D.terms())
    L += falling_factorial(n, static_cast<unsigned>(j)) * c.coeff(j);
  return L;
}

DiffOp conjugate_by_x(const DiffOp& D) {
  DiffOp E(D.size());
  for (const auto& [j, c] : D.terms()) {
    E.add_term(j, c);
    if (j >= 1) E.add_term(j - 1, Rational(j) * c.shifted(-1));
  }
  return E;
}

DiffOp op_from_delta_poly(const std::vector<std::vector<std::vector<Rational>>>& grid) {
  const int N = static_cast<int>(grid.size());
  size_t kmax = 0;
  for (const auto& row : grid) {
    if (static_cast<int>(row.size()) != N) throw DimensionError("delta grid is not square");
    for (const auto& entry : row) kmax = std::max(kmax, entry.size());
  }
  DiffOp result(N);
  DiffOp delta_pow = DiffOp::identity(N);
  for (size_t k = 0; k < kmax; ++k) {
    Matrix Mk(N, N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (k < grid[i][j].size()) Mk.at(i, j) = grid[i][j][k];
    if (!Mk.is_zero()) {
      DiffOp constant(N);
      constant.add_term(0, MatPoly::constant(Mk));
      result += compose(constant, delta_pow);
    }
    if (k + 1 < kmax) delta_pow = compose(delta_pow, DiffOp::delta(N));
  }
  return result;
}

VerifyReport eigen_check(const MonicSequence& seq, const DiffOp& D) {
  VerifyReport report;
  report.n_max = seq.n_max();
  for (int n = 0; n <= seq.n_max(); ++n) {
    const Matrix L = lambda_eigenvalue(D, n);
    const MatPoly lhs = apply(seq.polys[n], D);
    const MatPoly rhs = MatPoly::constant(L) * seq.polys[n];
    const bool ok = lhs == rhs;
    report.add("eigen", n,
               ok, ok ? "" : "P_n.D = " + lhs.to_string() + " vs Lambda_n P_n = " + rhs.to_string());
  }
  return report;
}

VerifyReport eigen_check(const WeightSpec& W, const DiffOp& D, int n_max) {
  return eigen_check(monic_op(W, n_max), D);
}

VerifyReport symmetry_check(const WeightSpec& W, const DiffOp& D, int deg_max) {
  VerifyReport report;
  report.deg_max = deg_max;
  const int N = W.size();
  std::vector<MatPoly> applied;
  applied.reserve(deg_max + 1);
  for (int i = 0; i <= deg_max; ++i) applied.push_back(apply(MatPoly::x_power(N, i), D));
  for (int i = 0; i <= deg_max; ++i) {
    bool row_ok = true;
    std::string witness;
    for (int j = 0; j <= deg_max; ++j) {
      const Matrix lhs = inner_product(applied[i], MatPoly::x_power(N, j), W);
      const Matrix rhs = inner_product(MatPoly::x_power(N, i), applied[j], W);
      if (lhs != rhs) {
        row_ok = false;
        witness = "i=" + std::to_string(i) + " j=" + std::to_string(j) + ": <x^i.D, x^j> = " +
                  lhs.to_string() + " vs <x^i, x^j.D> = " + rhs.to_string();
        break;
      }
    }
    report.add("symmetry", i, row_ok, witness);
  }
  return report;
}

}  // namespace mvopq
