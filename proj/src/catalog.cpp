#include "mvopq/catalog.hpp"

#include "mvopq/classical.hpp"
#include "mvopq/errors.hpp"

namespace mvopq {

namespace {

Rational scalar_param(const ParamMap& params, const std::string& key, const Rational& dflt) {
  auto it = params.find(key);
  if (it == params.end()) return dflt;
  if (it->second.size() != 1) throw DomainError("parameter '" + key + "' expects a single rational");
  return it->second[0];
}

void reject_unknown(const ParamMap& params, const std::vector<std::string>& known) {
  for (const auto& [key, _] : params) {
    bool ok = false;
    for (const auto& k : known)
      if (key == k) ok = true;
    if (!ok) throw DomainError("unknown parameter '" + key + "' for this family");
  }
}

// Scalar multiple of x^k on the diagonal.
MatPoly xk(int size, const Rational& c, int k) {
  return MatPoly::monomial(c * Matrix::identity(size), k);
}

DiffOp diffop2(const MatPoly& c2, const MatPoly& c1, const MatPoly& c0) {
  DiffOp d(c2.size());
  d.add_term(2, c2);
  d.add_term(1, c1);
  d.add_term(0, c0);
  return d;
}

// Intertwiner for the 2x2 family, sending scalar monic Hermite polynomials
// onto multiples of the family's MVOP with normalizer
// A_n = [[0, a^2 n(n-1) + 4], [1, -a(2n+1)/2]].
DarbouxCase darboux_2x2(const Rational& a, const WeightSpec& target) {
  const MatPoly c2(2, 0,
                   {Matrix{{-a, 0}, {0, a / Rational(4)}}, Matrix::zero(2),
                    Matrix{{0, a * a}, {0, 0}}});
  const MatPoly c1 = MatPoly::monomial(Matrix{{0, 0}, {0, -a}}, 1);
  const MatPoly c0 = MatPoly::constant(Matrix{{0, 4}, {1, -a / Rational(2)}});
  DarbouxCase c{"dg2004-2x2", WeightSpec::scalar_hermite(2), target, diffop2(c2, c1, c0),
                std::nullopt, nullptr, nullptr};
  c.expected_An = [a](int n) {
    const Rational nn(n);
    return Matrix{{0, a * a * nn * (nn - 1) + 4}, {1, -a * (2 * nn + 1) / Rational(2)}};
  };
  return c;
}

// The 3x3 pair of second-order operators V, N with compose(V, N) acting on
// the scalar Hermite weight; c = a^2 + b^2 throughout.
DarbouxCase darboux_3x3(const Rational& a, const Rational& b, const WeightSpec& target) {
  const Rational c = a * a + b * b;
  const Rational half(1, 2), quarter(1, 4);

  const MatPoly v2(3, 0,
                   {Matrix{{-c, 0, 0}, {0, 0, -c}, {0, -c * c * quarter, 0}}, Matrix::zero(3),
                    Matrix{{0, a * c, 0}, {0, b * c, 0}, {0, 0, 0}}});
  const MatPoly v1 = MatPoly::monomial(
      Matrix{{2 * b * b, 0, -2 * a * b}, {-2 * a * b, 0, 2 * a * a}, {0, c * c, 0}}, 1);
  const MatPoly v0 = MatPoly::constant(
      Matrix{{0, 4 * a, 0}, {0, 4 * b, 0}, {-a * c, c * c * half, -b * c}});

  const MatPoly n2(3, 0,
                   {Matrix{{-c, 0, 0}, {0, 0, -c * c * quarter}, {0, -c, 0}}, Matrix::zero(3),
                    Matrix{{0, 0, -a * c * c * quarter}, {0, 0, 0}, {0, 0, -b * c * c * quarter}}});
  const MatPoly n1 = MatPoly::monomial(
      Matrix{{2 * (2 * a * a + b * b), 2 * a * b, -a * c * c},
             {0, 0, 0},
             {2 * a * b, 2 * (a * a + 2 * b * b), -b * c * c}},
      1);
  const MatPoly n0 = MatPoly::constant(
      Matrix{{2 * a * a, 2 * a * b, -a * c * (2 + c) * half},
             {4 * a, 4 * b, 0},
             {2 * a * b, 2 * b * b, -b * c * (2 + c) * half}});

  DarbouxCase dc{"bp-3x3-ex2", WeightSpec::scalar_hermite(3), target,
                 diffop2(v2, v1, v0), diffop2(n2, n1, n0), nullptr, nullptr};

  const Matrix M2{{0, a * c, 0}, {0, b * c, 0}, {0, 0, 0}};
  const Matrix M0{{-a * a, 0, -a * b}, {-a * b, 0, -b * b}, {0, c * c * quarter, 0}};
  auto Kn = [a, b, c, half](int n) {
    const Rational nn(n);
    return Matrix{{2 * b * b * nn, 4 * a, -2 * a * b * nn},
                  {-2 * a * b * nn, 4 * b, 2 * a * a * nn},
                  {-a * c, c * c * (2 * nn + 1) * half, -b * c}};
  };
  dc.expected_An = [Kn, M2](int n) { return Kn(n) + Rational(n) * Rational(n - 1) * M2; };
  dc.expected_Qn = [Kn, M0, M2](int n) {
    const auto h = hermite_monic(n);
    MatPoly Q = MatPoly::constant(Kn(n)) * h[n].to_diag(3);
    if (n >= 2) {
      const MatPoly m(3, 0, {M0, Matrix::zero(3), M2});
      Q += Rational(n) * Rational(n - 1) * (m * h[n - 2].to_diag(3));
    }
    return Q;
  };
  return dc;
}

}  // namespace

std::vector<CatalogInfo> catalog_list() {
  return {
      {"dg2004-2x2", "a (default 1)"},
      {"dg2005-3x3", "a, b (default 1)"},
      {"bp-3x3-ex2", "a, b (default 1)"},
      {"blocknil", "blocks=n_1,..,n_k; V1..V{k-1} row-major (default blocks=1,1 V1=1)"},
  };
}

Matrix nilpotent_from_blocks(const std::vector<int>& blocks, const std::vector<Matrix>& Vs) {
  const int k = static_cast<int>(blocks.size());
  if (k < 1) throw DomainError("at least one block required");
  if (static_cast<int>(Vs.size()) != k - 1) throw DimensionError("need exactly k-1 V matrices");
  int N = 0;
  std::vector<int> offset(k);
  for (int i = 0; i < k; ++i) {
    if (blocks[i] < 1) throw DomainError("block sizes must be positive");
    offset[i] = N;
    N += blocks[i];
  }
  for (int i = 0; i + 1 < k; ++i)
    if (Vs[i].rows() != blocks[i] || Vs[i].cols() != blocks[i + 1])
      throw DimensionError("V_" + std::to_string(i + 1) + " must be " + std::to_string(blocks[i]) +
                           "x" + std::to_string(blocks[i + 1]));
  Matrix B(N, N);
  for (int i = 0; i < k; ++i) {
    Matrix prod;
    for (int j = i + 1; j < k; ++j) {
      prod = j == i + 1 ? Vs[i] : prod * Vs[j - 1];
      const Rational sign = (j - i + 1) % 2 == 0 ? 1 : -1;
      for (int r = 0; r < blocks[i]; ++r)
        for (int s = 0; s < blocks[j]; ++s)
          B.at(offset[i] + r, offset[j] + s) = sign * prod.at(r, s);
    }
  }
  return B;
}

MatPoly exp_nilpotent(const Matrix& B) {
  if (!B.is_square()) throw DimensionError("matrix exponential needs a square matrix");
  const int N = B.rows();
  MatPoly result = MatPoly::identity(N);
  Matrix power = B;
  Rational fact = 1;
  for (int m = 1; !power.is_zero(); ++m) {
    if (m > N) throw DomainError("matrix is not nilpotent");
    fact *= Rational(m);
    result += MatPoly::monomial(fact.inverse() * power, 2 * m);
    power = power * B;
  }
  return result;
}

WeightSpec hermite_type_weight(const Matrix& B) {
  return WeightSpec::hermite(exp_nilpotent(B) * exp_nilpotent(B.transpose()));
}

DiffOp hermite_type_op(const Matrix& B, const Matrix& A0) {
  const int N = B.rows();
  const Matrix two_b_minus_i = Rational(2) * B - Matrix::identity(N);
  DiffOp d(N);
  d.add_term(2, MatPoly::identity(N));
  d.add_term(1, MatPoly::monomial(Rational(2) * two_b_minus_i, 1));
  d.add_term(0, MatPoly::constant(A0));
  return d;
}

CatalogEntry catalog_build(const std::string& family, const ParamMap& params) {
  if (family == "dg2004-2x2") {
    reject_unknown(params, {"a"});
    const Rational a = scalar_param(params, "a", 1);
    const Matrix B{{0, a}, {0, 0}};
    const Matrix A0 = Rational(2) * B - Matrix::from_rows({{4, 0}, {0, 0}});
    CatalogEntry e{family, hermite_type_weight(B), {hermite_type_op(B, A0)}, std::nullopt};
    e.darboux = darboux_2x2(a, e.weight);
    return e;
  }
  if (family == "dg2005-3x3") {
    reject_unknown(params, {"a", "b"});
    const Rational a = scalar_param(params, "a", 1);
    const Rational b = scalar_param(params, "b", 1);
    const Matrix B{{0, 0, a}, {0, 0, b}, {0, 0, 0}};
    const Matrix A0{{-4, 0, 2 * a}, {0, -4, 2 * b}, {0, 0, 0}};
    return {family, hermite_type_weight(B), {hermite_type_op(B, A0)}, std::nullopt};
  }
  if (family == "bp-3x3-ex2") {
    reject_unknown(params, {"a", "b"});
    const Rational a = scalar_param(params, "a", 1);
    const Rational b = scalar_param(params, "b", 1);
    const Matrix A{{0, a, 0}, {0, 0, 0}, {0, b, 0}};
    const Matrix A0{{-4, 2 * a, 0}, {0, 0, 0}, {0, 2 * b, -4}};
    CatalogEntry e{family, hermite_type_weight(A), {hermite_type_op(A, A0)}, std::nullopt};
    e.darboux = darboux_3x3(a, b, e.weight);
    return e;
  }
  if (family == "blocknil") {
    std::vector<int> blocks;
    auto it = params.find("blocks");
    if (it == params.end()) {
      blocks = {1, 1};
    } else {
      for (const auto& v : it->second) {
        if (!v.is_integer() || v.sign() <= 0) throw DomainError("block sizes must be positive integers");
        blocks.push_back(static_cast<int>(v.numerator().get_si()));
      }
    }
    const int k = static_cast<int>(blocks.size());
    std::vector<std::string> known = {"blocks"};
    std::vector<Matrix> Vs;
    for (int i = 1; i < k; ++i) {
      const std::string key = "V" + std::to_string(i);
      known.push_back(key);
      auto vit = params.find(key);
      std::vector<Rational> flat;
      if (vit == params.end())
        flat.assign(blocks[i - 1] * blocks[i], 1);
      else
        flat = vit->second;
      if (static_cast<int>(flat.size()) != blocks[i - 1] * blocks[i])
        throw DimensionError(key + " needs " + std::to_string(blocks[i - 1] * blocks[i]) +
                             " entries");
      Matrix V(blocks[i - 1], blocks[i]);
      for (int r = 0; r < blocks[i - 1]; ++r)
        for (int s = 0; s < blocks[i]; ++s) V.at(r, s) = flat[r * blocks[i] + s];
      Vs.push_back(V);
    }
    reject_unknown(params, known);
    const Matrix B = nilpotent_from_blocks(blocks, Vs);
    const int N = B.rows();
    Matrix diag(N, N);
    int off = 0;
    for (int i = 0; i < k; ++i) {
      for (int r = 0; r < blocks[i]; ++r) diag.at(off + r, off + r) = Rational(k - 1 - i);
      off += blocks[i];
    }
    const Matrix A0 = Rational(2) * B - Rational(4) * diag;
    return {family, hermite_type_weight(B), {hermite_type_op(B, A0)}, std::nullopt};
  }
  throw DomainError("unknown catalog family '" + family + "'");
}

}  // namespace mvopq
