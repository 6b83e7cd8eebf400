#include "mvopq/orthopoly.hpp"

#include "mvopq/errors.hpp"

namespace mvopq {

MonicSequence monic_op(const WeightSpec& W, int n_max) {
  const int N = W.size();
  MonicSequence seq{W, {}, {}};
  for (int n = 0; n <= n_max; ++n) {
    MatPoly P = MatPoly::x_power(N, n);
    if (n > 0) {
      // Row-block unknown X = [C_0 .. C_{n-1}] solving X M = -[G_n .. G_{2n-1}]
      // with M the block Hankel matrix of Gram blocks.
      Matrix M(n * N, n * N);
      Matrix Bv(N, n * N);
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
          const Matrix G = gram_block(W, k, j);
          for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) M.at(k * N + r, j * N + c) = G.at(r, c);
        }
      for (int j = 0; j < n; ++j) {
        const Matrix G = gram_block(W, n, j);
        for (int r = 0; r < N; ++r)
          for (int c = 0; c < N; ++c) Bv.at(r, j * N + c) = -G.at(r, c);
      }
      Matrix X;
      try {
        X = Matrix::solve_right(M, Bv);
      } catch (const SingularMatrixError&) {
        throw WeightNotPositiveError(n);
      }
      for (int k = 0; k < n; ++k) {
        Matrix Ck(N, N);
        for (int r = 0; r < N; ++r)
          for (int c = 0; c < N; ++c) Ck.at(r, c) = X.at(r, k * N + c);
        P += MatPoly::monomial(Ck, k);
      }
    }
    seq.polys.push_back(P);
    // <P_n, P_n> = <P_n, x^n I> once orthogonality holds.
    seq.norms.push_back(inner_product(P, MatPoly::x_power(N, n), W));
  }
  return seq;
}

MonicSequence gs_oracle(const WeightSpec& W, int n_max) {
  const int N = W.size();
  MonicSequence seq{W, {}, {}};
  for (int n = 0; n <= n_max; ++n) {
    MatPoly P = MatPoly::x_power(N, n);
    for (int k = 0; k < n; ++k) {
      const Matrix S = inner_product(MatPoly::x_power(N, n), seq.polys[k], W);
      Matrix Hinv;
      try {
        Hinv = seq.norms[k].inverse();
      } catch (const SingularMatrixError&) {
        throw WeightNotPositiveError(k);
      }
      P -= (S * Hinv) * seq.polys[k];
    }
    seq.polys.push_back(P);
    seq.norms.push_back(inner_product(P, P, W));
  }
  return seq;
}

Recurrence recurrence_coeffs(const MonicSequence& seq) {
  const int N = seq.weight.size();
  const int n_max = seq.n_max();
  Recurrence rec;
  for (int n = 0; n < n_max; ++n) {
    const MatPoly& Pn = seq.polys[n];
    const MatPoly& Pn1 = seq.polys[n + 1];
    const Matrix B = Pn.coeff(n - 1) - Pn1.coeff(n);
    rec.B.push_back(B);
    Matrix A = Matrix::zero(N);
    if (n >= 1) A = Pn.coeff(n - 2) - Pn1.coeff(n - 1) - B * Pn.coeff(n - 1);
    rec.A.push_back(A);
    MatPoly resid = Pn.shifted(1) - Pn1 - MatPoly::constant(B) * Pn;
    if (n >= 1) resid -= MatPoly::constant(A) * seq.polys[n - 1];
    if (!resid.is_zero())
      throw ConsistencyError("three-term recurrence residue at n=" + std::to_string(n) + ": " +
                             resid.to_string());
  }
  return rec;
}

std::optional<int> norms_spd_failure(const MonicSequence& seq) {
  for (size_t n = 0; n < seq.norms.size(); ++n)
    if (!seq.norms[n].is_positive_definite()) return static_cast<int>(n);
  return std::nullopt;
}

}  // namespace mvopq
