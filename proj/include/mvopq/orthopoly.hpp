#pragma once

#include <optional>
#include <vector>

#include "mvopq/weights.hpp"

namespace mvopq {

/// Monic orthogonal sequence P_0..P_n for a weight, with squared norms.
struct MonicSequence {
  WeightSpec weight;
  std::vector<MatPoly> polys;
  std::vector<Matrix> norms;  // norms[n] = <P_n, P_n>

  int n_max() const { return static_cast<int>(polys.size()) - 1; }
};

/// Coefficients of x P_n = P_{n+1} + B_n P_n + A_n P_{n-1}.
struct Recurrence {
  std::vector<Matrix> B;  // B[n], n = 0..n_max-1
  std::vector<Matrix> A;  // A[n], n = 1..n_max-1; A[0] stored as zero
};

// Monic orthogonal polynomials by solving the block Gram system for each
// degree.  Throws WeightNotPositiveError when a system degenerates.
MonicSequence monic_op(const WeightSpec& W, int n_max);

// Same sequence by Gram-Schmidt projection of the monomials.  Kept as an
// independent route; tests compare it against monic_op.
MonicSequence gs_oracle(const WeightSpec& W, int n_max);

// Extracts B_n, A_n by coefficient matching, then asserts the full
// three-term identity exactly (ConsistencyError on residue).
Recurrence recurrence_coeffs(const MonicSequence& seq);

// First n whose norm fails symmetric positive-definiteness, if any.
std::optional<int> norms_spd_failure(const MonicSequence& seq);

}  // namespace mvopq
