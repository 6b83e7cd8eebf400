#pragma once

#include <functional>
#include <optional>
#include <string>

#include "mvopq/diffop.hpp"
#include "mvopq/orthopoly.hpp"
#include "mvopq/quadmap.hpp"
#include "mvopq/report.hpp"

namespace mvopq {

/**
 * One Darboux pair: a source weight with known orthogonal structure, a target
 * weight, and an intertwiner V mapping source monic MVOP onto multiples of
 * the target ones: p_n . V = A_n P_n.  The cofactor N, when present,
 * factors a target-bound operator as compose(V, N).  Closed forms for Q_n
 * and A_n are optional and used as printed-formula oracles.
 */
struct DarbouxCase {
  std::string id;
  WeightSpec source;
  WeightSpec target;
  DiffOp V;
  std::optional<DiffOp> N;
  std::function<MatPoly(int)> expected_Qn;  // may be empty
  std::function<Matrix(int)> expected_An;   // may be empty
};

/**
 * Computes Q_n = p_n . V for the source monic sequence, reads A_n off the
 * degree-n coefficient, and asserts Q_n = A_n H_n exactly against the target
 * monic sequence.  A_n invertibility is reported per n as advisory records;
 * closed-form oracles are checked when the case carries them.
 */
VerifyReport intertwine_check(const DarbouxCase& c, int n_max);

// eigen_check(source, compose(V, N)) and eigen_check(target, compose(N, V)).
VerifyReport factorization_check(const DarbouxCase& c, int n_max);

// Per-n invertibility of Lambda_n(D): the operator preserves degree exactly
// at the degrees whose eigenvalue matrix is invertible.
VerifyReport degree_preserving_check(const DiffOp& D, int n_max);

/**
 * Carries a Hermite-side Darboux pair through y = x^2: intertwines the
 * diagonal Laguerre sources into the two pushforward targets using
 * transform_even(V) and transform_odd(V), and asserts the Laguerre-side
 * normalizers equal the Hermite-side A_2n (even) and A_2n+1 (odd).
 */
VerifyReport darboux_quadratic_check(const DarbouxCase& c, int n_max);

}  // namespace mvopq
