#pragma once

#include <vector>

#include "mvopq/diffop.hpp"
#include "mvopq/orthopoly.hpp"
#include "mvopq/report.hpp"
#include "mvopq/weights.hpp"

namespace mvopq {

/**
 * Chain-rule table for y = x^2: scalar polynomials T_{j,k} with
 *   d^j/dx^j [g(x^2)] = sum_k T_{j,k}(x) g^(k)(x^2).
 * T_{j,k} has the parity of j; T_{0,0} = 1, and
 * T_{j+1,k} = T_{j,k}' + 2x T_{j,k-1}.
 */
class ChainTable {
 public:
  static ChainTable build(int max_order);

  int max_order() const { return static_cast<int>(t_.size()) - 1; }
  // T_{j,k}; zero outside 0 <= k <= j.
  const MatPoly& at(int j, int k) const;

 private:
  std::vector<std::vector<MatPoly>> t_;  // t_[j][k], k = 0..j
  MatPoly zero_ = MatPoly::zero(1);
};

/**
 * Even-side transform: D acting in x becomes D-tilde acting in y = x^2, so
 * that G . D-tilde evaluated at x^2 equals (G composed with x^2) . D.
 * Collects C~_k = sum_j T_{j,k} C_j, demands each collected coefficient be an
 * even genuine polynomial, and substitutes y = x^2.
 */
DiffOp transform_even(const DiffOp& D);

/**
 * Odd-side transform: conjugate by x first (E with E x = x D), then run the
 * even-side collection on E.  The Laurent terms introduced by conjugation
 * must cancel in each collected coefficient.
 */
DiffOp transform_odd(const DiffOp& D);

// P_2n even, P_2n+1 odd for the monic sequence of an even Hermite weight.
VerifyReport parity_check(const WeightSpec& W, int n_max);

// H_{2n}(x) = L_n(x^2) and H_{2n+1}(x) = x F_n(x^2) for 2n, 2n+1 <= n_max,
// with L, F the monic sequences of the two pushforward weights.
VerifyReport correspondence_check(const WeightSpec& W, int n_max);

// Lambda_n(D~) = Lambda_2n(D), L_n . D~ = Lambda_2n L_n, and the odd-side
// analogues with E~ = transform_odd(D) and eigenvalues at 2n+1.
VerifyReport spectral_match_check(const WeightSpec& W, const DiffOp& D, int n_max);

}  // namespace mvopq
