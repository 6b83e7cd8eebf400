#include "mvopq/quadmap.hpp"

#include "mvopq/errors.hpp"

namespace mvopq {

ChainTable ChainTable::build(int max_order) {
  if (max_order < 0) throw DomainError("negative chain table order");
  ChainTable table;
  table.t_.resize(max_order + 1);
  table.t_[0] = {MatPoly::identity(1)};
  const MatPoly two_x = MatPoly::scalar({0, 2}, 0);
  for (int j = 0; j < max_order; ++j) {
    auto& next = table.t_[j + 1];
    next.assign(j + 2, MatPoly::zero(1));
    for (int k = 0; k <= j + 1; ++k) {
      if (k <= j) next[k] += table.t_[j][k].derivative();
      if (k >= 1 && k - 1 <= j) next[k] += two_x * table.t_[j][k - 1];
    }
  }
  return table;
}

const MatPoly& ChainTable::at(int j, int k) const {
  if (j < 0 || j > max_order()) throw DomainError("chain table order out of range");
  if (k < 0 || k > j) return zero_;
  return t_[j][k];
}

namespace {

MatPoly scalar_times(const MatPoly& s, const MatPoly& P) {
  // s is 1x1; spread it to a diagonal so the generic product applies.
  if (s.is_zero() || P.is_zero()) return MatPoly::zero(P.size());
  MatPoly result = MatPoly::zero(P.size());
  for (int k = s.low_degree(); k <= s.degree(); ++k) {
    const Rational c = s.coeff(k).at(0, 0);
    if (c.is_zero()) continue;
    result += (c * P).shifted(k);
  }
  return result;
}

// Shared collection step of both transforms.  The input may carry Laurent
// coefficients (odd side); everything must have cancelled by the time a
// coefficient is substituted.
DiffOp collect_even(const DiffOp& D, const char* who) {
  const int s = D.order();
  const ChainTable table = ChainTable::build(s);
  DiffOp result(D.size());
  for (int k = 0; k <= s; ++k) {
    MatPoly collected = MatPoly::zero(D.size());
    for (int j = k; j <= s; ++j) {
      const MatPoly cj = D.coeff(j);
      if (cj.is_zero()) continue;
      collected += scalar_times(table.at(j, k), cj);
    }
    if (collected.is_zero()) continue;
    if (!collected.is_polynomial())
      throw ParityError(std::string(who) + ": Laurent terms fail to cancel in collected order " +
                        std::to_string(k) + ": " + collected.to_string());
    if (!collected.is_even())
      throw ParityError(std::string(who) + ": collected order " + std::to_string(k) +
                        " is not even: " + collected.to_string());
    result.add_term(k, collected.sqrt_substitute());
  }
  return result;
}

void check_coefficient_parity(const DiffOp& D, const char* who) {
  for (const auto& [j, c] : D.terms()) {
    if (!c.is_polynomial())
      throw ParityError(std::string(who) + ": coefficient of order " + std::to_string(j) +
                        " has negative powers");
    if (j % 2 == 0 ? !c.is_even() : !c.is_odd())
      throw ParityError(std::string(who) + ": coefficient of order " + std::to_string(j) +
                        " does not match the order's parity");
  }
}

}  // namespace

DiffOp transform_even(const DiffOp& D) {
  check_coefficient_parity(D, "transform_even");
  return collect_even(D, "transform_even");
}

DiffOp transform_odd(const DiffOp& D) {
  check_coefficient_parity(D, "transform_odd");
  return collect_even(conjugate_by_x(D), "transform_odd");
}

VerifyReport parity_check(const WeightSpec& W, int n_max) {
  VerifyReport report;
  report.n_max = n_max;
  const MonicSequence seq = monic_op(W, n_max);
  for (int n = 0; n <= n_max; ++n) {
    const auto [even, odd] = seq.polys[n].parity_split();
    const MatPoly& wrong_part = n % 2 == 0 ? odd : even;
    report.add("parity", n, wrong_part.is_zero(),
               wrong_part.is_zero() ? "" : "off-parity part " + wrong_part.to_string());
  }
  return report;
}

VerifyReport correspondence_check(const WeightSpec& W, int n_max) {
  VerifyReport report;
  report.n_max = n_max;
  const WeightSpec V = pushforward(W, Parity::even);
  const WeightSpec U = pushforward(W, Parity::odd);
  const MonicSequence H = monic_op(W, n_max);
  const MonicSequence L = monic_op(V, n_max / 2);
  const MonicSequence F = monic_op(U, n_max >= 1 ? (n_max - 1) / 2 : 0);
  for (int n = 0; 2 * n <= n_max; ++n) {
    const MatPoly lifted = L.polys[n].square_expand();
    const bool ok = H.polys[2 * n] == lifted;
    report.add("even-side", n, ok,
               ok ? "" : "H_" + std::to_string(2 * n) + " = " + H.polys[2 * n].to_string() +
                             " vs L_n(x^2) = " + lifted.to_string());
  }
  for (int n = 0; 2 * n + 1 <= n_max; ++n) {
    const MatPoly lifted = F.polys[n].square_expand().shifted(1);
    const bool ok = H.polys[2 * n + 1] == lifted;
    report.add("odd-side", n, ok,
               ok ? "" : "H_" + std::to_string(2 * n + 1) + " = " + H.polys[2 * n + 1].to_string() +
                             " vs x F_n(x^2) = " + lifted.to_string());
  }
  return report;
}

VerifyReport spectral_match_check(const WeightSpec& W, const DiffOp& D, int n_max) {
  VerifyReport report;
  report.n_max = n_max;
  const DiffOp Dt = transform_even(D);
  const DiffOp Et = transform_odd(D);
  const MonicSequence L = monic_op(pushforward(W, Parity::even), n_max);
  const MonicSequence F = monic_op(pushforward(W, Parity::odd), n_max);
  for (int n = 0; n <= n_max; ++n) {
    const Matrix le = lambda_eigenvalue(Dt, n);
    const bool le_ok = le == lambda_eigenvalue(D, 2 * n);
    report.add("lambda-even", n, le_ok,
               le_ok ? "" : "Lambda_n(D~) = " + le.to_string() + " vs Lambda_2n(D) = " +
                                lambda_eigenvalue(D, 2 * n).to_string());
    const MatPoly lhs = apply(L.polys[n], Dt);
    const MatPoly rhs = MatPoly::constant(le) * L.polys[n];
    report.add("eigen-even", n, lhs == rhs,
               lhs == rhs ? "" : "L_n.D~ = " + lhs.to_string("y") + " vs " + rhs.to_string("y"));

    const Matrix lo = lambda_eigenvalue(Et, n);
    const bool lo_ok = lo == lambda_eigenvalue(D, 2 * n + 1);
    report.add("lambda-odd", n, lo_ok,
               lo_ok ? "" : "Lambda_n(E~) = " + lo.to_string() + " vs Lambda_2n+1(D) = " +
                                lambda_eigenvalue(D, 2 * n + 1).to_string());
    const MatPoly lhs_o = apply(F.polys[n], Et);
    const MatPoly rhs_o = MatPoly::constant(lo) * F.polys[n];
    report.add("eigen-odd", n, lhs_o == rhs_o,
               lhs_o == rhs_o ? "" : "F_n.E~ = " + lhs_o.to_string("y") + " vs " + rhs_o.to_string("y"));
  }
  return report;
}

}  // namespace mvopq
