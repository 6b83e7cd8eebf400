#include "mvopq/darboux.hpp"

#include "mvopq/errors.hpp"

namespace mvopq {

namespace {

// Core of intertwine_check, reusable for the Laguerre sides: asserts
// q_n . V = A_n P_n between two explicit monic sequences and returns the
// extracted A_n list.
std::vector<Matrix> run_intertwine(const MonicSequence& source, const MonicSequence& target,
                                   const DiffOp& V, const std::string& label,
                                   VerifyReport& report) {
  std::vector<Matrix> as;
  const int n_max = std::min(source.n_max(), target.n_max());
  for (int n = 0; n <= n_max; ++n) {
    const MatPoly Q = apply(source.polys[n], V);
    if (!Q.is_zero() && (!Q.is_polynomial() || Q.degree() > n)) {
      report.add(label + "-degree", n, false,
                 "Q_n has degree above n: " + Q.to_string());
      as.push_back(Matrix::zero(V.size()));
      continue;
    }
    const Matrix An = Q.is_zero() ? Matrix::zero(V.size()) : Q.coeff(n);
    as.push_back(An);
    const MatPoly expected = MatPoly::constant(An) * target.polys[n];
    const bool ok = Q == expected;
    report.add(label, n, ok,
               ok ? "" : "Q_n = " + Q.to_string() + " vs A_n H_n = " + expected.to_string());
    report.add_advisory(label + "-An-invertible", n, An.is_invertible(),
                        An.is_invertible() ? "" : "A_n = " + An.to_string() + " singular");
  }
  return as;
}

}  // namespace

VerifyReport intertwine_check(const DarbouxCase& c, int n_max) {
  VerifyReport report;
  report.case_id = c.id;
  report.n_max = n_max;
  const MonicSequence source = monic_op(c.source, n_max);
  const MonicSequence target = monic_op(c.target, n_max);
  const std::vector<Matrix> as = run_intertwine(source, target, c.V, "intertwine", report);
  for (int n = 0; n <= n_max; ++n) {
    if (c.expected_Qn) {
      const MatPoly Q = apply(source.polys[n], c.V);
      const MatPoly printed = c.expected_Qn(n);
      report.add("printed-Qn", n, Q == printed,
                 Q == printed ? ""
                              : "computed " + Q.to_string() + " vs printed " + printed.to_string());
    }
    if (c.expected_An) {
      const Matrix printed = c.expected_An(n);
      report.add("printed-An", n, as[n] == printed,
                 as[n] == printed
                     ? ""
                     : "computed " + as[n].to_string() + " vs printed " + printed.to_string());
    }
  }
  return report;
}

VerifyReport factorization_check(const DarbouxCase& c, int n_max) {
  if (!c.N) throw DomainError("factorization check needs the cofactor operator");
  VerifyReport report;
  report.case_id = c.id;
  report.n_max = n_max;
  const DiffOp VN = compose(c.V, *c.N);
  const DiffOp NV = compose(*c.N, c.V);
  VerifyReport src = eigen_check(c.source, VN, n_max);
  for (auto& r : src.records) r.name = "source-VN-" + r.name;
  VerifyReport tgt = eigen_check(c.target, NV, n_max);
  for (auto& r : tgt.records) r.name = "target-NV-" + r.name;
  report.merge(src);
  report.merge(tgt);
  return report;
}

VerifyReport degree_preserving_check(const DiffOp& D, int n_max) {
  VerifyReport report;
  report.n_max = n_max;
  for (int n = 0; n <= n_max; ++n) {
    const Matrix L = lambda_eigenvalue(D, n);
    report.add("degree-preserving", n, L.is_invertible(),
               L.is_invertible() ? "" : "Lambda_n = " + L.to_string() + " singular");
  }
  return report;
}

VerifyReport darboux_quadratic_check(const DarbouxCase& c, int n_max) {
  VerifyReport report;
  report.case_id = c.id;
  report.n_max = n_max;
  const int N = c.V.size();

  const DiffOp Vt = transform_even(c.V);
  const DiffOp Et = transform_odd(c.V);

  const MonicSequence herm_source = monic_op(c.source, 2 * n_max + 1);
  const MonicSequence herm_target = monic_op(c.target, 2 * n_max + 1);
  VerifyReport herm;
  const std::vector<Matrix> a_herm =
      run_intertwine(herm_source, herm_target, c.V, "hermite-side", herm);
  report.merge(herm);

  const MonicSequence lag_even_src = monic_op(WeightSpec::scalar_laguerre(Rational(-1, 2), N), n_max);
  const MonicSequence lag_even_tgt = monic_op(pushforward(c.target, Parity::even), n_max);
  const std::vector<Matrix> a_even =
      run_intertwine(lag_even_src, lag_even_tgt, Vt, "laguerre-even", report);

  const MonicSequence lag_odd_src = monic_op(WeightSpec::scalar_laguerre(Rational(1, 2), N), n_max);
  const MonicSequence lag_odd_tgt = monic_op(pushforward(c.target, Parity::odd), n_max);
  const std::vector<Matrix> a_odd =
      run_intertwine(lag_odd_src, lag_odd_tgt, Et, "laguerre-odd", report);

  for (int n = 0; n <= n_max; ++n) {
    const bool even_ok = a_even[n] == a_herm[2 * n];
    report.add("A-match-even", n, even_ok,
               even_ok ? ""
                       : "Laguerre A_n = " + a_even[n].to_string() + " vs Hermite A_2n = " +
                             a_herm[2 * n].to_string());
    const bool odd_ok = a_odd[n] == a_herm[2 * n + 1];
    report.add("A-match-odd", n, odd_ok,
               odd_ok ? ""
                      : "Laguerre A_n = " + a_odd[n].to_string() + " vs Hermite A_2n+1 = " +
                            a_herm[2 * n + 1].to_string());
  }
  return report;
}

}  // namespace mvopq
