// Acceptance gate: one verdict line per criterion, details indented below.
// Exit code is the number of failed mandatory criteria.
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "mvopq/catalog.hpp"
#include "mvopq/classical.hpp"
#include "mvopq/darboux.hpp"
#include "mvopq/errors.hpp"

using namespace mvopq;

namespace {

std::string trunc(const std::string& s) {
  return s.size() <= 200 ? s : s.substr(0, 197) + "...";
}

class Criterion {
 public:
  void sub(const std::string& name, bool pass, const std::string& witness = "") {
    ok_ = ok_ && pass;
    lines_.push_back(std::string("    [") + (pass ? "pass" : "FAIL") + "] " + name);
    if (!pass && !witness.empty()) lines_.push_back("           " + trunc(witness));
  }
  // informational: shown but never flips the verdict
  void info(const std::string& name, const std::string& note = "") {
    lines_.push_back("    [info] " + name);
    if (!note.empty()) lines_.push_back("           " + trunc(note));
  }
  bool flush(int idx, const std::string& title) {
    std::cout << "criterion " << idx << ": " << (ok_ ? "PASS" : "FAIL") << "  " << title
              << "\n";
    for (const auto& l : lines_) std::cout << l << "\n";
    return ok_;
  }

 private:
  bool ok_ = true;
  std::vector<std::string> lines_;
};

std::string first_failure(const VerifyReport& r) {
  for (const auto& rec : r.records)
    if (!rec.advisory && !rec.pass)
      return rec.name + " n=" + std::to_string(rec.n) + ": " + rec.witness;
  return "";
}

// entry (i, j) of a matrix polynomial as a 1x1 polynomial
MatPoly entry_poly(const MatPoly& p, int i, int j) {
  MatPoly e = MatPoly::zero(1);
  if (p.is_zero()) return e;
  for (int k = p.low_degree(); k <= p.degree(); ++k) {
    Matrix m(1, 1);
    m.at(0, 0) = p.coeff(k).at(i, j);
    if (!m.is_zero()) e += MatPoly::monomial(m, k);
  }
  return e;
}

// The four catalog instances exercised by the interleaving and parity gates.
struct Instance {
  std::string name;
  WeightSpec W;
  DiffOp D;
};

std::vector<Instance> instances() {
  std::vector<Instance> out;
  for (const char* fam : {"dg2004-2x2", "dg2005-3x3"}) {
    CatalogEntry e = catalog_build(fam);
    out.push_back({fam, e.weight, e.operators.front()});
  }
  {
    CatalogEntry e = catalog_build("blocknil", {{"blocks", {3, 1}}});
    out.push_back({"blocknil 3+1", e.weight, e.operators.front()});
  }
  {
    CatalogEntry e = catalog_build("blocknil", {{"blocks", {2, 1, 1}}});
    out.push_back({"blocknil 2+1+1", e.weight, e.operators.front()});
  }
  return out;
}

// ---- criterion 1: 2x2 closed forms at a = 1 ---------------------------------

bool criterion1() {
  Criterion c;
  const Rational a = 1;
  const CatalogEntry e = catalog_build("dg2004-2x2");
  const MonicSequence H = monic_op(e.weight, 8);
  const std::vector<MatPoly> h = hermite_monic(8);

  auto closed_H = [&](int n) {
    const Rational nn(n);
    const Rational d = a * a * nn * (nn - 1) + 4;
    const Matrix M1{{1, -a * a * a * nn * (nn - 1) * (2 * nn + 1) / (2 * d)}, {0, 4 / d}};
    MatPoly expected = MatPoly::constant(M1) * h[n].to_diag(2);
    if (n >= 2) {
      const MatPoly M2 =
          MatPoly::constant(Matrix{{-2 * a * (2 * nn + 1) / d, -1}, {-4 / d, 0}}) +
          MatPoly::monomial(Matrix{{0, 2 * a * a * (2 * nn + 1) / d}, {0, 4 * a / d}}, 2);
      expected += (a * nn * (nn - 1) / 4) * (M2 * h[n - 2].to_diag(2));
    }
    return expected;
  };
  bool hn = true;
  for (int n = 0; n <= 8; ++n) hn = hn && H.polys[n] == closed_H(n);
  c.sub("Hermite-type H_n equals its closed form, n <= 8", hn);

  const MonicSequence L = monic_op(pushforward(e.weight, Parity::even), 4);
  const MonicSequence F = monic_op(pushforward(e.weight, Parity::odd), 4);
  const std::vector<MatPoly> le = laguerre_monic(Rational(-1, 2), 4);
  const std::vector<MatPoly> lo = laguerre_monic(Rational(1, 2), 4);

  // s = -1 gives the even descendant (factors 2n-1, 4n+1), s = +1 the odd one
  auto closed_lag = [&](int n, int s, const std::vector<MatPoly>& ell) {
    const Rational nn(n);
    const Rational k = 2 * nn + s;
    const Rational f = 4 * nn + 2 + s;
    const Rational d = a * a * nn * k + 2;
    const Matrix M1{{1, -a * a * a * nn * k * f / (2 * d)}, {0, 2 / d}};
    MatPoly expected = MatPoly::constant(M1) * ell[n].to_diag(2);
    if (n >= 1) {
      const MatPoly M2 = MatPoly::constant(Matrix{{-a * f / d, -1}, {-2 / d, 0}}) +
                         MatPoly::monomial(Matrix{{0, a * a * f / d}, {0, 2 * a / d}}, 1);
      expected += (a * nn * k / 2) * (M2 * ell[n - 1].to_diag(2));
    }
    return expected;
  };
  bool ln = true, fn = true;
  for (int n = 0; n <= 4; ++n) {
    ln = ln && L.polys[n] == closed_lag(n, -1, le);
    fn = fn && F.polys[n] == closed_lag(n, +1, lo);
  }
  c.sub("even Laguerre-type L_n equals its closed form, n <= 4", ln);
  c.sub("odd Laguerre-type F_n equals its closed form, n <= 4", fn);
  return c.flush(1, "2x2 closed forms (a = 1)");
}

// ---- criterion 2: even/odd interleaving of monic sequences -------------------

bool criterion2() {
  Criterion c;
  for (const auto& t : instances()) {
    VerifyReport r = correspondence_check(t.W, 9);
    c.sub("interleaving through y = x^2: " + t.name, r.overall(), first_failure(r));
  }
  return c.flush(2, "monic sequences interleave across y = x^2 (n <= 9)");
}

// ---- criterion 3: parity structure ------------------------------------------

bool criterion3() {
  Criterion c;
  for (const auto& t : instances()) {
    VerifyReport r = parity_check(t.W, 9);
    c.sub("P_n has the parity of n: " + t.name, r.overall(), first_failure(r));
  }
  return c.flush(3, "monic polynomials inherit the weight's parity (n <= 9)");
}

// ---- criterion 4: pushforward preserves even inner products ------------------

bool criterion4() {
  Criterion c;
  const WeightSpec W = catalog_build("dg2004-2x2").weight;
  const WeightSpec V = pushforward(W, Parity::even);
  std::mt19937_64 rng(20250822);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto random_even = [&]() {
    MatPoly p = MatPoly::zero(2);
    for (int k = 0; k <= 6; k += 2) {
      Matrix m(2, 2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.at(i, j) = coeff(rng);
      p += MatPoly::monomial(m, k);
    }
    return p;
  };
  bool all = true;
  for (int t = 0; t < 20 && all; ++t) {
    const MatPoly F = random_even(), G = random_even();
    all = inner_product(F, G, W) ==
          inner_product(F.sqrt_substitute(), G.sqrt_substitute(), V);
  }
  c.sub("<F, G>_W = <F~, G~>_V for 20 seeded random even pairs, deg <= 6", all);
  return c.flush(4, "pushforward preserves inner products of even polynomials");
}

// ---- criterion 5: quadratic transform of the 3x3 operator --------------------

bool criterion5() {
  Criterion c;
  const CatalogEntry e = catalog_build("dg2005-3x3");
  const DiffOp& D = e.operators.front();
  const Matrix A0{{-4, 0, 2}, {0, -4, 2}, {0, 0, 0}};
  const MatPoly fourY = MatPoly::scalar({0, 4}).to_diag(3);
  // first-order coefficients 2(2yM + I) and 2(2yM + 3I) with M = 2B - I
  const MatPoly C1_even = MatPoly::constant(Matrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}) +
                          MatPoly::monomial(Matrix{{-4, 0, 8}, {0, -4, 8}, {0, 0, -4}}, 1);
  const MatPoly C1_odd = MatPoly::constant(Matrix{{6, 0, 0}, {0, 6, 0}, {0, 0, 6}}) +
                         MatPoly::monomial(Matrix{{-4, 0, 8}, {0, -4, 8}, {0, 0, -4}}, 1);
  const Matrix A0_odd{{-6, 0, 6}, {0, -6, 6}, {0, 0, -2}};

  const DiffOp Dt = transform_even(D);
  const DiffOp Et = transform_odd(D);
  c.sub("transform_even(D) equals its published form (second order read as 4y I)",
        Dt == DiffOp(3, {{2, fourY}, {1, C1_even}, {0, MatPoly::constant(A0)}}));
  c.sub("transform_odd(D) equals its published form (second order read as 4y I)",
        Et == DiffOp(3, {{2, fourY}, {1, C1_odd}, {0, MatPoly::constant(A0_odd)}}));
  c.info("the published instance prints the constant 4I as second order; the blockwise "
         "general form prints 4y I, the reading checked here (see criterion 8)");

  const WeightSpec V = pushforward(e.weight, Parity::even);
  const WeightSpec U = pushforward(e.weight, Parity::odd);
  VerifyReport r1 = eigen_check(e.weight, D, 8);
  c.sub("D eigen on W, n <= 8", r1.overall(), first_failure(r1));
  VerifyReport r2 = eigen_check(V, Dt, 8);
  c.sub("D~ eigen on the even pushforward, n <= 8", r2.overall(), first_failure(r2));
  VerifyReport r3 = eigen_check(U, Et, 8);
  c.sub("E~ eigen on the odd pushforward, n <= 8", r3.overall(), first_failure(r3));

  bool lam = true;
  for (int n = 0; n <= 8; ++n)
    lam = lam && lambda_eigenvalue(Dt, n) == lambda_eigenvalue(D, 2 * n) &&
          lambda_eigenvalue(Et, n) == lambda_eigenvalue(D, 2 * n + 1);
  c.sub("Lambda_n(D~) = Lambda_2n(D) and Lambda_n(E~) = Lambda_2n+1(D), n <= 8", lam);
  return c.flush(5, "quadratic transform of the 3x3 operator (a = b = 1)");
}

// ---- criterion 6: symmetry survives the transform ----------------------------

bool criterion6() {
  Criterion c;
  const CatalogEntry e = catalog_build("dg2005-3x3");
  const DiffOp& D = e.operators.front();
  VerifyReport r1 = symmetry_check(e.weight, D, 10);
  c.sub("D symmetric for W, deg <= 10", r1.overall(), first_failure(r1));
  VerifyReport r2 = symmetry_check(pushforward(e.weight, Parity::even), transform_even(D), 10);
  c.sub("D~ symmetric for the even pushforward, deg <= 10", r2.overall(), first_failure(r2));
  return c.flush(6, "symmetry survives the quadratic transform");
}

// ---- criterion 7: the Darboux pair and its quadratic descent -----------------

bool criterion7() {
  Criterion c;
  const CatalogEntry e = catalog_build("bp-3x3-ex2");  // a = b = 1, so a^2 + b^2 = 2
  const DarbouxCase& dc = *e.darboux;

  VerifyReport ri = intertwine_check(dc, 8);
  c.sub("h_n I . V = A_n H_n with published Q_n and A_n, n <= 8", ri.overall(),
        first_failure(ri));

  const DiffOp VN = compose(dc.V, *dc.N);
  std::vector<std::vector<std::vector<Rational>>> grid = {
      {{16, 4, 4}, {16, 4}, {}},
      {{16, 4}, {16, 4, 4}, {}},
      {{}, {}, {64, -24, 4}}};
  std::string wit;
  if (VN != op_from_delta_poly(grid))
    wit = "entry (3,3): published 4 delta^2 - 24 delta + 64, computed delta^2 - 6 delta + 16";
  c.sub("compose(V, N) equals the published delta expansion", VN == op_from_delta_poly(grid),
        wit);
  grid[2][2] = {16, -6, 1};
  c.sub("compose(V, N) equals the delta expansion with entry (3,3) rescaled by (a^2+b^2)^2/16",
        VN == op_from_delta_poly(grid));

  VerifyReport rf = factorization_check(dc, 6);
  c.sub("VN eigen on the scalar source, NV eigen on the target, n <= 6", rf.overall(),
        first_failure(rf));

  const DiffOp Vt = transform_even(dc.V);
  const DiffOp Nt = transform_even(*dc.N);
  const DiffOp Et = transform_odd(dc.V);
  const DiffOp Ft = transform_odd(*dc.N);
  const MatPoly N_second = MatPoly::monomial(Matrix{{-8, 0, 0}, {0, 0, -4}, {0, -8, 0}}, 1) +
                           MatPoly::monomial(Matrix{{0, 0, -4}, {0, 0, 0}, {0, 0, -4}}, 2);
  const DiffOp printed_Vt(
      3, {{2, MatPoly::monomial(Matrix{{-8, 0, 0}, {0, 0, -8}, {0, -4, 0}}, 1) +
              MatPoly::monomial(Matrix{{0, 8, 0}, {0, 8, 0}, {0, 0, 0}}, 2)},
          {1, MatPoly::constant(Matrix{{-4, 0, 0}, {0, 0, -4}, {0, -2, 0}}) +
              MatPoly::monomial(Matrix{{4, 4, -4}, {-4, 4, 4}, {0, 8, 0}}, 1)},
          {0, MatPoly::constant(Matrix{{0, 4, 0}, {0, 4, 0}, {-2, 2, -2}})}});
  const DiffOp printed_Nt(
      3, {{2, N_second},
          {1, MatPoly::constant(Matrix{{-4, 0, 0}, {0, 0, -2}, {0, -4, 0}}) +
              MatPoly::monomial(Matrix{{12, 4, -10}, {0, 0, 0}, {4, 12, -10}}, 1)},
          {0, MatPoly::constant(Matrix{{2, 2, -4}, {4, 4, 0}, {2, 2, -4}})}});
  const DiffOp printed_Ft(
      3, {{2, N_second},
          {1, MatPoly::constant(Matrix{{-12, 0, 0}, {0, 0, -6}, {0, -12, 0}}) +
              MatPoly::monomial(Matrix{{12, 4, -14}, {0, 0, 0}, {4, 12, -14}}, 1)},
          {0, MatPoly::constant(Matrix{{8, 4, -8}, {4, 4, 0}, {4, 8, -8}})}});
  c.sub("transform_even(V) equals the published V~", Vt == printed_Vt);
  c.sub("transform_even(N) equals the published N~", Nt == printed_Nt);
  c.sub("transform_odd(N) equals the published F~", Ft == printed_Ft);
  c.info("the published E~ differs from transform_odd(V) in the first-order entry (3,2) "
         "only, by a factor 2; recorded under criterion 8");

  VerifyReport rq = darboux_quadratic_check(dc, 3);
  c.sub("Laguerre sides intertwine with the Hermite normalizers A_2n, A_2n+1, n <= 3",
        rq.overall(), first_failure(rq));

  const WeightSpec u = WeightSpec::scalar_laguerre(Rational(1, 2), 3);
  const WeightSpec U = pushforward(dc.target, Parity::odd);
  VerifyReport r5 = eigen_check(u, compose(Et, Ft), 5);
  c.sub("E~ F~ eigen on the scalar Laguerre weight, n <= 5", r5.overall(), first_failure(r5));
  VerifyReport r6 = eigen_check(U, compose(Ft, Et), 5);
  c.sub("F~ E~ eigen on the odd pushforward, n <= 5", r6.overall(), first_failure(r6));

  const Rational a = 1, b = 1, s = 2;  // s = a^2 + b^2
  const std::vector<MatPoly> le = laguerre_monic(Rational(-1, 2), 4);
  const std::vector<MatPoly> lo = laguerre_monic(Rational(1, 2), 4);
  const MonicSequence L = monic_op(pushforward(dc.target, Parity::even), 4);
  const MonicSequence F = monic_op(U, 3);

  auto printed_L = [&](int n) {
    const Rational nn(n);
    const Rational d = 2 + s * nn * (2 * nn - 1);
    const Matrix A{{1, -a * s * nn * (2 * nn - 1) * (4 * nn + 1) / (2 * d), 0},
                   {0, 2 / d, 0},
                   {0, -b * s * nn * (2 * nn - 1) * (4 * nn + 1) / (2 * d), 1}};
    MatPoly expected = MatPoly::constant(A) * le[n].to_diag(3);
    if (n >= 1) {
      const Matrix B0{{a * a * (1 + 4 * nn) / 2, a + a * s * nn * (2 * nn - 1) / 2,
                       a * b * (1 + 4 * nn) / 2},
                      {a, 0, b},
                      {a * b * (1 + 4 * nn) / 2, b + b * s * nn * (2 * nn - 1) / 2,
                       b * b * (1 + 4 * nn) / 2}};
      const Matrix B1{{0, -a * s * (4 * nn + 1) / 2, 0},
                      {0, -s, 0},
                      {0, -b * s * (4 * nn + 1) / 2, 0}};
      expected += (nn * (1 - 2 * nn) / d) *
                  ((MatPoly::constant(B0) + MatPoly::monomial(B1, 1)) * le[n - 1].to_diag(3));
    }
    return expected;
  };
  bool lok = true;
  for (int n = 0; n <= 4; ++n) lok = lok && L.polys[n] == printed_L(n);
  c.sub("even Laguerre-type L_n equals its published closed form, n <= 4", lok);

  auto printed_P = [&](int n) {
    const Rational nn(n);
    const Rational m = 2 * nn + 1;
    const Matrix K{{2 * b * b * m, 4 * a, -2 * a * b * m},
                   {-2 * a * b * m, 4 * b, 2 * a * a * m},
                   {-a * s, s * s * (2 * m + 1) / 2, -b * s}};
    MatPoly expected = MatPoly::constant(K) * lo[n].to_diag(3);
    if (n >= 1) {
      const MatPoly My = MatPoly::constant(Matrix{{-2 * a * a, 0, -2 * a * b},
                                                  {-2 * a * b, 0, -2 * b * b},
                                                  {0, s * s / 2, 0}}) +
                         MatPoly::monomial(
                             Matrix{{0, 2 * a * s, 0}, {0, 2 * b * s, 0}, {0, 0, 0}}, 1);
      expected += nn * m * (My * lo[n - 1].to_diag(3));
    }
    return expected;
  };
  bool pok = true;
  for (int n = 0; n <= 3; ++n)
    pok = pok && printed_P(n) == MatPoly::constant(dc.expected_An(2 * n + 1)) * F.polys[n];
  c.sub("published odd-side P_n equals A_2n+1 F_n, n <= 3", pok);
  return c.flush(7, "Darboux pair and its quadratic descent (a = b = 1)");
}

// ---- criterion 8: published-formula discrepancies, reproduced ----------------

bool criterion8() {
  Criterion c;
  const CatalogEntry ex2 = catalog_build("bp-3x3-ex2");
  const Matrix A0n = ex2.darboux->expected_An(0);
  c.sub("intertwiner normalizer A_0 = [[0,4,0],[0,4,0],[-2,2,-2]] is singular (reproduced)",
        A0n == Matrix{{0, 4, 0}, {0, 4, 0}, {-2, 2, -2}} && !A0n.is_invertible());

  const CatalogEntry e6 = catalog_build("dg2005-3x3");
  const DiffOp& D6 = e6.operators.front();
  const WeightSpec V6 = pushforward(e6.weight, Parity::even);
  const WeightSpec U6 = pushforward(e6.weight, Parity::odd);
  const Matrix A0{{-4, 0, 2}, {0, -4, 2}, {0, 0, 0}};
  const MatPoly fourY = MatPoly::scalar({0, 4}).to_diag(3);
  const MatPoly C1_even = MatPoly::constant(Matrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}) +
                          MatPoly::monomial(Matrix{{-4, 0, 8}, {0, -4, 8}, {0, 0, -4}}, 1);

  // blockwise published odd side: 4y d^2 I + 2 d (2y(2B - I) + I) + A_0
  const DiffOp printedE6(3, {{2, fourY}, {1, C1_even}, {0, MatPoly::constant(A0)}});
  VerifyReport rp = eigen_check(U6, printedE6, 6);
  c.sub("published blockwise odd-side operator fails eigen on the odd pushforward "
        "(discrepancy reproduced)",
        !rp.overall());
  c.info("first failing record", first_failure(rp));
  VerifyReport ra = eigen_check(U6, transform_odd(D6), 6);
  c.sub("algorithmic transform_odd(D) passes eigen on the odd pushforward", ra.overall(),
        first_failure(ra));
  c.sub("the published odd-side operator coincides with the even-side transform",
        printedE6 == transform_even(D6));

  // blockwise published even side carries the constant first order 2(4B - I)
  const DiffOp printedD6(
      3, {{2, fourY},
          {1, MatPoly::constant(Matrix{{-2, 0, 8}, {0, -2, 8}, {0, 0, -2}})},
          {0, MatPoly::constant(A0)}});
  VerifyReport rd = eigen_check(V6, printedD6, 6);
  c.sub("published blockwise even-side operator (constant first order) fails eigen on the "
        "even pushforward (discrepancy reproduced)",
        !rd.overall());

  // the 3x3 instance prints the constant 4I as its transformed second order
  const DiffOp literal4(3, {{2, MatPoly::constant(Matrix{{4, 0, 0}, {0, 4, 0}, {0, 0, 4}})},
                            {1, C1_even},
                            {0, MatPoly::constant(A0)}});
  VerifyReport rl = eigen_check(V6, literal4, 4);
  c.sub("literal constant-4I second order fails eigen on the even pushforward "
        "(typo reproduced)",
        !rl.overall());

  const DiffOp Et = transform_odd(ex2.darboux->V);
  const MatPoly computed32 = entry_poly(Et.coeff(1), 2, 1);
  c.sub("published odd-side intertwiner entry (3,2) = 16y - 12 is twice the computed 8y - 6 "
        "(typo reproduced)",
        computed32 == MatPoly::scalar({-6, 8}) &&
            MatPoly::scalar({-12, 16}) == Rational(2) * computed32);
  return c.flush(8, "published-formula discrepancies reproduced and recorded");
}

// ---- criterion 9: independent construction routes agree ----------------------

bool criterion9() {
  Criterion c;
  for (const char* fam : {"dg2004-2x2", "dg2005-3x3", "bp-3x3-ex2", "blocknil"}) {
    const CatalogEntry e = catalog_build(fam);
    const MonicSequence s1 = monic_op(e.weight, 6);
    const MonicSequence s2 = gs_oracle(e.weight, 6);
    const bool same = s1.polys == s2.polys && s1.norms == s2.norms;
    const bool spd = !norms_spd_failure(s1).has_value();
    bool rec = true;
    try {
      recurrence_coeffs(s1);
    } catch (const ConsistencyError&) {
      rec = false;
    }
    c.sub(std::string(fam) + ": block solve agrees with Gram-Schmidt, norms SPD, "
                             "recurrence residues vanish",
          same && spd && rec);
  }
  return c.flush(9, "independent construction routes agree (n <= 6)");
}

// ---- criterion 10: the nilpotent-chain family at every size ------------------

bool criterion10() {
  Criterion c;
  for (const std::vector<Rational>& blocks :
       std::vector<std::vector<Rational>>{{1, 1}, {2, 1}, {3, 1}}) {
    const CatalogEntry e = catalog_build("blocknil", {{"blocks", blocks}});
    const DiffOp& D = e.operators.front();
    const std::string tag = "N = " + std::to_string(e.weight.size());
    VerifyReport rs = symmetry_check(e.weight, D, 8);
    VerifyReport re = eigen_check(e.weight, D, 6);
    VerifyReport rt = eigen_check(pushforward(e.weight, Parity::even), transform_even(D), 6);
    c.sub(tag + ": D symmetric (deg <= 8), eigen (n <= 6), even transform eigen (n <= 6)",
          rs.overall() && re.overall() && rt.overall(),
          first_failure(rs) + first_failure(re) + first_failure(rt));
  }
  return c.flush(10, "nilpotent-chain weights behave uniformly in every size");
}

}  // namespace

int main() {
  const std::vector<std::function<bool()>> steps = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10};
  int failed = 0;
  try {
    for (const auto& step : steps)
      if (!step()) ++failed;
  } catch (const std::exception& e) {
    std::cerr << "acceptance aborted: " << e.what() << "\n";
    return 3;
  }
  if (failed == 0)
    std::cout << "acceptance: all 10 criteria pass\n";
  else
    std::cout << "acceptance: " << (10 - failed) << "/10 criteria pass\n";
  return failed;
}
