#include "mvopq/classical.hpp"

namespace mvopq {

std::vector<MatPoly> hermite_monic(int n_max) {
  std::vector<MatPoly> h;
  h.reserve(n_max + 1);
  const MatPoly x = MatPoly::x_power(1, 1);
  if (n_max >= 0) h.push_back(MatPoly::identity(1));
  if (n_max >= 1) h.push_back(x);
  for (int n = 1; n < n_max; ++n) h.push_back(x * h[n] - Rational(n, 2) * h[n - 1]);
  return h;
}

std::vector<MatPoly> laguerre_monic(const Rational& alpha, int n_max) {
  std::vector<MatPoly> l;
  l.reserve(n_max + 1);
  const MatPoly y = MatPoly::x_power(1, 1);
  if (n_max >= 0) l.push_back(MatPoly::identity(1));
  if (n_max >= 1) l.push_back(y - MatPoly::scalar({alpha + 1}));
  for (int n = 1; n < n_max; ++n) {
    const MatPoly b = MatPoly::scalar({Rational(2 * n) + alpha + 1});
    l.push_back((y - b) * l[n] - (Rational(n) * (Rational(n) + alpha)) * l[n - 1]);
  }
  return l;
}

}  // namespace mvopq
