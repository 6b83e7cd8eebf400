#pragma once

#include <vector>

#include "mvopq/matpoly.hpp"

namespace mvopq {

// Monic Hermite polynomials h_0..h_{n_max} (1x1), from the recurrence
// h_{n+1} = x h_n - (n/2) h_{n-1}.
std::vector<MatPoly> hermite_monic(int n_max);

// Monic Laguerre polynomials for parameter alpha, from
// l_{n+1} = (y - (2n + alpha + 1)) l_n - n (n + alpha) l_{n-1}.
std::vector<MatPoly> laguerre_monic(const Rational& alpha, int n_max);

}  // namespace mvopq
