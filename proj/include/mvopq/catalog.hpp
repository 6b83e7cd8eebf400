#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvopq/darboux.hpp"
#include "mvopq/diffop.hpp"
#include "mvopq/weights.hpp"

namespace mvopq {

using ParamMap = std::map<std::string, std::vector<Rational>>;

/// A named weight family instance with its distinguished symmetric
/// operator(s) and, where available, a Darboux pair.
struct CatalogEntry {
  std::string id;
  WeightSpec weight;
  std::vector<DiffOp> operators;
  std::optional<DarbouxCase> darboux;
};

struct CatalogInfo {
  std::string id;
  std::string params;  // human-readable parameter summary
};

std::vector<CatalogInfo> catalog_list();

// family in {dg2004-2x2, dg2005-3x3, bp-3x3-ex2, blocknil}; parameters:
//   dg2004-2x2:  a (default 1)
//   dg2005-3x3:  a, b (default 1)
//   bp-3x3-ex2:  a, b (default 1)
//   blocknil:    blocks = n_1,..,n_k; V1..V{k-1} row-major (defaults 1,1 / 1)
CatalogEntry catalog_build(const std::string& family, const ParamMap& params = {});

// Strictly upper block triangular nilpotent matrix with alternating-sign
// block products: block (i, j) = (-1)^(j-i+1) V_i V_{i+1} .. V_{j-1}.
Matrix nilpotent_from_blocks(const std::vector<int>& blocks, const std::vector<Matrix>& Vs);

// exp(B x^2) as the terminating series sum_m B^m x^(2m) / m!.
MatPoly exp_nilpotent(const Matrix& B);

// W = exp(-x^2) exp(B x^2) exp(B^T x^2).
WeightSpec hermite_type_weight(const Matrix& B);

// D = d^2 I + d 2x (2B - I) + A0.
DiffOp hermite_type_op(const Matrix& B, const Matrix& A0);

}  // namespace mvopq
