#pragma once

#include <json.hpp>

#include <string>

#include "mvopq/darboux.hpp"
#include "mvopq/diffop.hpp"
#include "mvopq/matpoly.hpp"
#include "mvopq/report.hpp"
#include "mvopq/weights.hpp"

namespace mvopq {

// Schemas (bit-exact round-trip, rationals as canonical "p/q" strings):
//   MatPoly:    {"size": N, "low_degree": d, "coeffs": [[[str]]]}
//   WeightSpec: {"base": "hermite" | {"laguerre": {"alpha": str}}, "Z": MatPoly}
//   DiffOp:     {"size": N, "terms": [{"order": j, "coeff": MatPoly}]}
//   DarbouxCase:{"id": str, "source": WeightSpec, "target": WeightSpec,
//                "intertwiner": DiffOp, "cofactor"?: DiffOp}
//   VerifyReport: {"case": str, "horizon": {...}, "records": [...], "overall": str}

nlohmann::json to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MatPoly& p);
MatPoly matpoly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const WeightSpec& w);
WeightSpec weight_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DiffOp& d);
DiffOp diffop_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DarbouxCase& c);
DarbouxCase darboux_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerifyReport& r);
VerifyReport report_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace mvopq
