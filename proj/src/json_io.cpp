#include "mvopq/json_io.hpp"

#include <fstream>

#include "mvopq/errors.hpp"

using nlohmann::json;

namespace mvopq {

namespace {

Matrix sized_matrix_from_json(const json& j, int size) {
  if (!j.is_array() || static_cast<int>(j.size()) != size)
    throw ParseError("matrix: expected " + std::to_string(size) + " rows");
  Matrix m(size, size);
  for (int i = 0; i < size; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != size)
      throw ParseError("matrix: row " + std::to_string(i) + " has wrong length");
    for (int c = 0; c < size; ++c)
      m.at(i, c) = Rational::from_string(row[c].get<std::string>());
  }
  return m;
}

}  // namespace

json to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix: expected a nonempty array of rows");
  return sized_matrix_from_json(j, static_cast<int>(j.size()));
}

json to_json(const MatPoly& p) {
  json coeffs = json::array();
  if (!p.is_zero())
    for (int k = p.low_degree(); k <= p.degree(); ++k) coeffs.push_back(to_json(p.coeff(k)));
  return json{{"size", p.size()}, {"low_degree", p.low_degree()}, {"coeffs", std::move(coeffs)}};
}

MatPoly matpoly_from_json(const json& j) {
  try {
    const int size = j.at("size").get<int>();
    const int low = j.at("low_degree").get<int>();
    std::vector<Matrix> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(sized_matrix_from_json(c, size));
    return MatPoly(size, low, std::move(coeffs));
  } catch (const json::exception& e) {
    throw ParseError(std::string("matrix polynomial JSON: ") + e.what());
  }
}

json to_json(const WeightSpec& w) {
  json base;
  if (w.base().kind == BaseKind::hermite)
    base = "hermite";
  else
    base = json{{"laguerre", json{{"alpha", w.base().alpha.to_string()}}}};
  return json{{"base", std::move(base)}, {"Z", to_json(w.Z())}};
}

WeightSpec weight_from_json(const json& j) {
  try {
    const json& base = j.at("base");
    const MatPoly Z = matpoly_from_json(j.at("Z"));
    if (base.is_string() && base.get<std::string>() == "hermite") return WeightSpec::hermite(Z);
    if (base.is_object() && base.contains("laguerre"))
      return WeightSpec::laguerre(
          Rational::from_string(base.at("laguerre").at("alpha").get<std::string>()), Z);
    throw ParseError("weight JSON: unknown base");
  } catch (const json::exception& e) {
    throw ParseError(std::string("weight JSON: ") + e.what());
  }
}

json to_json(const DiffOp& d) {
  json terms = json::array();
  for (const auto& [order, c] : d.terms())
    terms.push_back(json{{"order", order}, {"coeff", to_json(c)}});
  return json{{"size", d.size()}, {"terms", std::move(terms)}};
}

DiffOp diffop_from_json(const json& j) {
  try {
    DiffOp d(j.at("size").get<int>());
    for (const auto& t : j.at("terms"))
      d.add_term(t.at("order").get<int>(), matpoly_from_json(t.at("coeff")));
    return d;
  } catch (const json::exception& e) {
    throw ParseError(std::string("operator JSON: ") + e.what());
  }
}

json to_json(const DarbouxCase& c) {
  json j{{"id", c.id},
         {"source", to_json(c.source)},
         {"target", to_json(c.target)},
         {"intertwiner", to_json(c.V)}};
  if (c.N) j["cofactor"] = to_json(*c.N);
  return j;
}

DarbouxCase darboux_from_json(const json& j) {
  try {
    DarbouxCase c{j.value("id", std::string("file-case")), weight_from_json(j.at("source")),
                  weight_from_json(j.at("target")), diffop_from_json(j.at("intertwiner")),
                  std::nullopt, nullptr, nullptr};
    if (j.contains("cofactor")) c.N = diffop_from_json(j.at("cofactor"));
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("case JSON: ") + e.what());
  }
}

json to_json(const VerifyReport& r) {
  json horizon = json::object();
  if (r.n_max >= 0) horizon["n_max"] = r.n_max;
  if (r.deg_max >= 0) horizon["deg_max"] = r.deg_max;
  json records = json::array();
  for (const auto& rec : r.records) {
    json one{{"name", rec.name}, {"verdict", rec.pass ? "pass" : "fail"}};
    if (rec.n >= 0) one["n"] = rec.n;
    if (rec.advisory) one["advisory"] = true;
    if (!rec.witness.empty()) one["witness"] = rec.witness;
    records.push_back(std::move(one));
  }
  return json{{"case", r.case_id},
              {"horizon", std::move(horizon)},
              {"records", std::move(records)},
              {"overall", r.overall() ? "pass" : "fail"}};
}

VerifyReport report_from_json(const json& j) {
  try {
    VerifyReport r;
    r.case_id = j.at("case").get<std::string>();
    const json& horizon = j.at("horizon");
    r.n_max = horizon.value("n_max", -1);
    r.deg_max = horizon.value("deg_max", -1);
    for (const auto& one : j.at("records")) {
      CheckRecord rec;
      rec.name = one.at("name").get<std::string>();
      rec.n = one.value("n", -1);
      rec.pass = one.at("verdict").get<std::string>() == "pass";
      rec.advisory = one.value("advisory", false);
      rec.witness = one.value("witness", std::string());
      r.records.push_back(std::move(rec));
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("parsing '" + path + "': " + e.what());
  }
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace mvopq
