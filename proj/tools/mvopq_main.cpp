// mvopq: exact construction and verification of matrix-valued orthogonal
// polynomials related by the substitution y = x^2.
//
// Subcommands:
//   catalog        list built-in weight families
//   ops            monic orthogonal polynomials of a weight
//   recurrence     three-term recurrence coefficients
//   split          pushforward weights V, U and their sequences L_n, F_n
//   transform-op   rewrite an operator in the variable y = x^2
//   check          run a named verification and report pass/fail
//   export         write a weight / operator / case to a JSON file
//
// Exit codes: 0 success or non-verifying command, 1 verification failure,
// 2 usage or input error.  MVOPQ_MAX_DEGREE caps the -n/--deg horizons.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mvopq/catalog.hpp"
#include "mvopq/darboux.hpp"
#include "mvopq/diffop.hpp"
#include "mvopq/errors.hpp"
#include "mvopq/json_io.hpp"
#include "mvopq/orthopoly.hpp"
#include "mvopq/quadmap.hpp"
#include "mvopq/weights.hpp"

namespace {

using nlohmann::json;

int horizon_cap() {
  const char* env = std::getenv("MVOPQ_MAX_DEGREE");
  if (env == nullptr || *env == '\0') return -1;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw mvopq::ParseError("MVOPQ_MAX_DEGREE must be an integer");
  }
}

int capped(int requested) {
  const int cap = horizon_cap();
  if (cap >= 0 && requested > cap) return cap;
  return requested;
}

mvopq::ParamMap parse_params(const std::vector<std::string>& raw) {
  mvopq::ParamMap params;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw mvopq::ParseError("--param expects key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    std::vector<mvopq::Rational> values;
    std::string rest = kv.substr(eq + 1);
    size_t pos = 0;
    while (true) {
      const auto comma = rest.find(',', pos);
      const std::string piece =
          comma == std::string::npos ? rest.substr(pos) : rest.substr(pos, comma - pos);
      values.push_back(mvopq::Rational::from_string(piece));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    params[key] = std::move(values);
  }
  return params;
}

// "catalog:ID" or "file:PATH"
struct SourceRef {
  bool from_catalog;
  std::string rest;
};

SourceRef parse_ref(const std::string& spec, const std::string& flag) {
  if (spec.rfind("catalog:", 0) == 0) return {true, spec.substr(8)};
  if (spec.rfind("file:", 0) == 0) return {false, spec.substr(5)};
  throw mvopq::ParseError(flag + " expects catalog:ID or file:PATH, got '" + spec + "'");
}

mvopq::WeightSpec resolve_weight(const std::string& spec, const mvopq::ParamMap& params) {
  const SourceRef ref = parse_ref(spec, "--weight");
  if (ref.from_catalog) return mvopq::catalog_build(ref.rest, params).weight;
  return mvopq::weight_from_json(mvopq::load_json_file(ref.rest));
}

mvopq::DiffOp resolve_op(const std::string& op_spec, const std::string& weight_spec,
                         const mvopq::ParamMap& params) {
  std::string spec = op_spec;
  if (spec.empty()) {
    // fall back to the distinguished operator of a catalog weight
    if (weight_spec.rfind("catalog:", 0) != 0)
      throw mvopq::ParseError("--op is required unless --weight names a catalog entry");
    spec = weight_spec;
  }
  const SourceRef ref = parse_ref(spec, "--op");
  if (ref.from_catalog) {
    const auto entry = mvopq::catalog_build(ref.rest, params);
    if (entry.operators.empty())
      throw mvopq::ParseError("catalog entry '" + ref.rest + "' carries no operator");
    return entry.operators.front();
  }
  return mvopq::diffop_from_json(mvopq::load_json_file(ref.rest));
}

mvopq::DarbouxCase resolve_case(const std::string& spec, const mvopq::ParamMap& params) {
  const SourceRef ref = parse_ref(spec, "--case");
  if (ref.from_catalog) {
    auto entry = mvopq::catalog_build(ref.rest, params);
    if (!entry.darboux)
      throw mvopq::ParseError("catalog entry '" + ref.rest + "' carries no Darboux pair");
    return *std::move(entry.darboux);
  }
  return mvopq::darboux_from_json(mvopq::load_json_file(ref.rest));
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string weight_plain(const mvopq::WeightSpec& w, const std::string& var) {
  std::string base;
  if (w.base().kind == mvopq::BaseKind::hermite)
    base = "exp(-" + var + "^2)";
  else
    base = var + "^(" + w.base().alpha.to_string() + ") exp(-" + var + ")";
  return base + " * " + w.Z().to_string(var);
}

void csv_matrix(std::ostream& out, const mvopq::Matrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out << "," << m.at(i, j).to_string();
}

int cmd_catalog(const std::string& format) {
  const auto entries = mvopq::catalog_list();
  if (format == "plain") {
    for (const auto& e : entries) std::cout << e.id << "  (" << e.params << ")\n";
    return 0;
  }
  json out = json::array();
  for (const auto& e : entries) out.push_back(json{{"id", e.id}, {"params", e.params}});
  emit(out);
  return 0;
}

int cmd_ops(const mvopq::WeightSpec& W, int n_max, const std::string& format) {
  const auto seq = mvopq::monic_op(W, n_max);
  if (format == "csv") {
    for (int n = 0; n <= seq.n_max(); ++n) {
      std::cout << n;
      for (int k = 0; k <= n; ++k) csv_matrix(std::cout, seq.polys[n].coeff(k));
      std::cout << "\n";
    }
    return 0;
  }
  if (format == "plain") {
    for (int n = 0; n <= seq.n_max(); ++n)
      std::cout << "P_" << n << " = " << seq.polys[n].to_string() << "\n";
    return 0;
  }
  json polys = json::array();
  json norms = json::array();
  for (int n = 0; n <= seq.n_max(); ++n) {
    polys.push_back(mvopq::to_json(seq.polys[n]));
    norms.push_back(mvopq::to_json(seq.norms[n]));
  }
  emit(json{{"weight", mvopq::to_json(W)},
            {"n_max", seq.n_max()},
            {"polys", std::move(polys)},
            {"norms", std::move(norms)}});
  return 0;
}

int cmd_recurrence(const mvopq::WeightSpec& W, int n_max, const std::string& format) {
  const auto seq = mvopq::monic_op(W, n_max);
  const auto rec = mvopq::recurrence_coeffs(seq);
  const int rows = static_cast<int>(rec.B.size());
  if (format == "csv") {
    for (int n = 0; n < rows; ++n) {
      std::cout << n;
      csv_matrix(std::cout, rec.B[n]);
      csv_matrix(std::cout, rec.A[n]);
      std::cout << "\n";
    }
    return 0;
  }
  if (format == "plain") {
    for (int n = 0; n < rows; ++n)
      std::cout << "B_" << n << " = " << rec.B[n].to_string() << "  A_" << n << " = "
                << rec.A[n].to_string() << "\n";
    return 0;
  }
  json B = json::array();
  json A = json::array();
  for (int n = 0; n < rows; ++n) {
    B.push_back(mvopq::to_json(rec.B[n]));
    A.push_back(mvopq::to_json(rec.A[n]));
  }
  emit(json{{"n_max", rows}, {"B", std::move(B)}, {"A", std::move(A)}});
  return 0;
}

int cmd_split(const mvopq::WeightSpec& W, int n_max, const std::string& format) {
  const auto V = mvopq::pushforward(W, mvopq::Parity::even);
  const auto U = mvopq::pushforward(W, mvopq::Parity::odd);
  const auto L = mvopq::monic_op(V, n_max);
  const auto F = mvopq::monic_op(U, n_max);
  if (format == "plain") {
    std::cout << "V = " << weight_plain(V, "y") << "\n";
    std::cout << "U = " << weight_plain(U, "y") << "\n";
    for (int n = 0; n <= L.n_max(); ++n)
      std::cout << "L_" << n << " = " << L.polys[n].to_string("y") << "\n";
    for (int n = 0; n <= F.n_max(); ++n)
      std::cout << "F_" << n << " = " << F.polys[n].to_string("y") << "\n";
    return 0;
  }
  json Lj = json::array();
  json Fj = json::array();
  for (int n = 0; n <= L.n_max(); ++n) Lj.push_back(mvopq::to_json(L.polys[n]));
  for (int n = 0; n <= F.n_max(); ++n) Fj.push_back(mvopq::to_json(F.polys[n]));
  emit(json{{"V", mvopq::to_json(V)},
            {"U", mvopq::to_json(U)},
            {"L", std::move(Lj)},
            {"F", std::move(Fj)}});
  return 0;
}

int cmd_transform(const mvopq::DiffOp& D, const std::string& mode, const std::string& format) {
  const mvopq::DiffOp out =
      mode == "even" ? mvopq::transform_even(D) : mvopq::transform_odd(D);
  if (format == "plain") {
    std::cout << out.to_string("y") << "\n";
    return 0;
  }
  emit(mvopq::to_json(out));
  return 0;
}

int emit_report(mvopq::VerifyReport report, const std::string& format) {
  if (format == "plain")
    std::cout << report.to_plain();
  else
    emit(mvopq::to_json(report));
  return report.overall() ? 0 : 1;
}

int cmd_check_darboux(const mvopq::DarbouxCase& c, int n_max, const std::string& format) {
  mvopq::VerifyReport report = mvopq::intertwine_check(c, n_max);
  if (c.N) report.merge(mvopq::factorization_check(c, n_max));
  if (c.source.base().kind == mvopq::BaseKind::hermite && c.source.Z().is_even())
    report.merge(mvopq::darboux_quadratic_check(c, n_max / 2));
  // degree preservation can genuinely fail at isolated degrees; informational
  auto dp = mvopq::degree_preserving_check(c.V, n_max);
  for (auto& r : dp.records) r.advisory = true;
  report.merge(dp);
  report.case_id = c.id;
  report.n_max = n_max;
  return emit_report(std::move(report), format);
}

int run(int argc, char** argv) {
  CLI::App app{"Exact matrix-valued orthogonal polynomials under y = x^2"};
  app.require_subcommand(1);

  std::string weight_spec;
  std::string op_spec;
  std::string case_spec;
  std::vector<std::string> raw_params;
  std::string format = "json";
  std::string mode;
  std::string what;
  std::string out_path;
  int n_max = 8;
  int deg_max = 10;

  const auto add_weight = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--weight", weight_spec, "catalog:ID or file:PATH");
    if (required) opt->required();
    sub->add_option("--param", raw_params, "catalog parameter key=p/q (repeatable)");
  };
  const auto add_format = [&](CLI::App* sub, const std::vector<std::string>& allowed) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember(allowed))
        ->capture_default_str();
  };
  const auto add_n = [&](CLI::App* sub) {
    sub->add_option("-n,--n", n_max, "degree horizon")->capture_default_str();
  };

  auto* cat = app.add_subcommand("catalog", "List the built-in weight families");
  add_format(cat, {"json", "plain"});

  auto* ops = app.add_subcommand("ops", "Monic orthogonal polynomials of a weight");
  add_weight(ops, true);
  add_n(ops);
  add_format(ops, {"json", "csv", "plain"});

  auto* rec = app.add_subcommand("recurrence", "Three-term recurrence coefficients");
  add_weight(rec, true);
  add_n(rec);
  add_format(rec, {"json", "csv", "plain"});

  auto* split = app.add_subcommand("split", "Pushforward weights V, U and sequences L_n, F_n");
  add_weight(split, true);
  add_n(split);
  add_format(split, {"json", "plain"});

  auto* top = app.add_subcommand("transform-op", "Rewrite an operator in y = x^2");
  top->add_option("--op", op_spec, "catalog:ID or file:PATH")->required();
  top->add_option("--param", raw_params, "catalog parameter key=p/q (repeatable)");
  top->add_option("--mode", mode, "even or odd side")
      ->check(CLI::IsMember({"even", "odd"}))
      ->required();
  add_format(top, {"json", "plain"});

  auto* check = app.add_subcommand("check", "Run a verification and report pass/fail");
  check
      ->add_option("what", what,
                   "parity | symmetry | eigen | correspondence | spectral | darboux")
      ->check(CLI::IsMember(
          {"parity", "symmetry", "eigen", "correspondence", "spectral", "darboux"}))
      ->required();
  add_weight(check, false);
  check->add_option("--op", op_spec, "catalog:ID or file:PATH");
  check->add_option("--case", case_spec, "catalog:ID or file:PATH");
  add_n(check);
  check->add_option("--deg", deg_max, "degree horizon for symmetry")->capture_default_str();
  add_format(check, {"json", "plain"});

  auto* exp = app.add_subcommand("export", "Write a weight, operator, or case to JSON");
  add_weight(exp, false);
  exp->add_option("--op", op_spec, "catalog:ID or file:PATH");
  exp->add_option("--case", case_spec, "catalog:ID or file:PATH");
  exp->add_option("--out", out_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto params = parse_params(raw_params);
  n_max = capped(n_max);
  deg_max = capped(deg_max);

  if (cat->parsed()) return cmd_catalog(format);
  if (ops->parsed()) return cmd_ops(resolve_weight(weight_spec, params), n_max, format);
  if (rec->parsed()) return cmd_recurrence(resolve_weight(weight_spec, params), n_max, format);
  if (split->parsed()) return cmd_split(resolve_weight(weight_spec, params), n_max, format);
  if (top->parsed()) return cmd_transform(resolve_op(op_spec, "", params), mode, format);

  if (check->parsed()) {
    if (what == "darboux") {
      if (case_spec.empty()) throw mvopq::ParseError("check darboux needs --case");
      return cmd_check_darboux(resolve_case(case_spec, params), n_max, format);
    }
    if (weight_spec.empty()) throw mvopq::ParseError("check " + what + " needs --weight");
    const auto W = resolve_weight(weight_spec, params);
    mvopq::VerifyReport report;
    if (what == "parity") {
      report = mvopq::parity_check(W, n_max);
    } else if (what == "correspondence") {
      report = mvopq::correspondence_check(W, n_max);
    } else {
      const auto D = resolve_op(op_spec, weight_spec, params);
      if (what == "symmetry")
        report = mvopq::symmetry_check(W, D, deg_max);
      else if (what == "eigen")
        report = mvopq::eigen_check(W, D, n_max);
      else
        report = mvopq::spectral_match_check(W, D, n_max);
    }
    if (report.case_id.empty()) report.case_id = weight_spec;
    if (report.n_max < 0 && what != "symmetry") report.n_max = n_max;
    if (what == "symmetry") report.deg_max = deg_max;
    return emit_report(std::move(report), format);
  }

  if (exp->parsed()) {
    const int named = (weight_spec.empty() ? 0 : 1) + (op_spec.empty() ? 0 : 1) +
                      (case_spec.empty() ? 0 : 1);
    if (named != 1)
      throw mvopq::ParseError("export needs exactly one of --weight, --op, --case");
    json j;
    if (!weight_spec.empty())
      j = mvopq::to_json(resolve_weight(weight_spec, params));
    else if (!op_spec.empty())
      j = mvopq::to_json(resolve_op(op_spec, "", params));
    else
      j = mvopq::to_json(resolve_case(case_spec, params));
    mvopq::save_json_file(out_path, j);
    emit(json{{"written", out_path}});
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
