#include "threelie/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "threelie/cybe.hpp"
#include "threelie/json_io.hpp"

namespace threelie::cli {

namespace {

using json_io::Json;
using json_io::to_json;

struct Options {
  std::string input;
  std::optional<std::string> r;
  bool skew = false;
  std::optional<std::string> delta;
  std::optional<std::string> params;
  std::string format = "json";
};

struct Result {
  Json payload;
  int status = kOk;
};

Json parse_json_argument(const std::string& text, const char* what) {
  std::string source = text;
  std::error_code ec;
  if (std::filesystem::is_regular_file(text, ec)) {
    std::ifstream in(text);
    std::stringstream ss;
    ss << in.rdbuf();
    source = ss.str();
  }
  try {
    return Json::parse(source);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("cannot parse ") + what + " as JSON: " + e.what());
  }
}

std::map<std::string, Rational> bindings(const Options& o) {
  return o.params ? json_io::bindings_from_json(parse_json_argument(*o.params, "--params"))
                  : std::map<std::string, Rational>{};
}

bool is_catalog_id(const std::string& s) {
  const auto& ids = catalog_ids();
  return std::find(ids.begin(), ids.end(), s) != ids.end();
}

ThreeLieAlgebra load_algebra(const Options& o) {
  if (o.input.empty()) throw std::invalid_argument("an algebra (catalog id, file or inline JSON) is required");
  ThreeLieAlgebra a = is_catalog_id(o.input) ? catalog_entry(o.input).algebra
                                              : json_io::algebra_from_json(parse_json_argument(o.input, "algebra"));
  return o.params ? a.substitute(bindings(o)) : a;
}

RMatrix load_r(const Options& o, int dim) {
  if (!o.r) return RMatrix::symbolic_skew(dim);
  RMatrix r = json_io::rmatrix_from_json(parse_json_argument(*o.r, "--r"), dim, o.skew);
  return o.params ? r.substitute(bindings(o)) : r;
}

Coproduct load_delta(const Options& o, int dim) {
  Coproduct d(dim);
  if (o.delta) {
    d = json_io::coproduct_from_json(parse_json_argument(*o.delta, "--delta"));
  } else if (is_catalog_id(o.input)) {
    d = delta_family(o.input).coproduct;
  } else {
    throw std::invalid_argument("--delta is required for algebras outside the catalog");
  }
  if (d.dim() != dim) throw std::invalid_argument("coproduct and algebra dimensions differ");
  if (!d.is_alternating()) throw std::invalid_argument("coproduct components must be fully antisymmetric");
  return o.params ? d.substitute(bindings(o)) : d;
}

Json parameters_json(const Options& o) {
  Json p = Json::object();
  for (const auto& [k, v] : bindings(o)) p[k] = to_string(v);
  return p;
}

// ------------------------------------------------------------------- verbs

Result cmd_catalog(const Options& o) {
  if (!o.input.empty()) return {to_json(catalog_entry(o.input))};
  Json all = Json::array();
  for (const auto& id : catalog_ids()) all.push_back(to_json(catalog_entry(id)));
  return {Json{{"entries", all}}};
}

Result cmd_check_fi(const Options& o) {
  const FiReport report = check_fundamental_identity(load_algebra(o));
  return {to_json(report), report.passed() ? kOk : kVerificationFailed};
}

Result cmd_cybe_residual(const Options& o) {
  const ThreeLieAlgebra a = load_algebra(o);
  const RMatrix r = load_r(o, a.dim());
  Json out;
  if (!o.r) {
    const Tensor residual = cybe_residual_skew(a, r);
    out = {{"r", "symbolic skew"}, {"residual", to_json(residual)}, {"zero", residual.is_zero()}};
  } else {
    const Tensor residual = cybe_residual_naive(a, r);
    out = {{"r", to_json(r)}, {"residual", to_json(residual)}, {"zero", residual.is_zero()}};
    if (r.is_skew()) out["agrees_with_skew_formula"] = residual == cybe_residual_skew(a, r);
  }
  return {out};
}

Result cmd_cybe_conditions(const Options& o) {
  Json gens = Json::array();
  for (const auto& g : cybe_conditions(load_algebra(o))) gens.push_back(to_json(g));
  return {Json{{"generators", gens}}};
}

Result cmd_induce_delta(const Options& o) {
  const ThreeLieAlgebra a = load_algebra(o);
  const RMatrix r = load_r(o, a.dim());
  const InducedComponents c = induced_coproduct_components(a, r);
  Json out = {{"delta1", to_json(c.delta1)},
              {"delta2", to_json(c.delta2)},
              {"delta3", to_json(c.delta3)},
              {"delta", to_json(c.sum())}};
  if (r.is_skew()) out["agrees_with_wedge_formula"] = c.sum() == induced_coproduct_wedge(a, r);
  return {out};
}

Result cmd_check_local_cocycle(const Options& o) {
  const ThreeLieAlgebra a = load_algebra(o);
  const RMatrix r = load_r(o, a.dim());
  const InducedComponents c = induced_coproduct_components(a, r);
  const LocalCocycleReport report = check_local_cocycle_bialgebra(a, c.delta1, c.delta2, c.delta3);
  return {to_json(report), report.passed() ? kOk : kVerificationFailed};
}

Result cmd_delta_families(const Options& o) {
  if (!is_catalog_id(o.input)) throw std::invalid_argument("delta-families needs a catalog id");
  const FamilyCheck check = solve_delta_families(o.input);
  const ThreeLieAlgebra& a = catalog_entry(o.input).algebra;
  Json out = to_json(check.family);
  out["null_space_dimension"] = check.null_space_dimension;
  out["family_rank"] = check.family_rank;
  out["family_in_null_space"] = check.family_in_null_space;
  out["complete"] = check.complete();
  out["surviving_parameter_dimension"] = surviving_parameter_dimension(a, check.family);
  out["eq27"] = to_json(constraint_eq27(a, check.family.coproduct));
  return {out, check.complete() ? kOk : kVerificationFailed};
}

Result cmd_check_double(const Options& o) {
  const ThreeLieAlgebra a = load_algebra(o);
  const Coproduct d = load_delta(o, a.dim());
  const ConstraintReport r26 = constraint_eq26(a, d);
  const ConstraintReport r27 = constraint_eq27(a, d);
  const FiReport dual_fi = check_fundamental_identity(dual_algebra(d));
  const bool passed = r26.passed() && r27.passed() && dual_fi.passed();
  Json out = {{"passed", passed},
              {"eq26", to_json(r26)},
              {"eq27", to_json(r27)},
              {"dual_fundamental_identity", to_json(dual_fi)}};
  return {out, passed ? kOk : kVerificationFailed};
}

DoubleAlgebra double_for(const Options& o, bool checked) {
  const ThreeLieAlgebra a = load_algebra(o);
  const Coproduct d = load_delta(o, a.dim());
  const ThreeLieAlgebra dual = dual_algebra(d);
  DoubleAlgebra result = checked ? build_double(a, dual) : assemble_double(a, dual);
  if (is_catalog_id(o.input)) result.base_id = o.input;
  if (!o.delta && is_catalog_id(o.input)) result.parameters = delta_family(o.input).parameters;
  return result;
}

Result cmd_build_double(const Options& o) {
  const ThreeLieAlgebra a = load_algebra(o);
  const Coproduct d = load_delta(o, a.dim());
  const FiReport dual_fi = check_fundamental_identity(dual_algebra(d));
  if (!dual_fi.passed()) {
    return {Json{{"error", "dual bracket violates the Fundamental Identity"}, {"dual_fundamental_identity", to_json(dual_fi)}},
            kVerificationFailed};
  }
  Json out = to_json(double_for(o, true));
  out["bindings"] = parameters_json(o);
  return {out};
}

Result cmd_check_manin(const Options& o) {
  std::optional<DoubleAlgebra> d;
  if (!is_catalog_id(o.input)) {
    const Json j = parse_json_argument(o.input, "input");
    if (j.is_object() && j.contains("gram")) {
      d = json_io::double_from_json(j);
      if (o.params) d->algebra = d->algebra.substitute(bindings(o));
    }
  }
  if (!d) d = double_for(o, false);
  const ManinReport report = check_manin_triple(*d);
  return {to_json(report), report.passed() ? kOk : kVerificationFailed};
}

// --------------------------------------------------------------- rendering

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    if (j.empty()) out << prefix << ": {}\n";
    for (const auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& v) { return v.is_primitive(); });
    if (flat) {
      out << prefix << ": [";
      for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      out << "]\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for 3-Lie algebras, r-matrices and Manin triples", "threelie"};
  app.require_subcommand(1);
  Options o;

  struct Verb {
    const char* name;
    const char* help;
    std::function<Result(const Options&)> run;
    bool input_required;
  };
  const std::vector<Verb> verbs = {
      {"catalog", "List the built-in algebras, or show one", cmd_catalog, false},
      {"check-fi", "Check the Fundamental Identity", cmd_check_fi, true},
      {"cybe-residual", "Evaluate [[r,r,r]]", cmd_cybe_residual, true},
      {"cybe-conditions", "Conditions on a skew r for [[r,r,r]] = 0", cmd_cybe_conditions, true},
      {"induce-delta", "Coproduct induced by r", cmd_induce_delta, true},
      {"check-local-cocycle", "Check the local cocycle bialgebra axioms for the coproduct induced by r",
       cmd_check_local_cocycle, true},
      {"delta-families", "Classified coproduct family and its null-space check", cmd_delta_families, true},
      {"check-double", "Check the double construction constraints", cmd_check_double, true},
      {"build-double", "Build the bracket on A + A*", cmd_build_double, true},
      {"check-manin", "Check the Manin triple axioms on A + A*", cmd_check_manin, true},
  };

  std::vector<std::pair<CLI::App*, const Verb*>> subs;
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    auto* opt = sub->add_option("input", o.input, "Catalog id, JSON file or inline JSON");
    if (v.input_required) opt->required();
    sub->add_option("--r", o.r, "r-matrix entries as JSON, e.g. {\"a_2_3\":\"1\"}");
    sub->add_flag("--skew", o.skew, "Entries are given for i<j only; a^{ji} = -a^{ij}");
    sub->add_option("--delta", o.delta, "Coproduct as JSON");
    sub->add_option("--params", o.params, "Parameter values as JSON, e.g. {\"k\":\"1\"}");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    subs.emplace_back(sub, &v);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  for (const auto& [sub, verb] : subs) {
    if (!sub->parsed()) continue;
    try {
      Result result = verb->run(o);
      if (o.format == "text") {
        render_text(result.payload, "", out);
      } else {
        out << result.payload.dump(2) << "\n";
      }
      return result.status;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    }
  }
  err << "error: no command given\n";
  return kInputError;
}

}  // namespace threelie::cli
