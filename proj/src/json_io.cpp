#include "threelie/json_io.hpp"

#include <regex>
#include <set>
#include <stdexcept>

namespace threelie::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("invalid JSON input: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) bad("expected an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) bad("expected an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

template <typename T>
Json list(const std::vector<T>& items) {
  Json out = Json::array();
  for (const auto& x : items) out.push_back(x);
  return out;
}

}  // namespace

// ------------------------------------------------------------------ scalars

Json to_json(const Scalar& s) { return to_string(s); }

Json scalar_terms_json(const Scalar& s) {
  Json out = Json::array();
  for (const auto& [m, c] : s.terms()) {
    Json mono = Json::array();
    for (const auto& [name, exp] : m.factors()) mono.push_back({name, exp});
    out.push_back({{"coeff", to_string(c)}, {"monomial", mono}});
  }
  return out;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(Rational(j.get<long>()));
  if (j.is_array()) {
    std::vector<std::pair<Monomial, Rational>> terms;
    for (const auto& t : j) {
      const Json& coeff = field(t, "coeff");
      if (!coeff.is_string()) bad("term coefficient must be a string");
      std::vector<Monomial::Factor> factors;
      for (const auto& f : field(t, "monomial")) {
        if (!f.is_array() || f.size() != 2 || !f[0].is_string() || !f[1].is_number_unsigned()) {
          bad("monomial factors must be [name, exponent]");
        }
        factors.emplace_back(f[0].get<std::string>(), f[1].get<unsigned>());
      }
      terms.emplace_back(Monomial::from_factors(std::move(factors)), parse_rational(coeff.get<std::string>()));
    }
    return Scalar::from_terms(terms);
  }
  bad("a scalar must be a string, an integer or a term list");
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of scalars");
  Vector v;
  for (const auto& s : j) v.push_back(scalar_from_json(s));
  return v;
}

// ------------------------------------------------------------------ tensors

Json to_json(const Tensor& t) {
  Json terms = Json::array();
  for (const auto& [idx, c] : t.terms()) terms.push_back({{"idx", idx}, {"coeff", to_json(c)}});
  return {{"arity", t.arity()}, {"dim", t.dim()}, {"terms", terms}};
}

Tensor tensor_from_json(const Json& j) {
  Tensor t(int_field(j, "arity"), int_field(j, "dim"));
  for (const auto& term : field(j, "terms")) t.add(int_list(field(term, "idx")), scalar_from_json(field(term, "coeff")));
  return t;
}

Json to_json(const ThreeLieAlgebra& a) {
  Json brackets = Json::array();
  for (const auto& [ijk, value] : a.brackets()) {
    brackets.push_back({{"ijk", ijk}, {"value", to_json(value)}});
  }
  return {{"dim", a.dim()}, {"brackets", brackets}};
}

ThreeLieAlgebra algebra_from_json(const Json& j) {
  const int dim = int_field(j, "dim");
  std::map<Triple, Vector> brackets;
  std::set<Triple> seen;
  for (const auto& b : field(j, "brackets")) {
    const auto idx = int_list(field(b, "ijk"));
    if (idx.size() != 3) bad("bracket key must have three indices");
    Triple key{idx[0], idx[1], idx[2]};
    auto [sign, canon] = canonical_triple(key);
    if (sign == 0) bad("bracket key with repeated index");
    if (!seen.insert(canon).second) bad("bracket specified twice");
    brackets.emplace(key, vector_from_json(field(b, "value")));
  }
  return ThreeLieAlgebra(dim, brackets);
}

Json to_json(const Coproduct& c) {
  Json components = Json::array();
  for (int i = 1; i <= c.dim(); ++i) components.push_back(to_json(c(i)));
  return {{"dim", c.dim()}, {"components", components}};
}

Coproduct coproduct_from_json(const Json& j) {
  const int dim = int_field(j, "dim");
  Coproduct c(dim);
  if (j.contains("components")) {
    const Json& comps = j.at("components");
    if (!comps.is_array() || comps.size() != static_cast<std::size_t>(dim)) bad("need one component per basis vector");
    for (int i = 1; i <= dim; ++i) {
      Tensor t = tensor_from_json(comps[static_cast<std::size_t>(i - 1)]);
      if (t.arity() != 3 || t.dim() != dim) bad("coproduct components must be 3-tensors of the same dimension");
      c(i) = std::move(t);
    }
  } else if (j.contains("wedges")) {
    for (const auto& w : j.at("wedges")) {
      const auto pqr = int_list(field(w, "pqr"));
      if (pqr.size() != 3) bad("wedge needs three indices");
      c(int_field(w, "i")) += scalar_from_json(field(w, "coeff")) * wedge_basis(dim, pqr);
    }
  } else {
    bad("coproduct needs 'components' or 'wedges'");
  }
  return c;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array of rows");
  Matrix m(j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols()) bad("matrix rows must have equal length");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

RMatrix rmatrix_from_json(const Json& j, int dim, bool skew) {
  if (!j.is_object()) bad("r-matrix must be an object of a_i_j entries");
  static const std::regex pattern("a_([0-9]+)_([0-9]+)");
  RMatrix r(dim);
  std::map<std::pair<int, int>, Scalar> upper;
  for (const auto& [key, value] : j.items()) {
    std::smatch m;
    if (!std::regex_match(key, m, pattern)) bad("r-matrix key '" + key + "' is not of the form a_i_j");
    const int i = std::stoi(m[1]);
    const int k = std::stoi(m[2]);
    if (i < 1 || k < 1 || i > dim || k > dim) bad("r-matrix key '" + key + "' out of range");
    Scalar s = scalar_from_json(value);
    if (skew) {
      if (i >= k) bad("with --skew only entries a_i_j with i<j are accepted, got '" + key + "'");
      upper.emplace(std::pair{i, k}, std::move(s));
    } else {
      r(i, k) = std::move(s);
    }
  }
  return skew ? RMatrix::skew_from_upper(dim, upper) : r;
}

Json to_json(const RMatrix& r) {
  Json out = Json::object();
  for (int i = 1; i <= r.dim(); ++i) {
    for (int j = 1; j <= r.dim(); ++j) {
      if (!r(i, j).is_zero()) out[rmatrix_parameter(i, j)] = to_json(r(i, j));
    }
  }
  return out;
}

std::map<std::string, Rational> bindings_from_json(const Json& j) {
  if (!j.is_object()) bad("parameters must be an object of name -> rational");
  std::map<std::string, Rational> out;
  for (const auto& [key, value] : j.items()) {
    if (value.is_string()) {
      out.emplace(key, parse_rational(value.get<std::string>()));
    } else if (value.is_number_integer()) {
      out.emplace(key, Rational(value.get<long>()));
    } else {
      bad("parameter '" + key + "' must be a rational string or an integer");
    }
  }
  return out;
}

// ------------------------------------------------------------------ reports

Json to_json(const FiReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"tuple", x.tuple}, {"defect", to_json(x.defect)}});
  return {{"passed", r.passed()}, {"violations", v}};
}

Json to_json(const RepresentationReport& r) {
  Json v = Json::array();
  for (const auto& d : r.defects) {
    v.push_back({{"condition", d.condition}, {"tuple", d.tuple}, {"defect", to_json(d.defect)}});
  }
  return {{"passed", r.passed()}, {"defects", v}};
}

Json to_json(const CocycleReport& r) {
  Json v = Json::array();
  for (const auto& d : r.defects) v.push_back({{"tuple", d.tuple}, {"defect", to_json(d.defect)}});
  return {{"passed", r.passed()}, {"defects", v}};
}

Json to_json(const LocalCocycleReport& r) {
  Json out = {{"passed", r.passed()},
              {"cocycle1", to_json(r.cocycle1)},
              {"cocycle2", to_json(r.cocycle2)},
              {"cocycle3", to_json(r.cocycle3)},
              {"alternating", r.alternating},
              {"failures", list(r.failures)}};
  out["dual_fundamental_identity"] = r.dual_fi ? to_json(*r.dual_fi) : Json();
  return out;
}

Json to_json(const ConstraintReport& r) {
  Json v = Json::array();
  for (const auto& d : r.defects) v.push_back({{"indices", d.indices}, {"defect", to_json(d.defect)}});
  return {{"passed", r.passed()}, {"defects", v}};
}

Json to_json(const ManinReport& r) {
  Json checks = Json::object();
  for (const auto& [name, ok] : r.checks()) checks[name] = ok;
  return {{"passed", r.passed()},
          {"checks", checks},
          {"fundamental_identity", to_json(r.fundamental_identity)},
          {"invariance_violations", r.invariance_violations},
          {"isotropy_violations", r.isotropy_violations},
          {"closure_violations", r.closure_violations},
          {"projection_violations", r.projection_violations}};
}

Json to_json(const CatalogEntry& e) {
  return {{"id", e.id},
          {"algebra", to_json(e.algebra)},
          {"parameters", list(e.parameters)},
          {"constraints", list(e.constraints)}};
}

Json to_json(const DeltaFamily& f) {
  return {{"catalog_id", f.catalog_id}, {"parameters", list(f.parameters)}, {"coproduct", to_json(f.coproduct)}};
}

Json to_json(const DoubleAlgebra& d) {
  return {{"base_id", d.base_id},
          {"base_dim", d.base_dim},
          {"parameters", list(d.parameters)},
          {"algebra", to_json(d.algebra)},
          {"gram", to_json(d.form.gram())}};
}

DoubleAlgebra double_from_json(const Json& j) {
  const int base_dim = int_field(j, "base_dim");
  ThreeLieAlgebra algebra = algebra_from_json(field(j, "algebra"));
  BilinearForm form(matrix_from_json(field(j, "gram")));
  if (algebra.dim() != 2 * base_dim || form.dim() != 2 * base_dim) bad("double algebra dimensions are inconsistent");
  DoubleAlgebra d{base_dim, std::move(algebra), std::move(form), {}, {}};
  if (j.contains("base_id")) d.base_id = j.at("base_id").get<std::string>();
  if (j.contains("parameters")) {
    for (const auto& p : j.at("parameters")) d.parameters.push_back(p.get<std::string>());
  }
  return d;
}

}  // namespace threelie::json_io
