// Published tables transcribed verbatim, plus the small parsers that turn
// them into library values. Known misprints are kept verbatim here and
// corrected through explicit allowlists, never by editing the transcription.
#pragma once

#include <map>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include "threelie/algebra.hpp"
#include "threelie/cybe.hpp"
#include "threelie/scalar.hpp"
#include "threelie/tensor.hpp"

namespace reference {

using threelie::Scalar;
using threelie::Triple;
using threelie::Vector;

// ------------------------------------------------------------ bracket rows

/// "[e2,f1,f2] = -k1*e3 - k2*e4". Labels e1..en map to 1..n and f1..fn to
/// n+1..2n; with dual_only, f1..fn map to 1..n and e-labels are rejected.
struct Row {
  Triple args;
  Vector value;
};

inline int label_index(const std::string& label, int base_dim, bool dual_only) {
  const int i = std::stoi(label.substr(1));
  if (i < 1 || i > base_dim) throw std::invalid_argument("label out of range: " + label);
  if (label[0] == 'e') {
    if (dual_only) throw std::invalid_argument("e-label in a dual table: " + label);
    return i;
  }
  return dual_only ? i : base_dim + i;
}

inline Row parse_row(const std::string& text, int base_dim, bool dual_only = false) {
  static const std::regex shape(R"(\s*\[\s*([ef]\d)\s*,\s*([ef]\d)\s*,\s*([ef]\d)\s*\]\s*=\s*(.*))");
  static const std::regex term(R"(\s*([+-])?\s*((?:[A-Za-z][A-Za-z0-9_]*\*)*)([ef]\d)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, shape)) throw std::invalid_argument("bad row: " + text);
  const int dim = dual_only ? base_dim : 2 * base_dim;
  Row row{{label_index(m[1], base_dim, dual_only), label_index(m[2], base_dim, dual_only),
           label_index(m[3], base_dim, dual_only)},
          Vector(static_cast<std::size_t>(dim))};
  std::string rest = m[4];
  while (!rest.empty()) {
    std::smatch t;
    if (!std::regex_search(rest, t, term) || t.position(0) != 0) throw std::invalid_argument("bad term in: " + text);
    Scalar coeff(1);
    std::string factors = t[2];
    if (!factors.empty()) coeff = threelie::parse_scalar(factors.substr(0, factors.size() - 1));
    if (t[1] == "-") coeff = -coeff;
    row.value[static_cast<std::size_t>(label_index(t[3], base_dim, dual_only) - 1)] += coeff;
    rest = t.suffix();
  }
  return row;
}

inline std::vector<Row> parse_rows(const std::vector<std::string>& rows, int base_dim, bool dual_only = false) {
  std::vector<Row> out;
  for (const auto& r : rows) out.push_back(parse_row(r, base_dim, dual_only));
  return out;
}

// ------------------------------------------------------------- the catalog

inline const std::map<std::string, std::vector<std::string>>& catalog_tables() {
  static const std::map<std::string, std::vector<std::string>> t = {
      {"dim3", {"[e1,e2,e3] = e1"}},
      {"dim4-1", {"[e1,e2,e3] = e4", "[e1,e2,e4] = e3", "[e1,e3,e4] = e2", "[e2,e3,e4] = e1"}},
      {"dim4-2", {"[e1,e2,e3] = e1"}},
      {"dim4-3", {"[e2,e3,e4] = e1"}},
      {"dim4-4", {"[e2,e3,e4] = e1", "[e1,e3,e4] = e2"}},
      {"dim4-5", {"[e2,e3,e4] = e2", "[e1,e3,e4] = e1"}},
      {"dim4-6", {"[e2,e3,e4] = alpha*e1 + e2", "[e1,e3,e4] = e2"}},
      {"dim4-7", {"[e1,e2,e4] = e3", "[e1,e3,e4] = e2", "[e2,e3,e4] = e1"}},
  };
  return t;
}

/// Rows of an e-only table, or of an f-only table with dual_only.
inline threelie::ThreeLieAlgebra algebra_from_rows(int dim, const std::vector<std::string>& rows,
                                                   bool dual_only = false) {
  std::map<Triple, Vector> brackets;
  for (const auto& text : rows) {
    Row r = parse_row(text, dim, dual_only);
    r.value.resize(static_cast<std::size_t>(dim));
    brackets[r.args] = r.value;
  }
  return threelie::ThreeLieAlgebra(dim, brackets);
}

// --------------------------------------------------- coproduct families

/// Delta(e_x) terms as (coefficient, wedge triple), printed form.
using WedgeList = std::map<int, std::vector<std::pair<std::string, Triple>>>;

inline const std::map<std::string, WedgeList>& printed_families() {
  static const std::map<std::string, WedgeList> t = {
      {"dim4-1", {{1, {{"k", {2, 3, 4}}}}, {2, {{"k", {1, 3, 4}}}}, {3, {{"k", {1, 2, 4}}}}, {4, {{"k", {1, 2, 3}}}}}},
      {"dim4-2", {{2, {{"k", {1, 2, 4}}, {"c1", {1, 3, 4}}}}, {3, {{"-k", {1, 3, 4}}, {"c2", {1, 2, 4}}}}}},
      {"dim4-3",
       {{2, {{"k1", {1, 2, 3}}, {"k2", {1, 2, 4}}, {"c1", {1, 3, 4}}}},
        {3, {{"k3", {1, 2, 3}}, {"-k2", {1, 3, 4}}, {"c2", {1, 2, 4}}}},
        {4, {{"-k3", {1, 2, 4}}, {"k1", {1, 3, 4}}, {"c3", {1, 2, 3}}}}}},
      {"dim4-4", {{3, {{"k", {1, 2, 3}}, {"c1", {1, 2, 4}}}}, {4, {{"-k", {1, 3, 4}}, {"c2", {1, 2, 3}}}}}},
      {"dim4-5", {{3, {{"k", {1, 2, 3}}, {"c1", {1, 2, 4}}}}, {4, {{"-k", {1, 2, 4}}, {"c2", {1, 2, 3}}}}}},
      {"dim4-6", {{3, {{"k", {1, 2, 3}}, {"c1", {1, 2, 4}}}}, {4, {{"-k", {1, 2, 4}}, {"c2", {1, 2, 3}}}}}},
      {"dim4-7", {{4, {{"c", {1, 2, 3}}}}}},
  };
  return t;
}

inline threelie::Coproduct coproduct_from_list(int dim, const WedgeList& list) {
  threelie::Coproduct d(dim);
  for (const auto& [x, terms] : list) {
    for (const auto& [coeff, w] : terms) {
      d(x) += threelie::parse_scalar(coeff) * threelie::wedge_basis(dim, {w[0], w[1], w[2]});
    }
  }
  return d;
}

// ----------------------------------------- coproducts induced by a skew r

/// Coefficient expressions in minors: "D34_34 - D24_24 + alpha*D23_23".
/// DijPq means a^{ip}a^{jq} - a^{jp}a^{iq}.
inline Scalar evaluate_minors(const std::string& expr, const threelie::RMatrix& r) {
  static const std::regex term(R"(\s*([+-])?\s*(alpha\*)?D(\d)(\d)_(\d)(\d)\s*)");
  Scalar total;
  std::string rest = expr;
  while (!rest.empty()) {
    std::smatch t;
    if (!std::regex_search(rest, t, term) || t.position(0) != 0) throw std::invalid_argument("bad minor expr: " + expr);
    auto digit = [&](int g) { return t[g].str()[0] - '0'; };
    Scalar v = threelie::minor(r, digit(3), digit(4), digit(5), digit(6));
    if (t[2].matched) v = Scalar::variable("alpha") * v;
    if (t[1] == "-") v = -v;
    total += v;
    rest = t.suffix();
  }
  return total;
}

/// Printed list of induced coproducts for a symbolic skew r. Where the list
/// repeats a wedge (dim4-6, Delta(e2) on e2^e3^e4) the coefficients are joined.
inline const std::map<std::string, WedgeList>& printed_induced() {
  static const std::map<std::string, WedgeList> t = {
      {"dim3", {{1, {{"D23_23", {1, 2, 3}}}}, {2, {{"-D13_23", {1, 2, 3}}}}, {3, {{"D12_23", {1, 2, 3}}}}}},
      {"dim4-1",
       {{1,
         {{"D34_34 - D24_24 + D23_23", {2, 3, 4}},
          {"D24_12 - D24_13", {1, 2, 3}},
          {"D23_12 - D34_14", {1, 2, 4}},
          {"D23_13 - D24_14", {1, 3, 4}}}},
        {2,
         {{"D34_34 - D13_13 + D14_14", {1, 3, 4}},
          {"D34_23 - D14_12", {1, 2, 3}},
          {"D34_24 - D13_12", {1, 2, 4}},
          {"D14_24 - D13_23", {2, 3, 4}}}},
        {3,
         {{"D12_12 - D24_24 + D14_14", {1, 2, 4}},
          {"D14_13 - D24_23", {1, 2, 3}},
          {"D12_13 - D24_34", {1, 3, 4}},
          {"D12_23 - D14_34", {2, 3, 4}}}},
        {4,
         {{"D12_12 - D13_13 + D23_23", {1, 2, 3}},
          {"D23_24 - D13_14", {1, 2, 4}},
          {"D23_34 - D12_14", {1, 3, 4}},
          {"D13_34 - D12_24", {2, 3, 4}}}}}},
      {"dim4-2",
       {{1, {{"D23_23", {1, 2, 3}}, {"D23_24", {1, 2, 4}}, {"D23_34", {1, 3, 4}}}},
        {2, {{"-D13_23", {1, 2, 3}}, {"-D13_24", {1, 2, 4}}, {"-D13_34", {1, 3, 4}}}},
        {3, {{"D12_23", {1, 2, 3}}, {"D12_24", {1, 2, 4}}, {"D12_34", {1, 3, 4}}}}}},
      {"dim4-3",
       {{2, {{"D34_23", {1, 2, 3}}, {"D34_24", {1, 2, 4}}, {"D34_34", {1, 3, 4}}}},
        {3, {{"-D24_23", {1, 2, 3}}, {"-D24_24", {1, 2, 4}}, {"-D24_34", {1, 3, 4}}}},
        {4, {{"D23_23", {1, 2, 3}}, {"D23_24", {1, 2, 4}}, {"D23_34", {1, 3, 4}}}}}},
      {"dim4-4",
       {{1, {{"-D34_13", {1, 2, 3}}, {"-D34_14", {1, 2, 4}}, {"D34_34", {2, 3, 4}}}},
        {2, {{"D34_23", {1, 2, 3}}, {"D34_24", {1, 2, 4}}, {"D34_34", {1, 3, 4}}}},
        {3,
         {{"D14_13 - D24_23", {1, 2, 3}},
          {"D14_14 - D24_24", {1, 2, 4}},
          {"-D24_34", {1, 3, 4}},
          {"-D14_34", {2, 3, 4}}}},
        {4,
         {{"D23_23 - D13_13", {1, 2, 3}},
          {"D23_24 - D13_14", {1, 2, 4}},
          {"D23_34", {1, 3, 4}},
          {"-D13_34", {2, 3, 4}}}}}},
      {"dim4-5",
       {{1, {{"D34_23", {1, 2, 3}}, {"D34_24", {1, 2, 4}}, {"D34_34", {1, 3, 4}}}},
        {2, {{"-D34_13", {1, 2, 3}}, {"-D34_14", {1, 2, 4}}, {"D34_34", {2, 3, 4}}}},
        {3,
         {{"D24_13 - D14_23", {1, 2, 3}},
          {"D24_14 - D14_24", {1, 2, 4}},
          {"-D24_34", {1, 3, 4}},
          {"-D14_34", {2, 3, 4}}}},
        {4,
         {{"D13_23 - D23_13", {1, 2, 3}},
          {"D13_24 - D23_14", {1, 2, 4}},
          {"D13_34", {1, 3, 4}},
          {"D23_34", {2, 3, 4}}}}}},
      {"dim4-6",
       {{1, {{"-D34_13", {1, 2, 3}}, {"-D34_14", {1, 2, 4}}, {"D34_34", {2, 3, 4}}}},
        {2,
         {{"alpha*D34_23 - D34_13", {1, 2, 3}},
          {"alpha*D34_24 - D34_14", {1, 2, 4}},
          {"alpha*D34_34 + D34_34", {2, 3, 4}}}},
        {3,
         {{"D24_13 + D14_13 - alpha*D24_23", {1, 2, 3}},
          {"D24_14 + D14_14 - alpha*D24_24", {1, 2, 4}},
          {"alpha*D24_34", {1, 3, 4}},
          {"-D24_34 - D14_34", {2, 3, 4}}}},
        {4,
         {{"alpha*D23_23 - D23_13 - D13_13", {1, 2, 3}},
          {"alpha*D23_24 - D23_14 - D12_14", {1, 2, 4}},
          {"alpha*D23_34", {1, 3, 4}},
          {"D23_34 + D13_34", {2, 3, 4}}}}}},
      {"dim4-7",
       {{1,
         {{"D24_12 - D24_13", {1, 2, 3}},
          {"D34_41", {1, 2, 4}},
          {"-D24_14", {1, 3, 4}},
          {"D34_34 - D24_24", {2, 3, 4}}}},
        {2,
         {{"D34_23 - D14_12", {1, 2, 3}},
          {"-D34_24", {1, 2, 4}},
          {"D34_34 - D14_14", {1, 3, 4}},
          {"D14_24", {2, 3, 4}}}},
        {3,
         {{"D14_13 - D24_23", {1, 2, 3}},
          {"D14_14 - D24_24", {1, 2, 4}},
          {"-D24_34", {1, 3, 4}},
          {"-D14_34", {2, 3, 4}}}},
        {4,
         {{"D12_12 - D13_13 + D23_23", {1, 2, 3}},
          {"D23_24 - D13_14", {1, 2, 4}},
          {"D23_34 - D12_14", {1, 3, 4}},
          {"D13_34 - D12_24", {2, 3, 4}}}}}},
  };
  return t;
}

/// Coefficients of the printed list that disagree with the wedge formula,
/// each with the value the formula gives. An absent printed coefficient is 0.
struct InducedMisprint {
  std::string id;
  int x;
  Triple wedge;
  std::string corrected;
};

inline const std::vector<InducedMisprint>& induced_misprints() {
  static const std::vector<InducedMisprint> t = {
      {"dim4-1", 1, {1, 2, 3}, "D24_12 - D34_13"},
      {"dim4-4", 4, {2, 3, 4}, "D13_34"},
      {"dim4-5", 3, {1, 3, 4}, "-D14_34"},
      {"dim4-5", 3, {2, 3, 4}, "-D24_34"},
      {"dim4-6", 2, {1, 3, 4}, "alpha*D34_34"},
      {"dim4-6", 2, {2, 3, 4}, "D34_34"},
      {"dim4-6", 3, {1, 3, 4}, "-alpha*D24_34"},
      {"dim4-6", 4, {1, 2, 4}, "alpha*D23_24 - D23_14 - D13_14"},
      {"dim4-7", 1, {1, 2, 3}, "D24_12 - D34_13"},
      {"dim4-7", 2, {1, 2, 4}, "D34_24"},
      {"dim4-7", 2, {1, 3, 4}, "D34_34 + D14_14"},
  };
  return t;
}

inline std::optional<std::string> induced_misprint(const std::string& id, int x, const Triple& w) {
  for (const auto& m : induced_misprints()) {
    if (m.id == id && m.x == x && m.wedge == w) return m.corrected;
  }
  return std::nullopt;
}

/// Printed coefficient of e_p^e_q^e_r in Delta(e_x), or "" when not listed.
inline std::string printed_induced_coefficient(const std::string& id, int x, const Triple& w) {
  const auto& list = printed_induced().at(id);
  const auto it = list.find(x);
  if (it == list.end()) return "";
  for (const auto& [coeff, triple] : it->second) {
    if (triple == w) return coeff;
  }
  return "";
}

struct InducedComparison {
  int verbatim_matches = 0;
  int corrected_matches = 0;
  std::vector<std::string> problems;
};

/// Compares induced_coproduct_wedge for a symbolic skew r with the printed
/// list, coefficient by coefficient over every wedge p<q<r.
inline InducedComparison compare_induced(const std::string& id, const threelie::ThreeLieAlgebra& a) {
  InducedComparison out;
  const threelie::RMatrix r = threelie::RMatrix::symbolic_skew(a.dim());
  const threelie::Coproduct delta = threelie::induced_coproduct_wedge(a, r);
  const int n = a.dim();
  for (int x = 1; x <= n; ++x) {
    for (int p = 1; p <= n; ++p) {
      for (int q = p + 1; q <= n; ++q) {
        for (int s = q + 1; s <= n; ++s) {
          const Triple w{p, q, s};
          const Scalar derived = delta.coefficient(x, p, q, s);
          const std::string printed_text = printed_induced_coefficient(id, x, w);
          const Scalar printed = printed_text.empty() ? Scalar() : evaluate_minors(printed_text, r);
          const std::string where = id + " Delta(e" + std::to_string(x) + ") e" + std::to_string(p) +
                                    std::to_string(q) + std::to_string(s);
          if (const auto corrected = induced_misprint(id, x, w)) {
            if (printed == derived) out.problems.push_back(where + ": allowlisted but printed value is correct");
            if (evaluate_minors(*corrected, r) != derived) {
              out.problems.push_back(where + ": correction does not match, derived " + threelie::to_string(derived));
            }
            ++out.corrected_matches;
          } else if (printed != derived) {
            out.problems.push_back(where + ": printed " + threelie::to_string(printed) + ", derived " +
                                   threelie::to_string(derived));
          } else {
            ++out.verbatim_matches;
          }
        }
      }
    }
  }
  return out;
}

// -------------------------------------------- solvability conditions

/// The printed conditions with the product expanded; mixed letters such as
/// a_3_2 are kept as printed.
inline const std::map<std::string, std::string>& printed_conditions() {
  static const std::map<std::string, std::string> t = {
      {"dim4-2", "a_2_3*a_1_2*a_3_4 - a_2_3*a_1_3*a_2_4 - a_2_3*a_3_2*a_1_4"},
      {"dim4-5", "a_3_4*a_1_2*a_3_4 - a_3_4*a_3_2*a_1_4 + a_3_4*a_4_2*a_1_3"},
      {"dim4-6", "a_3_4*a_1_2*a_4_3 + a_3_4*a_3_2*a_1_4 - a_3_4*a_4_2*a_1_3"},
  };
  return t;
}

/// Some rational c != 0 with a == c*b.
inline std::optional<threelie::Rational> proportionality(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  const threelie::Rational c = a.leading_coefficient() / b.leading_coefficient();
  if (a == Scalar(c) * b) return c;
  return std::nullopt;
}

// ----------------------------------------------------- dual brackets

inline const std::map<std::string, std::vector<std::string>>& printed_dual_tables() {
  static const std::map<std::string, std::vector<std::string>> t = {
      {"dim4-1", {"[f1,f2,f3] = k*f4", "[f1,f2,f4] = k*f3", "[f1,f3,f4] = k*f2", "[f2,f3,f4] = k*f1"}},
      {"dim4-3",
       {"[f1,f2,f3] = k1*f2 + k3*f3 + c3*f4", "[f1,f2,f4] = k2*f2 + c2*f3 - k3*f4",
        "[f1,f3,f4] = c1*f2 - k2*f3 + k1*f4"}},
      {"dim4-4", {"[f1,f2,f3] = k*f3 + c2*f4", "[f1,f2,f4] = c1*f3 - k*f4"}},
      {"dim4-7", {"[f1,f2,f3] = c*f4"}},
  };
  return t;
}

// ------------------------------------------------ 8-dimensional doubles

struct DoubleTable {
  std::vector<std::string> rows;
  /// Printed rows that disagree with the bracket, each dropped from the
  /// comparison after checking that it really disagrees.
  std::vector<std::string> misprinted;
  /// Derived rows standing in for the misprinted ones.
  std::vector<std::string> corrections;
  /// Whether the printed list claims to be all nonzero products.
  bool complete;
};

inline const std::map<std::string, DoubleTable>& printed_double_tables() {
  static const std::map<std::string, DoubleTable> t = {
      // The generic rows "[e_i,f_j,f_k]=f_m, [e_i,e_j,f_k]=f_m" carry no
      // signs and are not transcribed, so completeness is not claimed.
      {"dim4-1",
       {{"[e1,e2,e3] = e4", "[e1,e2,e4] = e3", "[e1,e3,e4] = e2", "[e2,e3,e4] = e1", "[f1,f2,f3] = k*f4",
         "[f1,f2,f4] = k*f3", "[f1,f3,f4] = k*f2", "[f2,f3,f4] = k*f1"},
        {},
        {},
        false}},
      {"dim4-3",
       {{"[e2,e3,e4] = e1",
         "[f1,f2,f3] = k1*f2 + k3*f3 + c3*f4",
         "[f1,f2,f4] = k2*f2 + c2*f3 - k3*f4",
         "[f1,f3,f4] = c1*f2 - k2*f3 + k1*f4",
         "[e1,e2,f1] = -f3",
         "[e1,e3,f1] = f2",
         "[e2,e3,f1] = -f1",
         "[e2,f1,f2] = -k1*e3 - k2*e4",
         "[e2,f2,f3] = -k1*e1",
         "[e2,f1,f3] = k1*e2 - c1*e4",
         "[e2,f2,f4] = -k2*e1",
         "[e2,f1,f4] = k2*e2 + c1*e3",
         "[e2,f3,f4] = -c1*e1",
         "[e3,f1,f2] = -k3*e3 - c2*e4",
         "[e3,f2,f3] = -k3*e1",
         "[e3,f1,f3] = k3*e2 + k2*e4",
         "[e3,f2,f4] = -c2*e1",
         "[e3,f1,f4] = c2*e2 - k2*e3",
         "[e3,f3,f4] = k2*e1",
         "[e4,f1,f2] = -c2*e3 + k3*e4",
         "[e4,f2,f3] = -c3*e1",
         "[e4,f1,f3] = c3*e2 - k1*e4",
         "[e4,f2,f4] = k3*e1",
         "[e4,f1,f4] = -k3*e2 + k1*e3",
         "[e4,f3,f4] = -k1*e1"},
        {"[e1,e2,f1] = -f3", "[e1,e3,f1] = f2", "[e2,e3,f1] = -f1", "[e4,f1,f2] = -c2*e3 + k3*e4"},
        {"[e2,e3,f1] = -f4", "[e2,e4,f1] = f3", "[e3,e4,f1] = -f2", "[e4,f1,f2] = -c3*e3 + k3*e4"},
        true}},
      {"dim4-4",
       {{"[e2,e3,e4] = e1",
         "[e1,e3,e4] = e2",
         "[f1,f2,f3] = k*f3 + c2*f4",
         "[f1,f2,f4] = c1*f3 - k*f4",
         "[e2,e3,f1] = -f4",
         "[e3,e4,f1] = -f2",
         "[e2,e4,f1] = f3",
         "[e1,e4,f2] = f3",
         "[e1,e3,f2] = -f4",
         "[e3,e4,f2] = -f2",
         "[e3,f1,f2] = -k*e3 - c1*e4",
         "[e4,f1,f2] = -c2*e3 + k*e4",
         "[e3,f1,f3] = k*e2",
         "[e4,f1,f3] = c2*e2",
         "[e3,f1,f4] = c1*e2",
         "[e4,f1,f4] = -k*e2",
         "[e3,f2,f3] = -k*e1",
         "[e4,f2,f3] = -c2*e1",
         "[e3,f2,f4] = -c1*k*e1",
         "[e4,f2,f4] = k*e1"},
        {"[e3,e4,f2] = -f2", "[e3,f2,f4] = -c1*k*e1"},
        {"[e3,e4,f2] = -f1", "[e3,f2,f4] = -c1*e1"},
        true}},
      // "[e_1,e_e,e_4]=e_2" is transcribed with e3 for the unreadable index;
      // the catalog table forces it.
      {"dim4-7",
       {{"[e1,e2,e4] = e3",
         "[e1,e3,e4] = e2",
         "[e2,e3,e4] = e1",
         "[f1,f2,f3] = c*f4",
         "[e1,e3,f2] = -f4",
         "[e1,e2,f3] = -f4",
         "[e1,e4,f2] = f3",
         "[e1,e4,f3] = f2",
         "[e2,e3,f1] = -f4",
         "[e2,e4,f1] = f3",
         "[e2,e4,f3] = -f1",
         "[e3,e4,f2] = -f1",
         "[e3,e4,f1] = -f2",
         "[e4,f1,f2] = -c*e3",
         "[e4,f1,f3] = c*e2",
         "[e4,f2,f3] = -c*e1"},
        {},
        {},
        true}},
  };
  return t;
}

}  // namespace reference
