#include "threelie/double.hpp"

#include <algorithm>
#include <stdexcept>

namespace threelie {

namespace {

void check_constraint_inputs(const ThreeLieAlgebra& algebra, const Coproduct& delta) {
  if (algebra.dim() != delta.dim()) throw std::invalid_argument("coproduct and algebra dimensions differ");
  if (!delta.is_alternating()) throw std::invalid_argument("coproduct has a component that is not fully antisymmetric");
}

/// Every equation of the first constraint, zero or not, in a fixed order.
std::vector<ConstraintDefect> eq26_values(const ThreeLieAlgebra& t, const Coproduct& c) {
  const int n = t.dim();
  std::vector<ConstraintDefect> out;
  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q <= n; ++q) {
      for (int r = 1; r <= n; ++r) {
        for (int a = 1; a <= n; ++a) {
          for (int b = a + 1; b <= n; ++b) {
            for (int cc = b + 1; cc <= n; ++cc) {
              Scalar d;
              for (int i = 1; i <= n; ++i) {
                d += t.structure_constant(a, b, cc, i) * c.coefficient(i, p, q, r);
                d -= t.structure_constant(b, cc, i, r) * c.coefficient(a, p, q, i);
                d -= t.structure_constant(cc, a, i, r) * c.coefficient(b, p, q, i);
                d -= t.structure_constant(a, b, i, r) * c.coefficient(cc, p, q, i);
              }
              out.push_back({{a, b, cc, p, q, r}, std::move(d)});
            }
          }
        }
      }
    }
  }
  return out;
}

ConstraintReport nonzero(std::vector<ConstraintDefect> values) {
  ConstraintReport report;
  for (auto& v : values) {
    if (!v.defect.is_zero()) report.defects.push_back(std::move(v));
  }
  return report;
}

}  // namespace

ConstraintReport constraint_eq26(const ThreeLieAlgebra& algebra, const Coproduct& delta) {
  check_constraint_inputs(algebra, delta);
  return nonzero(eq26_values(algebra, delta));
}

ConstraintReport constraint_eq27(const ThreeLieAlgebra& algebra, const Coproduct& delta) {
  check_constraint_inputs(algebra, delta);
  const ThreeLieAlgebra& t = algebra;
  const Coproduct& c = delta;
  const int n = algebra.dim();
  ConstraintReport report;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      for (int cc = b + 1; cc <= n; ++cc) {
        for (int p = 1; p <= n; ++p) {
          for (int q = p + 1; q <= n; ++q) {
            for (int r = q + 1; r <= n; ++r) {
              Scalar d;
              for (int i = 1; i <= n; ++i) {
                d += t.structure_constant(a, b, cc, i) * c.coefficient(i, p, q, r);
                d -= t.structure_constant(b, cc, i, r) * c.coefficient(a, p, q, i);
                d -= t.structure_constant(b, cc, i, q) * c.coefficient(a, p, i, r);
                d -= t.structure_constant(b, cc, i, p) * c.coefficient(a, i, q, r);
              }
              if (!d.is_zero()) report.defects.push_back({{a, b, cc, p, q, r}, std::move(d)});
            }
          }
        }
      }
    }
  }
  return report;
}

// ----------------------------------------------------------------- families

namespace {

Scalar var(const char* name) { return Scalar::variable(name); }

DeltaFamily make_family(std::string_view id, bool printed) {
  const CatalogEntry& entry = catalog_entry(id);
  const int n = entry.algebra.dim();
  DeltaFamily f{std::string(id), {}, Coproduct(n)};
  if (n != 4) return f;
  auto w = [](int i, int j, int k) { return wedge_basis(4, {i, j, k}); };
  Coproduct& d = f.coproduct;
  if (id == "dim4-1") {
    f.parameters = {"k"};
    const Scalar k = var("k");
    d(1) = k * w(2, 3, 4);
    d(2) = k * w(1, 3, 4);
    d(3) = k * w(1, 2, 4);
    d(4) = k * w(1, 2, 3);
  } else if (id == "dim4-2") {
    f.parameters = {"c1", "c2", "k"};
    const Scalar k = var("k");
    d(2) = k * w(1, 2, 4) + var("c1") * w(1, 3, 4);
    d(3) = -k * w(1, 3, 4) + var("c2") * w(1, 2, 4);
  } else if (id == "dim4-3") {
    f.parameters = {"c1", "c2", "c3", "k1", "k2", "k3"};
    const Scalar k1 = var("k1");
    const Scalar k2 = var("k2");
    const Scalar k3 = var("k3");
    d(2) = k1 * w(1, 2, 3) + k2 * w(1, 2, 4) + var("c1") * w(1, 3, 4);
    d(3) = k3 * w(1, 2, 3) - k2 * w(1, 3, 4) + var("c2") * w(1, 2, 4);
    d(4) = -k3 * w(1, 2, 4) + k1 * w(1, 3, 4) + var("c3") * w(1, 2, 3);
  } else if (id == "dim4-4" || id == "dim4-5" || id == "dim4-6") {
    f.parameters = {"c1", "c2", "k"};
    const Scalar k = var("k");
    d(3) = k * w(1, 2, 3) + var("c1") * w(1, 2, 4);
    const Tensor k_term = (printed && id == "dim4-4") ? w(1, 3, 4) : w(1, 2, 4);
    d(4) = -k * k_term + var("c2") * w(1, 2, 3);
  } else if (id == "dim4-7") {
    f.parameters = {"c"};
    d(4) = var("c") * w(1, 2, 3);
  }
  return f;
}

}  // namespace

DeltaFamily delta_family(std::string_view catalog_id) { return make_family(catalog_id, false); }

DeltaFamily printed_delta_family(std::string_view catalog_id) { return make_family(catalog_id, true); }

std::vector<std::pair<int, Triple>> coproduct_unknowns(int dim) {
  std::vector<std::pair<int, Triple>> out;
  for (int i = 1; i <= dim; ++i) {
    for (int p = 1; p <= dim; ++p) {
      for (int q = p + 1; q <= dim; ++q) {
        for (int r = q + 1; r <= dim; ++r) out.emplace_back(i, Triple{p, q, r});
      }
    }
  }
  return out;
}

Matrix eq26_system(const ThreeLieAlgebra& algebra) {
  const int n = algebra.dim();
  const auto unknowns = coproduct_unknowns(n);
  Matrix m;
  for (std::size_t col = 0; col < unknowns.size(); ++col) {
    const auto& [i, pqr] = unknowns[col];
    Coproduct unit(n);
    unit(i) = wedge_basis(n, {pqr[0], pqr[1], pqr[2]});
    const auto values = eq26_values(algebra, unit);
    if (col == 0) m = Matrix(values.size(), unknowns.size());
    for (std::size_t row = 0; row < values.size(); ++row) m(row, col) = values[row].defect;
  }
  return m;
}

Vector coproduct_coordinates(const Coproduct& delta) {
  Vector out;
  for (const auto& [i, pqr] : coproduct_unknowns(delta.dim())) {
    out.push_back(delta.coefficient(i, pqr[0], pqr[1], pqr[2]));
  }
  return out;
}

Matrix linear_coefficients(const std::vector<Scalar>& forms, const std::vector<std::string>& parameters) {
  Matrix m(forms.size(), parameters.size());
  for (std::size_t row = 0; row < forms.size(); ++row) {
    Scalar rebuilt;
    for (std::size_t col = 0; col < parameters.size(); ++col) {
      Scalar c = forms[row].coefficient(parameters[col], 1);
      for (const auto& p : parameters) {
        if (c.degree_in(p) > 0) throw std::invalid_argument("form is not linear in the parameters");
      }
      rebuilt += c * Scalar::variable(parameters[col]);
      m(row, col) = std::move(c);
    }
    if (rebuilt != forms[row]) throw std::invalid_argument("form is not linear in the parameters");
  }
  return m;
}

FamilyCheck solve_delta_families(std::string_view catalog_id) {
  const CatalogEntry& entry = catalog_entry(catalog_id);
  FamilyCheck check{delta_family(catalog_id)};
  check.null_space_dimension = null_space(eq26_system(entry.algebra)).dimension();
  const Matrix family_map = linear_coefficients(coproduct_coordinates(check.family.coproduct), check.family.parameters);
  check.family_rank = check.family.parameters.empty() ? 0 : null_space(family_map).rank;
  check.family_in_null_space = constraint_eq26(entry.algebra, check.family.coproduct).passed();
  return check;
}

std::size_t surviving_parameter_dimension(const ThreeLieAlgebra& algebra, const DeltaFamily& family) {
  if (family.parameters.empty()) return 0;
  std::vector<Scalar> forms;
  for (auto& d : constraint_eq26(algebra, family.coproduct).defects) forms.push_back(std::move(d.defect));
  for (auto& d : constraint_eq27(algebra, family.coproduct).defects) forms.push_back(std::move(d.defect));
  if (forms.empty()) return family.parameters.size();
  return null_space(linear_coefficients(forms, family.parameters)).dimension();
}

Tensor phi_action(const ThreeLieAlgebra& algebra, int s, int t, const Tensor& w) {
  const Matrix ad = algebra.adjoint(s, t);
  Tensor out(w.arity(), w.dim());
  for (int slot = 1; slot <= w.arity(); ++slot) out += apply_to_slot(w, slot, ad);
  return out;
}

// ------------------------------------------------------------ bilinear form

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw std::invalid_argument("Gram matrix must be square");
}

BilinearForm BilinearForm::hyperbolic(int base_dim) {
  const auto n = static_cast<std::size_t>(base_dim);
  Matrix g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, n + i) = Scalar(1);
    g(n + i, i) = Scalar(1);
  }
  return BilinearForm(std::move(g));
}

Scalar BilinearForm::operator()(const Vector& x, const Vector& y) const {
  if (x.size() != gram_.rows() || y.size() != gram_.rows()) throw std::invalid_argument("form argument has wrong size");
  Scalar out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero() || gram_(i, j).is_zero()) continue;
      out += x[i] * gram_(i, j) * y[j];
    }
  }
  return out;
}

bool BilinearForm::is_symmetric() const { return gram_ == gram_.transpose(); }

bool BilinearForm::is_nondegenerate() const { return !determinant(gram_).is_zero(); }

// ------------------------------------------------------------------- double

namespace {

Vector slice(const Vector& v, std::size_t from, std::size_t count) {
  return Vector(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(from + count));
}

/// Coadjoint action of `bracket` on the dual space: component m of the result
/// is -<g, [x, y, e_m]>.
Vector coadjoint(const ThreeLieAlgebra& bracket, const Vector& x, const Vector& y, const Vector& g) {
  const int n = bracket.dim();
  Vector out(static_cast<std::size_t>(n));
  if (is_zero(x) || is_zero(y) || is_zero(g)) return out;
  for (int m = 1; m <= n; ++m) {
    Vector b = bracket.bracket(x, y, basis_vector(n, m));
    Scalar s;
    for (std::size_t t = 0; t < b.size(); ++t) {
      if (!b[t].is_zero() && !g[t].is_zero()) s -= g[t] * b[t];
    }
    out[static_cast<std::size_t>(m - 1)] = std::move(s);
  }
  return out;
}

}  // namespace

Vector double_bracket(const ThreeLieAlgebra& algebra, const ThreeLieAlgebra& dual, const Vector& u, const Vector& v,
                      const Vector& w) {
  const auto n = static_cast<std::size_t>(algebra.dim());
  if (dual.dim() != algebra.dim()) throw std::invalid_argument("algebra and dual dimensions differ");
  if (u.size() != 2 * n || v.size() != 2 * n || w.size() != 2 * n) {
    throw std::invalid_argument("double bracket argument has wrong dimension");
  }
  const Vector x = slice(u, 0, n), xi = slice(u, n, n);
  const Vector y = slice(v, 0, n), eta = slice(v, n, n);
  const Vector z = slice(w, 0, n), gamma = slice(w, n, n);
  Vector a_part = algebra.bracket(x, y, z) + coadjoint(dual, xi, eta, z) + coadjoint(dual, eta, gamma, x) +
                  coadjoint(dual, gamma, xi, y);
  Vector f_part = coadjoint(algebra, x, y, gamma) + coadjoint(algebra, y, z, xi) + coadjoint(algebra, z, x, eta) +
                  dual.bracket(xi, eta, gamma);
  a_part.insert(a_part.end(), f_part.begin(), f_part.end());
  return a_part;
}

DoubleAlgebra assemble_double(const ThreeLieAlgebra& algebra, const ThreeLieAlgebra& dual) {
  if (dual.dim() != algebra.dim()) throw std::invalid_argument("algebra and dual dimensions differ");
  const int n = algebra.dim();
  const int m = 2 * n;
  std::map<Triple, Vector> brackets;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      for (int k = j + 1; k <= m; ++k) {
        Vector b = double_bracket(algebra, dual, basis_vector(m, i), basis_vector(m, j), basis_vector(m, k));
        if (!is_zero(b)) brackets.emplace(Triple{i, j, k}, std::move(b));
      }
    }
  }
  return DoubleAlgebra{n, ThreeLieAlgebra(m, brackets), BilinearForm::hyperbolic(n), {}, {}};
}

DoubleAlgebra build_double(const ThreeLieAlgebra& algebra, const ThreeLieAlgebra& dual) {
  if (dual.dim() != algebra.dim()) throw std::invalid_argument("algebra and dual dimensions differ");
  if (!check_fundamental_identity(dual).passed()) {
    throw std::invalid_argument("dual bracket violates the Fundamental Identity");
  }
  return assemble_double(algebra, dual);
}

std::vector<std::pair<std::string, bool>> ManinReport::checks() const {
  return {{"fundamental_identity", fundamental_identity.passed()},
          {"symmetric_nondegenerate", symmetric && nondegenerate},
          {"invariance", invariance_violations.empty()},
          {"isotropy", isotropy_violations.empty()},
          {"closure", closure_violations.empty()},
          {"projection", projection_violations.empty()}};
}

bool ManinReport::passed() const {
  const auto all = checks();
  return std::all_of(all.begin(), all.end(), [](const auto& c) { return c.second; });
}

ManinReport check_manin_triple(const DoubleAlgebra& d) {
  const ThreeLieAlgebra& g = d.algebra;
  const int m = g.dim();
  const int n = d.base_dim;
  if (m != 2 * n || d.form.dim() != m) throw std::invalid_argument("double algebra has inconsistent dimensions");
  const Matrix& gram = d.form.gram();
  auto pair_with_basis = [&](const Vector& v, int k) {
    Scalar s;
    for (int j = 0; j < m; ++j) {
      const Scalar& gjk = gram(static_cast<std::size_t>(j), static_cast<std::size_t>(k - 1));
      if (!gjk.is_zero() && !v[static_cast<std::size_t>(j)].is_zero()) s += v[static_cast<std::size_t>(j)] * gjk;
    }
    return s;
  };
  auto in_first_half = [n](int i) { return i <= n; };

  ManinReport report;
  report.fundamental_identity = check_fundamental_identity(g);
  report.symmetric = d.form.is_symmetric();
  report.nondegenerate = d.form.is_nondegenerate();

  for (int x1 = 1; x1 <= m; ++x1) {
    for (int x2 = 1; x2 <= m; ++x2) {
      if (x1 == x2) continue;
      for (int x3 = 1; x3 <= m; ++x3) {
        for (int x4 = 1; x4 <= m; ++x4) {
          Scalar s = pair_with_basis(g.basis_bracket(x1, x2, x3), x4) + pair_with_basis(g.basis_bracket(x1, x2, x4), x3);
          if (!s.is_zero()) report.invariance_violations.push_back({x1, x2, x3, x4});
        }
      }
    }
  }

  for (int i = 1; i <= m; ++i) {
    for (int j = i; j <= m; ++j) {
      if (in_first_half(i) != in_first_half(j)) continue;
      if (!gram(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)).is_zero()) {
        report.isotropy_violations.push_back({i, j});
      }
    }
  }

  // True if v has a component outside the given half.
  auto has_component_outside = [&](const Vector& v, bool first_half) {
    for (int t = 1; t <= m; ++t) {
      if (in_first_half(t) != first_half && !v[static_cast<std::size_t>(t - 1)].is_zero()) return true;
    }
    return false;
  };
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      for (int k = j + 1; k <= m; ++k) {
        const bool fi = in_first_half(i), fj = in_first_half(j), fk = in_first_half(k);
        const Vector b = g.basis_bracket(i, j, k);
        if (fi == fj && fj == fk) {
          if (has_component_outside(b, fi)) report.closure_violations.push_back({i, j, k});
        } else {
          // Two arguments from one half, one from the other: the result may
          // not have a component in the half holding the pair.
          const int from_first = static_cast<int>(fi) + static_cast<int>(fj) + static_cast<int>(fk);
          const bool pair_in_first = from_first == 2;
          if (has_component_outside(b, !pair_in_first)) report.projection_violations.push_back({i, j, k});
        }
      }
    }
  }
  return report;
}

}  // namespace threelie
