#include "threelie/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace threelie {

std::pair<int, Triple> canonical_triple(Triple idx) {
  if (idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2]) return {0, idx};
  int sign = 1;
  // Bubble sort on three entries; each swap flips the sign.
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 0; i < 2; ++i) {
      if (idx[i] > idx[i + 1]) {
        std::swap(idx[i], idx[i + 1]);
        sign = -sign;
      }
    }
  }
  return {sign, idx};
}

ThreeLieAlgebra::ThreeLieAlgebra(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("algebra dimension must be positive");
}

ThreeLieAlgebra::ThreeLieAlgebra(int dim, const std::map<Triple, Vector>& brackets) : ThreeLieAlgebra(dim) {
  for (const auto& [key, value] : brackets) {
    for (int i : key) check_index(i);
    if (value.size() != static_cast<std::size_t>(dim)) {
      throw std::invalid_argument("bracket value has wrong dimension");
    }
    auto [sign, canon] = canonical_triple(key);
    if (sign == 0) throw std::invalid_argument("bracket with repeated index");
    if (is_zero(value)) continue;
    Vector v = sign > 0 ? value : Scalar(-1) * value;
    auto [it, inserted] = brackets_.emplace(canon, v);
    if (!inserted) throw std::invalid_argument("bracket specified twice");
  }
}

void ThreeLieAlgebra::check_index(int i) const {
  if (i < 1 || i > dim_) throw std::out_of_range("basis index " + std::to_string(i) + " out of range");
}

Vector ThreeLieAlgebra::basis_bracket(int i, int j, int k) const {
  check_index(i);
  check_index(j);
  check_index(k);
  auto [sign, canon] = canonical_triple({i, j, k});
  Vector zero(static_cast<std::size_t>(dim_));
  if (sign == 0) return zero;
  auto it = brackets_.find(canon);
  if (it == brackets_.end()) return zero;
  return sign > 0 ? it->second : Scalar(-1) * it->second;
}

Scalar ThreeLieAlgebra::structure_constant(int i, int j, int k, int m) const {
  check_index(m);
  auto [sign, canon] = canonical_triple({i, j, k});
  for (int idx : canon) check_index(idx);
  if (sign == 0) return Scalar();
  auto it = brackets_.find(canon);
  if (it == brackets_.end()) return Scalar();
  const Scalar& v = it->second[static_cast<std::size_t>(m - 1)];
  return sign > 0 ? v : -v;
}

Vector ThreeLieAlgebra::bracket(const Vector& x, const Vector& y, const Vector& z) const {
  const auto n = static_cast<std::size_t>(dim_);
  if (x.size() != n || y.size() != n || z.size() != n) {
    throw std::invalid_argument("bracket argument has wrong dimension");
  }
  Vector out(n);
  for (const auto& [key, value] : brackets_) {
    // Sum over the six orderings of the canonical key.
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    Scalar coeff;
    for (int p = 0; p < 6; ++p) {
      const Scalar& a = x[static_cast<std::size_t>(key[perms[p][0]] - 1)];
      if (a.is_zero()) continue;
      const Scalar& b = y[static_cast<std::size_t>(key[perms[p][1]] - 1)];
      if (b.is_zero()) continue;
      const Scalar& c = z[static_cast<std::size_t>(key[perms[p][2]] - 1)];
      if (c.is_zero()) continue;
      Scalar term = a * b * c;
      if (p < 3) {
        coeff += term;
      } else {
        coeff -= term;
      }
    }
    if (coeff.is_zero()) continue;
    for (std::size_t m = 0; m < n; ++m) {
      if (!value[m].is_zero()) out[m].add_scaled(value[m], coeff);
    }
  }
  return out;
}

Matrix ThreeLieAlgebra::adjoint(int s, int t) const {
  check_index(s);
  check_index(t);
  const auto n = static_cast<std::size_t>(dim_);
  Matrix ad(n, n);
  for (int j = 1; j <= dim_; ++j) {
    Vector col = basis_bracket(s, t, j);
    for (std::size_t m = 0; m < n; ++m) ad(m, static_cast<std::size_t>(j - 1)) = col[m];
  }
  return ad;
}

ThreeLieAlgebra ThreeLieAlgebra::substitute(const std::map<std::string, Rational>& bindings) const {
  std::map<Triple, Vector> out;
  for (const auto& [key, value] : brackets_) out.emplace(key, threelie::substitute(value, bindings));
  return ThreeLieAlgebra(dim_, out);
}

// ------------------------------------------------------ Fundamental Identity

namespace {

Vector fi_defect(const ThreeLieAlgebra& a, int x1, int x2, int x3, int x4, int x5) {
  const int n = a.dim();
  const Vector e1 = basis_vector(n, x1);
  const Vector e2 = basis_vector(n, x2);
  const Vector e3 = basis_vector(n, x3);
  const Vector e4 = basis_vector(n, x4);
  const Vector e5 = basis_vector(n, x5);
  Vector lhs = a.bracket(e1, e2, a.basis_bracket(x3, x4, x5));
  Vector rhs = a.bracket(a.basis_bracket(x1, x2, x3), e4, e5) + a.bracket(e3, a.basis_bracket(x1, x2, x4), e5) +
               a.bracket(e3, e4, a.basis_bracket(x1, x2, x5));
  return lhs - rhs;
}

}  // namespace

FiReport check_fundamental_identity(const ThreeLieAlgebra& algebra) {
  FiReport report;
  const int n = algebra.dim();
  for (int x1 = 1; x1 <= n; ++x1) {
    for (int x2 = x1 + 1; x2 <= n; ++x2) {
      for (int x3 = 1; x3 <= n; ++x3) {
        for (int x4 = x3 + 1; x4 <= n; ++x4) {
          for (int x5 = x4 + 1; x5 <= n; ++x5) {
            Vector d = fi_defect(algebra, x1, x2, x3, x4, x5);
            if (!is_zero(d)) report.violations.push_back({{x1, x2, x3, x4, x5}, std::move(d)});
          }
        }
      }
    }
  }
  return report;
}

FiReport check_fundamental_identity_all_tuples(const ThreeLieAlgebra& algebra) {
  FiReport report;
  const int n = algebra.dim();
  for (int x1 = 1; x1 <= n; ++x1) {
    for (int x2 = 1; x2 <= n; ++x2) {
      for (int x3 = 1; x3 <= n; ++x3) {
        for (int x4 = 1; x4 <= n; ++x4) {
          for (int x5 = 1; x5 <= n; ++x5) {
            Vector d = fi_defect(algebra, x1, x2, x3, x4, x5);
            if (!is_zero(d)) report.violations.push_back({{x1, x2, x3, x4, x5}, std::move(d)});
          }
        }
      }
    }
  }
  return report;
}

FiReport check_adjoint_derivation(const ThreeLieAlgebra& algebra) {
  FiReport report;
  const int n = algebra.dim();
  for (int x1 = 1; x1 <= n; ++x1) {
    for (int x2 = x1 + 1; x2 <= n; ++x2) {
      const Matrix ad = algebra.adjoint(x1, x2);
      for (int x3 = 1; x3 <= n; ++x3) {
        for (int x4 = x3 + 1; x4 <= n; ++x4) {
          for (int x5 = x4 + 1; x5 <= n; ++x5) {
            const Vector e3 = basis_vector(n, x3);
            const Vector e4 = basis_vector(n, x4);
            const Vector e5 = basis_vector(n, x5);
            Vector lhs = ad.apply(algebra.basis_bracket(x3, x4, x5));
            Vector rhs = algebra.bracket(ad.apply(e3), e4, e5) + algebra.bracket(e3, ad.apply(e4), e5) +
                         algebra.bracket(e3, e4, ad.apply(e5));
            Vector d = lhs - rhs;
            if (!is_zero(d)) report.violations.push_back({{x1, x2, x3, x4, x5}, std::move(d)});
          }
        }
      }
    }
  }
  return report;
}

// ------------------------------------------------------------ Representation

Representation::Representation(int algebra_dim, int carrier_dim)
    : algebra_dim_(algebra_dim), carrier_dim_(carrier_dim) {
  if (algebra_dim < 1 || carrier_dim < 1) throw std::invalid_argument("representation dimensions must be positive");
}

void Representation::set(int s, int t, Matrix value) {
  if (s < 1 || t < 1 || s > algebra_dim_ || t > algebra_dim_) throw std::out_of_range("representation index");
  if (s == t) throw std::invalid_argument("rho(x, x) is zero by skew-symmetry");
  const auto c = static_cast<std::size_t>(carrier_dim_);
  if (value.rows() != c || value.cols() != c) throw std::invalid_argument("representation matrix has wrong size");
  if (s > t) {
    std::swap(s, t);
    value = -value;
  }
  if (value.is_zero()) {
    maps_.erase({s, t});
  } else {
    maps_[{s, t}] = std::move(value);
  }
}

Matrix Representation::operator()(int s, int t) const {
  if (s < 1 || t < 1 || s > algebra_dim_ || t > algebra_dim_) throw std::out_of_range("representation index");
  const auto c = static_cast<std::size_t>(carrier_dim_);
  if (s == t) return Matrix(c, c);
  const bool flip = s > t;
  auto it = maps_.find(flip ? std::pair{t, s} : std::pair{s, t});
  if (it == maps_.end()) return Matrix(c, c);
  return flip ? -it->second : it->second;
}

Matrix Representation::operator()(const Vector& x, const Vector& y) const {
  const auto c = static_cast<std::size_t>(carrier_dim_);
  Matrix out(c, c);
  for (const auto& [key, m] : maps_) {
    const auto s = static_cast<std::size_t>(key.first - 1);
    const auto t = static_cast<std::size_t>(key.second - 1);
    Scalar coeff = x[s] * y[t] - x[t] * y[s];
    if (!coeff.is_zero()) out += coeff * m;
  }
  return out;
}

Representation adjoint_representation(const ThreeLieAlgebra& algebra) {
  Representation rho(algebra.dim(), algebra.dim());
  for (int s = 1; s <= algebra.dim(); ++s) {
    for (int t = s + 1; t <= algebra.dim(); ++t) rho.set(s, t, algebra.adjoint(s, t));
  }
  return rho;
}

Representation dual_representation(const Representation& rho) {
  Representation dual(rho.algebra_dim(), rho.carrier_dim());
  for (int s = 1; s <= rho.algebra_dim(); ++s) {
    for (int t = s + 1; t <= rho.algebra_dim(); ++t) dual.set(s, t, -rho(s, t).transpose());
  }
  return dual;
}

RepresentationReport check_representation(const ThreeLieAlgebra& algebra, const Representation& rho) {
  if (rho.algebra_dim() != algebra.dim()) throw std::invalid_argument("representation is for a different algebra");
  RepresentationReport report;
  const int n = algebra.dim();
  auto e = [n](int i) { return basis_vector(n, i); };
  for (int x1 = 1; x1 <= n; ++x1) {
    for (int x2 = 1; x2 <= n; ++x2) {
      for (int x3 = 1; x3 <= n; ++x3) {
        for (int x4 = 1; x4 <= n; ++x4) {
          const Matrix r12 = rho(x1, x2);
          const Matrix r34 = rho(x3, x4);
          const Matrix b123_4 = rho(algebra.basis_bracket(x1, x2, x3), e(x4));
          const Matrix b124_3 = rho(algebra.basis_bracket(x1, x2, x4), e(x3));
          Matrix first = r12 * r34 - r34 * r12 - b123_4 + b124_3;
          if (!first.is_zero()) report.defects.push_back({1, {x1, x2, x3, x4}, std::move(first)});
          Matrix second = b123_4 - r12 * r34 - rho(x2, x3) * rho(x1, x4) - rho(x3, x1) * rho(x2, x4);
          if (!second.is_zero()) report.defects.push_back({2, {x1, x2, x3, x4}, std::move(second)});
        }
      }
    }
  }
  return report;
}

// ------------------------------------------------------------------ Catalog

namespace {

Vector vec(int n, std::initializer_list<std::pair<int, Scalar>> entries) {
  Vector v(static_cast<std::size_t>(n));
  for (const auto& [i, s] : entries) v[static_cast<std::size_t>(i - 1)] = s;
  return v;
}

std::vector<CatalogEntry> build_catalog() {
  const Scalar one(1);
  const Scalar alpha = Scalar::variable("alpha");
  std::vector<CatalogEntry> out;
  out.push_back({"dim3", ThreeLieAlgebra(3, {{{1, 2, 3}, vec(3, {{1, one}})}}), {}, {}});
  out.push_back({"dim4-1",
                 ThreeLieAlgebra(4, {{{1, 2, 3}, vec(4, {{4, one}})},
                                     {{1, 2, 4}, vec(4, {{3, one}})},
                                     {{1, 3, 4}, vec(4, {{2, one}})},
                                     {{2, 3, 4}, vec(4, {{1, one}})}}),
                 {},
                 {}});
  out.push_back({"dim4-2", ThreeLieAlgebra(4, {{{1, 2, 3}, vec(4, {{1, one}})}}), {}, {}});
  out.push_back({"dim4-3", ThreeLieAlgebra(4, {{{2, 3, 4}, vec(4, {{1, one}})}}), {}, {}});
  out.push_back({"dim4-4",
                 ThreeLieAlgebra(4, {{{2, 3, 4}, vec(4, {{1, one}})}, {{1, 3, 4}, vec(4, {{2, one}})}}),
                 {},
                 {}});
  out.push_back({"dim4-5",
                 ThreeLieAlgebra(4, {{{2, 3, 4}, vec(4, {{2, one}})}, {{1, 3, 4}, vec(4, {{1, one}})}}),
                 {},
                 {}});
  out.push_back({"dim4-6",
                 ThreeLieAlgebra(4, {{{2, 3, 4}, vec(4, {{1, alpha}, {2, one}})}, {{1, 3, 4}, vec(4, {{2, one}})}}),
                 {"alpha"},
                 {"alpha != 0"}});
  out.push_back({"dim4-7",
                 ThreeLieAlgebra(4, {{{1, 2, 4}, vec(4, {{3, one}})},
                                     {{1, 3, 4}, vec(4, {{2, one}})},
                                     {{2, 3, 4}, vec(4, {{1, one}})}}),
                 {},
                 {}});
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

}  // namespace

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : catalog()) out.push_back(e.id);
    return out;
  }();
  return ids;
}

const CatalogEntry& catalog_entry(std::string_view id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  throw std::invalid_argument("unknown catalog id '" + std::string(id) + "'");
}

}  // namespace threelie
