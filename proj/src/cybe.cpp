#include "threelie/cybe.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace threelie {

namespace {

void check_dims(const ThreeLieAlgebra& algebra, const RMatrix& r) {
  if (algebra.dim() != r.dim()) throw std::invalid_argument("r-matrix and algebra dimensions differ");
}

void require_skew(const RMatrix& r) {
  if (!r.is_skew()) throw std::invalid_argument("r-matrix is not skew-symmetric");
}

/// y_i = sum_j a^{ij} e_j.
Vector row(const RMatrix& r, int i) {
  Vector y(static_cast<std::size_t>(r.dim()));
  for (int j = 1; j <= r.dim(); ++j) y[static_cast<std::size_t>(j - 1)] = r(i, j);
  return y;
}

}  // namespace

Scalar d_coefficient(const RMatrix& r, const Triple& upper, const Triple& lower) {
  Scalar out;
  for (const auto& perm : symmetric_group(3)) {
    Scalar term(perm.sign);
    for (std::size_t s = 0; s < 3; ++s) {
      term *= r(upper[static_cast<std::size_t>(perm.images[s])], lower[s]);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

Scalar minor(const RMatrix& r, int i, int j, int p, int q) { return r(i, p) * r(j, q) - r(j, p) * r(i, q); }

Tensor cybe_residual_naive(const ThreeLieAlgebra& algebra, const RMatrix& r) {
  check_dims(algebra, r);
  const int n = algebra.dim();
  std::vector<Vector> x;
  std::vector<Vector> y;
  for (int i = 1; i <= n; ++i) {
    x.push_back(basis_vector(n, i));
    y.push_back(row(r, i));
  }
  Tensor out(4, n);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(y[i])) continue;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (is_zero(y[j])) continue;
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (is_zero(y[k])) continue;
        out += tensor_product({algebra.bracket(x[i], x[j], x[k]), y[i], y[j], y[k]});
        out += tensor_product({x[i], algebra.bracket(y[i], x[j], x[k]), y[j], y[k]});
        out += tensor_product({x[i], x[j], algebra.bracket(y[i], y[j], x[k]), y[k]});
        out += tensor_product({x[i], x[j], x[k], algebra.bracket(y[i], y[j], y[k])});
      }
    }
  }
  return out;
}

Tensor cybe_residual_skew(const ThreeLieAlgebra& algebra, const RMatrix& r) {
  check_dims(algebra, r);
  require_skew(r);
  const int n = algebra.dim();
  // Collect the coefficient of e_l (x) wedge(e_p,e_q,e_r) first, then expand.
  std::map<Index, Scalar> coeffs;
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      for (int s = q + 1; s <= n; ++s) {
        for (const auto& [ijk, value] : algebra.brackets()) {
          Scalar d = d_coefficient(r, ijk, {p, q, s});
          if (d.is_zero()) continue;
          for (int l = 1; l <= n; ++l) {
            const Scalar& t = value[static_cast<std::size_t>(l - 1)];
            if (t.is_zero()) continue;
            Scalar& slot = coeffs[{l, p, q, s}];
            slot.add_scaled(d, t);
          }
        }
      }
    }
  }
  Tensor out(4, n);
  for (const auto& [idx, c] : coeffs) {
    if (!c.is_zero()) out += c * wedge_basis(n, idx);
  }
  return out;
}

Scalar to_skew_alphabet(const Scalar& s) {
  static const std::regex pattern("a_([0-9]+)_([0-9]+)");
  std::map<std::string, Scalar> bindings;
  for (const auto& name : s.variables()) {
    std::smatch m;
    if (!std::regex_match(name, m, pattern)) continue;
    const int i = std::stoi(m[1]);
    const int j = std::stoi(m[2]);
    if (i == j) {
      bindings.emplace(name, Scalar());
    } else if (i > j) {
      bindings.emplace(name, -Scalar::variable(rmatrix_parameter(j, i)));
    }
  }
  return bindings.empty() ? s : s.substitute(bindings);
}

std::vector<Scalar> cybe_conditions(const ThreeLieAlgebra& algebra) {
  const Tensor residual = cybe_residual_skew(algebra, RMatrix::symbolic_skew(algebra.dim()));
  std::vector<Scalar> out;
  for (const auto& [idx, c] : residual.terms()) {
    if (!std::is_sorted(idx.begin(), idx.end()) || std::adjacent_find(idx.begin(), idx.end()) != idx.end()) continue;
    Scalar g = to_skew_alphabet(c).normalized_up_to_scale();
    if (g.is_zero()) continue;
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
  }
  return out;
}

InducedComponents induced_coproduct_components(const ThreeLieAlgebra& algebra, const RMatrix& r, SlotOrder order) {
  check_dims(algebra, r);
  const int n = algebra.dim();
  InducedComponents out{Coproduct(n), Coproduct(n), Coproduct(n)};
  std::vector<Vector> y;
  for (int i = 1; i <= n; ++i) y.push_back(row(r, i));
  for (int x = 1; x <= n; ++x) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        Vector b = algebra.basis_bracket(x, i, j);
        if (is_zero(b)) continue;
        const Vector& yi = y[static_cast<std::size_t>(i - 1)];
        const Vector& yj = y[static_cast<std::size_t>(j - 1)];
        if (order == SlotOrder::Proof) {
          out.delta1(x) += tensor_product({b, yi, yj});
          out.delta2(x) += tensor_product({yj, b, yi});
          out.delta3(x) += tensor_product({yi, yj, b});
        } else {
          out.delta1(x) += tensor_product({b, yj, yi});
          out.delta2(x) += tensor_product({yi, b, yj});
          out.delta3(x) += tensor_product({yj, yi, b});
        }
      }
    }
  }
  return out;
}

Coproduct induced_coproduct_wedge(const ThreeLieAlgebra& algebra, const RMatrix& r) {
  check_dims(algebra, r);
  require_skew(r);
  const int n = algebra.dim();
  Coproduct out(n);
  for (int x = 1; x <= n; ++x) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        Vector b = algebra.basis_bracket(x, i, j);
        if (is_zero(b)) continue;
        for (int p = 1; p <= n; ++p) {
          for (int q = p + 1; q <= n; ++q) {
            Scalar d = minor(r, i, j, p, q);
            if (d.is_zero()) continue;
            out(x) += d * wedge({b, basis_vector(n, p), basis_vector(n, q)});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace threelie
