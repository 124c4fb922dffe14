#include "threelie/cocycle.hpp"

#include <stdexcept>

namespace threelie {

Tensor slot_action(const ThreeLieAlgebra& algebra, SlotAction slot, int s, int t, const Tensor& w) {
  if (w.arity() != 3 || w.dim() != algebra.dim()) throw std::invalid_argument("slot action needs a 3-tensor on A");
  return apply_to_slot(w, static_cast<int>(slot), algebra.adjoint(s, t));
}

Vector flatten(const Tensor& t) {
  if (t.arity() != 3) throw std::invalid_argument("flatten expects a 3-tensor");
  const auto n = static_cast<std::size_t>(t.dim());
  Vector v(n * n * n);
  for (const auto& [idx, c] : t.terms()) {
    const auto p = static_cast<std::size_t>(idx[0] - 1);
    const auto q = static_cast<std::size_t>(idx[1] - 1);
    const auto r = static_cast<std::size_t>(idx[2] - 1);
    v[(p * n + q) * n + r] = c;
  }
  return v;
}

Tensor unflatten(const Vector& v, int dim) {
  const auto n = static_cast<std::size_t>(dim);
  if (v.size() != n * n * n) throw std::invalid_argument("unflatten: wrong vector length");
  Tensor t(3, dim);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    const int p = static_cast<int>(k / (n * n)) + 1;
    const int q = static_cast<int>((k / n) % n) + 1;
    const int r = static_cast<int>(k % n) + 1;
    t.add({p, q, r}, v[k]);
  }
  return t;
}

Representation slot_representation(const ThreeLieAlgebra& algebra, SlotAction slot) {
  const int n = algebra.dim();
  const auto carrier = static_cast<std::size_t>(n * n * n);
  Representation rho(n, n * n * n);
  for (int s = 1; s <= n; ++s) {
    for (int t = s + 1; t <= n; ++t) {
      Matrix m(carrier, carrier);
      for (std::size_t col = 0; col < carrier; ++col) {
        Vector unit(carrier);
        unit[col] = Scalar(1);
        Vector image = flatten(slot_action(algebra, slot, s, t, unflatten(unit, n)));
        for (std::size_t row = 0; row < carrier; ++row) m(row, col) = image[row];
      }
      rho.set(s, t, std::move(m));
    }
  }
  return rho;
}

namespace {

template <typename Act>
CocycleReport check_cocycle_with(const ThreeLieAlgebra& algebra, const LinearMapToTensor3& f, Act act) {
  if (f.dim() != algebra.dim()) throw std::invalid_argument("cocycle map and algebra dimensions differ");
  CocycleReport report;
  const int n = algebra.dim();
  for (int x1 = 1; x1 <= n; ++x1) {
    for (int x2 = x1 + 1; x2 <= n; ++x2) {
      for (int x3 = x2 + 1; x3 <= n; ++x3) {
        Tensor defect = f.apply(algebra.basis_bracket(x1, x2, x3));
        defect -= act(x1, x2, f(x3));
        defect -= act(x2, x3, f(x1));
        defect -= act(x3, x1, f(x2));
        if (!defect.is_zero()) report.defects.push_back({{x1, x2, x3}, std::move(defect)});
      }
    }
  }
  return report;
}

}  // namespace

CocycleReport check_one_cocycle(const ThreeLieAlgebra& algebra, SlotAction slot, const LinearMapToTensor3& f) {
  return check_cocycle_with(algebra, f,
                            [&](int s, int t, const Tensor& w) { return slot_action(algebra, slot, s, t, w); });
}

CocycleReport check_one_cocycle(const ThreeLieAlgebra& algebra, const Representation& rho,
                                const LinearMapToTensor3& f) {
  const int n = algebra.dim();
  if (rho.algebra_dim() != n || rho.carrier_dim() != n * n * n) {
    throw std::invalid_argument("representation must act on the n^3-dimensional tensor space");
  }
  return check_cocycle_with(algebra, f, [&](int s, int t, const Tensor& w) {
    return unflatten(rho(s, t).apply(flatten(w)), n);
  });
}

ThreeLieAlgebra dual_algebra(const Coproduct& delta) {
  if (!delta.is_alternating()) throw std::invalid_argument("coproduct has a component that is not fully antisymmetric");
  const int n = delta.dim();
  std::map<Triple, Vector> brackets;
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      for (int r = q + 1; r <= n; ++r) {
        Vector v(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = delta.coefficient(i, p, q, r);
        if (!is_zero(v)) brackets.emplace(Triple{p, q, r}, std::move(v));
      }
    }
  }
  return ThreeLieAlgebra(n, brackets);
}

LocalCocycleReport check_local_cocycle_bialgebra(const ThreeLieAlgebra& algebra, const LinearMapToTensor3& d1,
                                                 const LinearMapToTensor3& d2, const LinearMapToTensor3& d3) {
  LocalCocycleReport report;
  report.cocycle1 = check_one_cocycle(algebra, SlotAction::First, d1);
  report.cocycle2 = check_one_cocycle(algebra, SlotAction::Second, d2);
  report.cocycle3 = check_one_cocycle(algebra, SlotAction::Third, d3);
  if (!report.cocycle1.passed()) report.failures.emplace_back("delta1 is not a 1-cocycle for ad(x)id(x)id");
  if (!report.cocycle2.passed()) report.failures.emplace_back("delta2 is not a 1-cocycle for id(x)ad(x)id");
  if (!report.cocycle3.passed()) report.failures.emplace_back("delta3 is not a 1-cocycle for id(x)id(x)ad");
  const Coproduct delta = d1 + d2 + d3;
  report.alternating = delta.is_alternating();
  if (!report.alternating) {
    report.failures.emplace_back("delta is not fully antisymmetric");
    return report;
  }
  report.dual_fi = check_fundamental_identity(dual_algebra(delta));
  if (!report.dual_fi->passed()) report.failures.emplace_back("dual bracket violates the Fundamental Identity");
  return report;
}

}  // namespace threelie
