#pragma once

#include <optional>
#include <string>
#include <vector>

#include "threelie/algebra.hpp"
#include "threelie/tensor.hpp"

namespace threelie {

/// A linear map A -> A (x) A (x) A given on the basis.
using LinearMapToTensor3 = Coproduct;

/// ad acting on one slot of A (x) A (x) A, the others fixed.
enum class SlotAction { First = 1, Second = 2, Third = 3 };

/// rho(e_s, e_t) applied to w.
Tensor slot_action(const ThreeLieAlgebra& algebra, SlotAction slot, int s, int t, const Tensor& w);
/// The same action as an explicit representation on the n^3-dimensional
/// carrier, coordinates ordered by flatten().
Representation slot_representation(const ThreeLieAlgebra& algebra, SlotAction slot);

/// Coordinates of an arity-3 tensor, index (p,q,r) at (p-1)n^2 + (q-1)n + (r-1).
Vector flatten(const Tensor& t);
Tensor unflatten(const Vector& v, int dim);

struct CocycleDefect {
  Triple tuple;
  Tensor defect;
};

struct CocycleReport {
  std::vector<CocycleDefect> defects;
  bool passed() const { return defects.empty(); }
};

/// f([x1,x2,x3]) = rho(x1,x2)f(x3) + rho(x2,x3)f(x1) + rho(x3,x1)f(x2) on
/// basis triples x1<x2<x3.
CocycleReport check_one_cocycle(const ThreeLieAlgebra& algebra, SlotAction slot, const LinearMapToTensor3& f);
/// Same check for an arbitrary representation on the n^3-dimensional carrier.
CocycleReport check_one_cocycle(const ThreeLieAlgebra& algebra, const Representation& rho,
                                const LinearMapToTensor3& f);

/// Structure constants T*^i_{pqr} = C_i^{pqr} of the dual bracket on A*.
/// Throws std::invalid_argument if some component is not fully antisymmetric.
ThreeLieAlgebra dual_algebra(const Coproduct& delta);

struct LocalCocycleReport {
  CocycleReport cocycle1;
  CocycleReport cocycle2;
  CocycleReport cocycle3;
  bool alternating = true;
  /// Present only when the sum is alternating, so the dual can be built.
  std::optional<FiReport> dual_fi;
  /// Names of the axioms that fail, in check order.
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Delta_i is a 1-cocycle for the i-th slot action, and Delta_1+Delta_2+Delta_3
/// dualizes to a 3-Lie algebra on A*.
LocalCocycleReport check_local_cocycle_bialgebra(const ThreeLieAlgebra& algebra, const LinearMapToTensor3& d1,
                                                 const LinearMapToTensor3& d2, const LinearMapToTensor3& d3);

}  // namespace threelie
