#pragma once

#include <vector>

#include "threelie/algebra.hpp"
#include "threelie/tensor.hpp"

namespace threelie {

/// D^{ijk}_{pqr} = sum over sigma in S3 of sgn(sigma) a^{sigma(i)p} a^{sigma(j)q} a^{sigma(k)r}.
Scalar d_coefficient(const RMatrix& r, const Triple& upper, const Triple& lower);
/// D^{ij}_{pq} = a^{ip} a^{jq} - a^{jp} a^{iq}.
Scalar minor(const RMatrix& r, int i, int j, int p, int q);

/// [[r,r,r]] from the four-sum expansion with r = sum_i e_i (x) y_i. Works
/// for any r, skew or not.
Tensor cybe_residual_naive(const ThreeLieAlgebra& algebra, const RMatrix& r);
/// [[r,r,r]] = sum_{p<q<r} sum_{i<j<k} sum_l D^{ijk}_{pqr} T^l_{ijk} e_l^e_p^e_q^e_r.
/// Throws std::invalid_argument unless r is skew-symmetric.
Tensor cybe_residual_skew(const ThreeLieAlgebra& algebra, const RMatrix& r);

/// Rewrites every a_j_i with j > i as -a_i_j.
Scalar to_skew_alphabet(const Scalar& s);

/// Distinct coefficients (up to rational multiples, each divided by its
/// leading coefficient) of the residual for a fully symbolic skew r, read in
/// the basis e_l^e_p^e_q^e_r with l<p<q<r. Empty means every skew r solves
/// the equation.
std::vector<Scalar> cybe_conditions(const ThreeLieAlgebra& algebra);

/// Slot placement of the bracket in the summands of Delta_1.
enum class SlotOrder {
  /// [x,x_i,x_j] (x) y_i (x) y_j; its sum is the wedge formula.
  Proof,
  /// [x,x_i,x_j] (x) y_j (x) y_i; its sum is the negative of the wedge formula.
  Displayed,
};

struct InducedComponents {
  Coproduct delta1;
  Coproduct delta2;
  Coproduct delta3;
  Coproduct sum() const { return delta1 + delta2 + delta3; }
};

/// Delta_1, Delta_2 = phi13 phi12 Delta_1 and Delta_3 = phi12 phi13 Delta_1,
/// each summed directly over i, j.
InducedComponents induced_coproduct_components(const ThreeLieAlgebra& algebra, const RMatrix& r,
                                               SlotOrder order = SlotOrder::Proof);
/// Delta(x) = sum_{i<j} sum_{p<q} D^{ij}_{pq} [x,e_i,e_j]^e_p^e_q. Throws
/// std::invalid_argument unless r is skew-symmetric.
Coproduct induced_coproduct_wedge(const ThreeLieAlgebra& algebra, const RMatrix& r);

}  // namespace threelie
