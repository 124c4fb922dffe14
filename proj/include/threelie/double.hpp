#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "threelie/algebra.hpp"
#include "threelie/matrix.hpp"
#include "threelie/tensor.hpp"

namespace threelie {

struct ConstraintDefect {
  /// (a, b, c, p, q, r).
  std::array<int, 6> indices;
  Scalar defect;
};

struct ConstraintReport {
  std::vector<ConstraintDefect> defects;
  bool passed() const { return defects.empty(); }
};

/// sum_i T^i_{abc} C_i^{pqr} = sum_i (T^r_{bci} C_a^{pqi} + T^r_{cai} C_b^{pqi} + T^r_{abi} C_c^{pqi})
/// for all p, q, r and a<b<c. Throws std::invalid_argument if delta is not
/// alternating or the dimensions differ.
ConstraintReport constraint_eq26(const ThreeLieAlgebra& algebra, const Coproduct& delta);
/// sum_i T^i_{abc} C_i^{pqr} = sum_i (T^r_{bci} C_a^{pqi} + T^q_{bci} C_a^{pir} + T^p_{bci} C_a^{iqr})
/// for all a, b<c and p<q<r. Same preconditions.
ConstraintReport constraint_eq27(const ThreeLieAlgebra& algebra, const Coproduct& delta);

struct DeltaFamily {
  std::string catalog_id;
  std::vector<std::string> parameters;
  Coproduct coproduct;
};

/// The classified antisymmetric solutions of the first constraint for a
/// catalog algebra. The family for dim4-4 uses -k e1^e2^e4 in Delta(e4);
/// dim3 has only the zero family.
DeltaFamily delta_family(std::string_view catalog_id);
/// The families as originally printed, which differ from delta_family only
/// for dim4-4 (-k e1^e3^e4 in Delta(e4)).
DeltaFamily printed_delta_family(std::string_view catalog_id);

/// Unknowns C_i^{pqr} with p<q<r, ordered by i, then (p,q,r) lexicographically.
std::vector<std::pair<int, Triple>> coproduct_unknowns(int dim);
/// Coefficient matrix of the first constraint in those unknowns; one row per
/// equation (p,q,r, a<b<c).
Matrix eq26_system(const ThreeLieAlgebra& algebra);

struct FamilyCheck {
  DeltaFamily family;
  std::size_t null_space_dimension = 0;
  /// Rank of the linear map from the family's parameters to the unknowns.
  std::size_t family_rank = 0;
  bool family_in_null_space = false;
  /// The family lies in the null space and spans it.
  bool complete() const { return family_in_null_space && family_rank == null_space_dimension; }
};

/// Returns delta_family(id) together with an exact null-space computation of
/// eq26_system that confirms the family is the full solution space.
FamilyCheck solve_delta_families(std::string_view catalog_id);

/// Coordinates of delta in coproduct_unknowns order.
Vector coproduct_coordinates(const Coproduct& delta);
/// Coefficient matrix of Scalars that are linear forms in `parameters`
/// (one row per form). Throws if a form is not linear in them.
Matrix linear_coefficients(const std::vector<Scalar>& forms, const std::vector<std::string>& parameters);
/// Dimension of the parameter subspace on which both constraints hold for a
/// family linear in its parameters; 0 means every parameter is forced to 0.
std::size_t surviving_parameter_dimension(const ThreeLieAlgebra& algebra, const DeltaFamily& family);

/// Phi_{e_s,e_t} = ad (x) id (x) id + id (x) ad (x) id + id (x) id (x) ad.
Tensor phi_action(const ThreeLieAlgebra& algebra, int s, int t, const Tensor& w);

class BilinearForm {
 public:
  explicit BilinearForm(Matrix gram);
  /// [[0, I], [I, 0]] on A + A*.
  static BilinearForm hyperbolic(int base_dim);

  int dim() const { return static_cast<int>(gram_.rows()); }
  const Matrix& gram() const { return gram_; }
  Scalar operator()(const Vector& x, const Vector& y) const;
  bool is_symmetric() const;
  bool is_nondegenerate() const;

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  Matrix gram_;
};

struct DoubleAlgebra {
  int base_dim;
  /// Basis e_1..e_n, f_1..f_n.
  ThreeLieAlgebra algebra;
  BilinearForm form;
  /// Optional provenance for serialization.
  std::string base_id;
  std::vector<std::string> parameters;
};

/// The bracket on A + A* built from [.,.,.], the dual bracket and both
/// coadjoint actions, evaluated on arbitrary 2n-vectors.
Vector double_bracket(const ThreeLieAlgebra& algebra, const ThreeLieAlgebra& dual, const Vector& u, const Vector& v,
                      const Vector& w);
/// Structure constants of that bracket. Nothing about the result is checked.
DoubleAlgebra assemble_double(const ThreeLieAlgebra& algebra, const ThreeLieAlgebra& dual);
/// assemble_double after checking that the dimensions match and that the
/// dual bracket satisfies the Fundamental Identity (std::invalid_argument).
DoubleAlgebra build_double(const ThreeLieAlgebra& algebra, const ThreeLieAlgebra& dual);

struct ManinReport {
  FiReport fundamental_identity;
  bool symmetric = false;
  bool nondegenerate = false;
  /// Basis 4-tuples where ([x1,x2,x3],x4) + ([x1,x2,x4],x3) != 0.
  std::vector<std::array<int, 4>> invariance_violations;
  /// Basis pairs inside one half with nonzero pairing.
  std::vector<std::array<int, 2>> isotropy_violations;
  /// Basis triples inside one half whose bracket leaves it.
  std::vector<Triple> closure_violations;
  /// Basis triples (x1,y1,x2) or (x2,y2,x1) with a nonzero forbidden projection.
  std::vector<Triple> projection_violations;

  /// (name, passed) for the six checks, in a fixed order.
  std::vector<std::pair<std::string, bool>> checks() const;
  bool passed() const;
};

ManinReport check_manin_triple(const DoubleAlgebra& d);

}  // namespace threelie
