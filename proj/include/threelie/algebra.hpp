#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "threelie/matrix.hpp"
#include "threelie/scalar.hpp"

namespace threelie {

using Triple = std::array<int, 3>;

/// Sign of the permutation sorting `idx` (0 if an index repeats) together
/// with the sorted triple.
std::pair<int, Triple> canonical_triple(Triple idx);

/// A 3-Lie algebra given by structure constants T^m_{ijk} in a fixed basis
/// e_1..e_n. Only brackets with i<j<k are stored; any other index order is
/// resolved through the permutation sign, and repeated indices give zero.
/// The Fundamental Identity is not assumed: use check_fundamental_identity.
class ThreeLieAlgebra {
 public:
  explicit ThreeLieAlgebra(int dim);
  /// Keys may use any order of distinct indices (the value is re-signed);
  /// a repeated index throws std::invalid_argument, an out-of-range one
  /// std::out_of_range.
  ThreeLieAlgebra(int dim, const std::map<Triple, Vector>& brackets);

  int dim() const { return dim_; }
  /// Nonzero brackets, keyed by canonical i<j<k.
  const std::map<Triple, Vector>& brackets() const { return brackets_; }

  /// [e_i, e_j, e_k], 1-based, any order.
  Vector basis_bracket(int i, int j, int k) const;
  /// T^m_{ijk}.
  Scalar structure_constant(int i, int j, int k, int m) const;
  /// Trilinear extension to arbitrary coordinate vectors.
  Vector bracket(const Vector& x, const Vector& y, const Vector& z) const;
  /// Matrix of ad_{e_s,e_t} = [e_s, e_t, .], column j holding [e_s,e_t,e_j].
  Matrix adjoint(int s, int t) const;

  bool is_abelian() const { return brackets_.empty(); }
  ThreeLieAlgebra substitute(const std::map<std::string, Rational>& bindings) const;

  friend bool operator==(const ThreeLieAlgebra&, const ThreeLieAlgebra&) = default;

 private:
  void check_index(int i) const;

  int dim_;
  std::map<Triple, Vector> brackets_;
};

struct FiViolation {
  /// (x1, x2, x3, x4, x5) as basis indices.
  std::array<int, 5> tuple;
  Vector defect;
};

struct FiReport {
  std::vector<FiViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// Fundamental Identity on basis tuples with x1<x2 and x3<x4<x5. The other
/// orderings follow by antisymmetry in (x1,x2) and in (x3,x4,x5), so this is
/// equivalent to the full check; violations are listed lexicographically.
FiReport check_fundamental_identity(const ThreeLieAlgebra& algebra);
/// Same identity on every basis 5-tuple. Only used to cross-check the
/// reduced loop.
FiReport check_fundamental_identity_all_tuples(const ThreeLieAlgebra& algebra);
/// The identity written as "ad_{x1,x2} is a derivation", using the adjoint
/// matrices instead of nested brackets. Agrees with the function above
/// tuple for tuple.
FiReport check_adjoint_derivation(const ThreeLieAlgebra& algebra);

/// A skew-symmetric bilinear map rho: A x A -> gl(V), stored on s<t.
class Representation {
 public:
  Representation(int algebra_dim, int carrier_dim);

  int algebra_dim() const { return algebra_dim_; }
  int carrier_dim() const { return carrier_dim_; }
  /// Sets rho(e_s, e_t); rho(e_t, e_s) becomes its negative. s == t throws.
  void set(int s, int t, Matrix value);
  /// rho(e_s, e_t), zero matrix when s == t.
  Matrix operator()(int s, int t) const;
  /// rho(x, y) for coordinate vectors.
  Matrix operator()(const Vector& x, const Vector& y) const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  int algebra_dim_;
  int carrier_dim_;
  std::map<std::pair<int, int>, Matrix> maps_;
};

Representation adjoint_representation(const ThreeLieAlgebra& algebra);
/// rho*(s,t) = -rho(s,t)^T, i.e. <rho*(x1,x2) a, v> = -<a, rho(x1,x2) v>.
Representation dual_representation(const Representation& rho);

struct RepresentationDefect {
  int condition;  // 1 or 2
  std::array<int, 4> tuple;
  Matrix defect;
};

struct RepresentationReport {
  std::vector<RepresentationDefect> defects;
  bool passed() const { return defects.empty(); }
};

/// Both representation axioms on every basis 4-tuple.
RepresentationReport check_representation(const ThreeLieAlgebra& algebra, const Representation& rho);

struct CatalogEntry {
  std::string id;
  ThreeLieAlgebra algebra;
  std::vector<std::string> parameters;
  /// Human-readable side conditions, e.g. "alpha != 0". Never used to
  /// simplify anything.
  std::vector<std::string> constraints;
};

/// dim3, dim4-1 ... dim4-7.
const std::vector<std::string>& catalog_ids();
/// Throws std::invalid_argument for an unknown id.
const CatalogEntry& catalog_entry(std::string_view id);

}  // namespace threelie
