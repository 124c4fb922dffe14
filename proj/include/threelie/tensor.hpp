#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "threelie/matrix.hpp"
#include "threelie/scalar.hpp"

namespace threelie {

using Index = std::vector<int>;

/// Element of the k-th tensor power of an n-dimensional space. Keys are
/// 1-based index tuples; zero coefficients are never stored.
class Tensor {
 public:
  Tensor(int arity, int dim);

  int arity() const { return arity_; }
  int dim() const { return dim_; }
  const std::map<Index, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Index& idx) const;
  void add(const Index& idx, const Scalar& coeff);

  Tensor substitute(const std::map<std::string, Rational>& bindings) const;

  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator-(const Tensor& t);
  friend Tensor operator*(const Scalar& c, const Tensor& t);
  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  void check_index(const Index& idx) const;

  int arity_;
  int dim_;
  std::map<Index, Scalar> terms_;
};

/// v_1 (x) v_2 (x) ... (x) v_k.
Tensor tensor_product(const std::vector<Vector>& vectors);
Tensor tensor_product(const Tensor& a, const Tensor& b);

/// Signed sum over S_k of the permuted tensor products, without a 1/k!
/// factor, so wedge(x, y) = x(x)y - y(x)x.
Tensor wedge(const std::vector<Vector>& vectors);
/// wedge of basis vectors e_{i1}, ..., e_{ik}.
Tensor wedge_basis(int dim, const Index& indices);

/// phi_pq: swaps tensor slots p and q (1-based). phi_pp is the identity.
Tensor permute_factors(const Tensor& t, int p, int q);
/// True iff swapping any two adjacent slots negates t.
bool is_fully_antisymmetric(const Tensor& t);
/// Applies the linear map m to one slot (1-based).
Tensor apply_to_slot(const Tensor& t, int slot, const Matrix& m);

struct Permutation {
  std::vector<int> images;  // 0-based images of 0..k-1
  int sign;
};
/// All k! permutations (1 <= k <= 6) in lexicographic order of images.
const std::vector<Permutation>& symmetric_group(int k);

/// Coefficient matrix a^{ij} of r = sum a^{ij} e_i (x) e_j. Access is 1-based.
class RMatrix {
 public:
  explicit RMatrix(int dim);
  explicit RMatrix(Matrix entries);

  /// a^{ij} = a_i_j for every i, j (diagonal included).
  static RMatrix symbolic(int dim);
  /// a^{ij} = a_i_j for i<j, a^{ji} = -a_i_j, zero diagonal.
  static RMatrix symbolic_skew(int dim);
  /// Fills a^{ji} = -a^{ij} from entries given on i<j; i >= j throws.
  static RMatrix skew_from_upper(int dim, const std::map<std::pair<int, int>, Scalar>& upper);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Scalar& operator()(int i, int j) const;
  Scalar& operator()(int i, int j);
  const Matrix& entries() const { return entries_; }
  bool is_skew() const;
  bool is_zero() const { return entries_.is_zero(); }
  RMatrix substitute(const std::map<std::string, Rational>& bindings) const;

  friend bool operator==(const RMatrix&, const RMatrix&) = default;

 private:
  Matrix entries_;
};

/// Linear map A -> A (x) A (x) A, stored per basis vector: component i holds
/// Delta(e_i) = sum C_i^{pqr} e_p (x) e_q (x) e_r.
class Coproduct {
 public:
  explicit Coproduct(int dim);

  int dim() const { return dim_; }
  /// Delta(e_i), 1-based.
  const Tensor& operator()(int i) const;
  Tensor& operator()(int i);
  Scalar coefficient(int i, int p, int q, int r) const;
  /// Delta(x) for a coordinate vector.
  Tensor apply(const Vector& x) const;

  bool is_zero() const;
  /// Every component is fully antisymmetric.
  bool is_alternating() const;
  Coproduct substitute(const std::map<std::string, Rational>& bindings) const;
  /// Applies f to every component.
  template <typename F>
  Coproduct map_components(F f) const {
    Coproduct out(dim_);
    for (int i = 1; i <= dim_; ++i) out(i) = f((*this)(i));
    return out;
  }

  friend Coproduct operator+(const Coproduct& a, const Coproduct& b);
  friend Coproduct operator-(const Coproduct& a, const Coproduct& b);
  friend Coproduct operator-(const Coproduct& a);
  friend bool operator==(const Coproduct&, const Coproduct&) = default;

 private:
  int dim_;
  std::vector<Tensor> components_;
};

}  // namespace threelie
