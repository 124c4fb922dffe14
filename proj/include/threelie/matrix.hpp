#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "threelie/scalar.hpp"

namespace threelie {

/// Coordinates of an element of an n-dimensional space.
using Vector = std::vector<Scalar>;

/// e_i in dimension n, 1-based.
Vector basis_vector(int dim, int i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);
Vector substitute(const Vector& v, const std::map<std::string, Rational>& bindings);

/// Dense matrix of Scalars, row-major, 0-based element access.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  Matrix substitute(const std::map<std::string, Rational>& bindings) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& m);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Exact determinant by expansion over column subsets. Uses no division, so
/// polynomial entries are fine; intended for the small (m <= 10) Gram
/// matrices this library produces.
Scalar determinant(const Matrix& m);

/// Result of exact elimination. Rank is taken over the fraction field of the
/// polynomial ring generated by the parameters, i.e. it is the generic rank.
struct NullSpace {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  std::vector<std::size_t> free_columns;
  /// One vector per free column. Entries are polynomial (denominators are
  /// cleared by multiplying through with the pivots).
  std::vector<Vector> basis;
  std::size_t dimension() const { return free_columns.size(); }
};

/// Fraction-free Gauss-Jordan elimination; pivots are the first nonzero entry
/// scanning columns left to right, rows top to bottom.
NullSpace null_space(const Matrix& m);

}  // namespace threelie
