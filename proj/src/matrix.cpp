#include "threelie/matrix.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace threelie {

Vector basis_vector(int dim, int i) {
  if (i < 1 || i > dim) throw std::out_of_range("basis index out of range");
  Vector v(static_cast<std::size_t>(dim));
  v[static_cast<std::size_t>(i - 1)] = Scalar(1);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator*(const Scalar& c, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

Vector substitute(const Vector& v, const std::map<std::string, Rational>& bindings) {
  Vector out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.substitute(bindings));
  return out;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) out[r].add_scaled(a, v[c]);
    }
  }
  return out;
}

Matrix Matrix::substitute(const std::map<std::string, Rational>& bindings) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].substitute(bindings);
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix operator-(const Matrix& a) {
  Matrix out = a;
  for (auto& s : out.data_) s = -s;
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j).add_scaled(aik, bkj);
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
  Matrix out = m;
  for (auto& s : out.data_) s = c * s;
  return out;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  if (n > 20) throw std::invalid_argument("determinant: matrix too large for subset expansion");
  // partial[mask] = signed sum over injections of the first popcount(mask)
  // rows onto the columns in mask.
  std::vector<Scalar> partial(std::size_t{1} << n);
  partial[0] = Scalar(1);
  for (std::uint32_t mask = 0; mask < partial.size(); ++mask) {
    if (partial[mask].is_zero()) continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    if (row == n) continue;
    for (std::size_t c = 0; c < n; ++c) {
      const std::uint32_t bit = 1u << c;
      if ((mask & bit) != 0 || m(row, c).is_zero()) continue;
      // Columns already used that lie to the right of c are inversions.
      const int inversions = std::popcount(mask >> (c + 1));
      Scalar term = partial[mask] * m(row, c);
      if (inversions % 2 == 1) {
        partial[mask | bit] -= term;
      } else {
        partial[mask | bit] += term;
      }
    }
  }
  return partial.back();
}

namespace {

void rescale_row(std::vector<Scalar>& row) {
  for (const auto& s : row) {
    if (s.is_zero()) continue;
    Rational lead = s.leading_coefficient();
    if (lead == 1) return;
    Scalar inv(Rational(1) / lead);
    for (auto& t : row) {
      if (!t.is_zero()) t = t * inv;
    }
    return;
  }
}

}  // namespace

NullSpace null_space(const Matrix& m) {
  std::vector<std::vector<Scalar>> rows(m.rows(), std::vector<Scalar>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  }

  NullSpace ns;
  std::size_t next = 0;
  for (std::size_t col = 0; col < m.cols() && next < rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[next]);
    rescale_row(rows[next]);
    const std::vector<Scalar>& prow = rows[next];
    const Scalar p = prow[col];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col].is_zero()) continue;
      const Scalar factor = rows[r][col];
      for (std::size_t c = 0; c < m.cols(); ++c) {
        Scalar updated = rows[r][c] * p;
        if (!prow[c].is_zero()) updated -= factor * prow[c];
        rows[r][c] = std::move(updated);
      }
      rescale_row(rows[r]);
    }
    ns.pivot_columns.push_back(col);
    ++next;
  }
  ns.rank = ns.pivot_columns.size();

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ns.pivot_columns) is_pivot[c] = true;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) ns.free_columns.push_back(c);
  }

  std::vector<Scalar> pivots;
  bool all_constant = true;
  for (std::size_t k = 0; k < ns.rank; ++k) {
    pivots.push_back(rows[k][ns.pivot_columns[k]]);
    all_constant = all_constant && pivots.back().is_constant();
  }
  for (auto f : ns.free_columns) {
    Vector v(m.cols());
    if (all_constant) {
      v[f] = Scalar(1);
      for (std::size_t k = 0; k < ns.rank; ++k) {
        if (!rows[k][f].is_zero()) {
          v[ns.pivot_columns[k]] = -rows[k][f] * Scalar(Rational(1) / pivots[k].constant_value());
        }
      }
    } else {
      Scalar all(1);
      for (const auto& p : pivots) all *= p;
      v[f] = all;
      for (std::size_t k = 0; k < ns.rank; ++k) {
        if (rows[k][f].is_zero()) continue;
        Scalar others(1);
        for (std::size_t j = 0; j < ns.rank; ++j) {
          if (j != k) others *= pivots[j];
        }
        v[ns.pivot_columns[k]] = -rows[k][f] * others;
      }
    }
    ns.basis.push_back(std::move(v));
  }
  return ns;
}

}  // namespace threelie
