#include "threelie/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace threelie {

Tensor::Tensor(int arity, int dim) : arity_(arity), dim_(dim) {
  if (arity < 1 || dim < 1) throw std::invalid_argument("tensor arity and dimension must be positive");
}

void Tensor::check_index(const Index& idx) const {
  if (idx.size() != static_cast<std::size_t>(arity_)) throw std::invalid_argument("tensor index has wrong arity");
  for (int i : idx) {
    if (i < 1 || i > dim_) throw std::out_of_range("tensor index out of range");
  }
}

Scalar Tensor::coefficient(const Index& idx) const {
  check_index(idx);
  auto it = terms_.find(idx);
  return it == terms_.end() ? Scalar() : it->second;
}

void Tensor::add(const Index& idx, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  check_index(idx);
  auto [it, inserted] = terms_.try_emplace(idx, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Tensor Tensor::substitute(const std::map<std::string, Rational>& bindings) const {
  Tensor out(arity_, dim_);
  for (const auto& [idx, c] : terms_) out.add(idx, c.substitute(bindings));
  return out;
}

Tensor& Tensor::operator+=(const Tensor& other) {
  if (arity_ != other.arity_ || dim_ != other.dim_) throw std::invalid_argument("tensor shape mismatch");
  for (const auto& [idx, c] : other.terms_) add(idx, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  if (arity_ != other.arity_ || dim_ != other.dim_) throw std::invalid_argument("tensor shape mismatch");
  for (const auto& [idx, c] : other.terms_) add(idx, -c);
  return *this;
}

Tensor operator-(const Tensor& t) {
  Tensor out = t;
  for (auto& [idx, c] : out.terms_) c = -c;
  return out;
}

Tensor operator*(const Scalar& c, const Tensor& t) {
  Tensor out(t.arity_, t.dim_);
  if (c.is_zero()) return out;
  for (const auto& [idx, v] : t.terms_) out.add(idx, c * v);
  return out;
}

Tensor tensor_product(const std::vector<Vector>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("tensor product of no vectors");
  const std::size_t n = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != n) throw std::invalid_argument("vector dimension mismatch");
  }
  Tensor out(static_cast<int>(vectors.size()), static_cast<int>(n));
  // Walk the partial products slot by slot, keeping only nonzero prefixes.
  std::vector<std::pair<Index, Scalar>> partial{{Index{}, Scalar(1)}};
  for (const auto& v : vectors) {
    std::vector<std::pair<Index, Scalar>> next;
    for (const auto& [idx, c] : partial) {
      for (std::size_t i = 0; i < n; ++i) {
        if (v[i].is_zero()) continue;
        Index extended = idx;
        extended.push_back(static_cast<int>(i) + 1);
        next.emplace_back(std::move(extended), c * v[i]);
      }
    }
    partial = std::move(next);
  }
  for (const auto& [idx, c] : partial) out.add(idx, c);
  return out;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("tensor dimension mismatch");
  Tensor out(a.arity() + b.arity(), a.dim());
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      Index idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add(idx, ca * cb);
    }
  }
  return out;
}

namespace {

std::vector<Permutation> build_symmetric_group(int k) {
  std::vector<Permutation> perms;
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        if (p[i] > p[j]) ++inversions;
      }
    }
    perms.push_back({p, inversions % 2 == 0 ? 1 : -1});
  } while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

}  // namespace

const std::vector<Permutation>& symmetric_group(int k) {
  constexpr int max_k = 6;
  static const std::vector<std::vector<Permutation>> groups = [] {
    std::vector<std::vector<Permutation>> out;
    for (int j = 1; j <= max_k; ++j) out.push_back(build_symmetric_group(j));
    return out;
  }();
  if (k < 1 || k > max_k) throw std::invalid_argument("symmetric_group supports 1 <= k <= 6");
  return groups[static_cast<std::size_t>(k - 1)];
}

Tensor wedge(const std::vector<Vector>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("wedge of no vectors");
  const int k = static_cast<int>(vectors.size());
  Tensor out(k, static_cast<int>(vectors.front().size()));
  for (const auto& perm : symmetric_group(k)) {
    std::vector<Vector> permuted;
    permuted.reserve(vectors.size());
    for (int s : perm.images) permuted.push_back(vectors[static_cast<std::size_t>(s)]);
    Tensor term = tensor_product(permuted);
    if (perm.sign > 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

Tensor wedge_basis(int dim, const Index& indices) {
  std::vector<Vector> vectors;
  vectors.reserve(indices.size());
  for (int i : indices) vectors.push_back(basis_vector(dim, i));
  return wedge(vectors);
}

Tensor permute_factors(const Tensor& t, int p, int q) {
  if (p < 1 || q < 1 || p > t.arity() || q > t.arity()) throw std::out_of_range("tensor slot out of range");
  if (p == q) return t;
  Tensor out(t.arity(), t.dim());
  for (const auto& [idx, c] : t.terms()) {
    Index swapped = idx;
    std::swap(swapped[static_cast<std::size_t>(p - 1)], swapped[static_cast<std::size_t>(q - 1)]);
    out.add(swapped, c);
  }
  return out;
}

bool is_fully_antisymmetric(const Tensor& t) {
  for (int p = 1; p < t.arity(); ++p) {
    if (permute_factors(t, p, p + 1) != -t) return false;
  }
  return true;
}

Tensor apply_to_slot(const Tensor& t, int slot, const Matrix& m) {
  if (slot < 1 || slot > t.arity()) throw std::out_of_range("tensor slot out of range");
  const auto n = static_cast<std::size_t>(t.dim());
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("slot map has wrong size");
  const auto s = static_cast<std::size_t>(slot - 1);
  Tensor out(t.arity(), t.dim());
  for (const auto& [idx, c] : t.terms()) {
    const auto col = static_cast<std::size_t>(idx[s] - 1);
    for (std::size_t row = 0; row < n; ++row) {
      const Scalar& a = m(row, col);
      if (a.is_zero()) continue;
      Index image = idx;
      image[s] = static_cast<int>(row) + 1;
      out.add(image, a * c);
    }
  }
  return out;
}

// ------------------------------------------------------------------ RMatrix

RMatrix::RMatrix(int dim) : entries_(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)) {
  if (dim < 1) throw std::invalid_argument("r-matrix dimension must be positive");
}

RMatrix::RMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw std::invalid_argument("r-matrix must be square and nonempty");
  }
}

RMatrix RMatrix::symbolic(int dim) {
  RMatrix r(dim);
  for (int i = 1; i <= dim; ++i) {
    for (int j = 1; j <= dim; ++j) r(i, j) = Scalar::variable(rmatrix_parameter(i, j));
  }
  return r;
}

RMatrix RMatrix::symbolic_skew(int dim) {
  RMatrix r(dim);
  for (int i = 1; i <= dim; ++i) {
    for (int j = i + 1; j <= dim; ++j) {
      Scalar a = Scalar::variable(rmatrix_parameter(i, j));
      r(j, i) = -a;
      r(i, j) = std::move(a);
    }
  }
  return r;
}

RMatrix RMatrix::skew_from_upper(int dim, const std::map<std::pair<int, int>, Scalar>& upper) {
  RMatrix r(dim);
  for (const auto& [key, value] : upper) {
    auto [i, j] = key;
    if (i >= j) throw std::invalid_argument("skew r-matrix entries must have i < j");
    r(i, j) = value;
    r(j, i) = -value;
  }
  return r;
}

const Scalar& RMatrix::operator()(int i, int j) const {
  if (i < 1 || j < 1 || i > dim() || j > dim()) throw std::out_of_range("r-matrix index out of range");
  return entries_(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
}

Scalar& RMatrix::operator()(int i, int j) {
  if (i < 1 || j < 1 || i > dim() || j > dim()) throw std::out_of_range("r-matrix index out of range");
  return entries_(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
}

bool RMatrix::is_skew() const {
  for (int i = 1; i <= dim(); ++i) {
    if (!(*this)(i, i).is_zero()) return false;
    for (int j = i + 1; j <= dim(); ++j) {
      if (!((*this)(i, j) + (*this)(j, i)).is_zero()) return false;
    }
  }
  return true;
}

RMatrix RMatrix::substitute(const std::map<std::string, Rational>& bindings) const {
  return RMatrix(entries_.substitute(bindings));
}

// ---------------------------------------------------------------- Coproduct

Coproduct::Coproduct(int dim) : dim_(dim), components_(static_cast<std::size_t>(dim), Tensor(3, dim)) {}

const Tensor& Coproduct::operator()(int i) const {
  if (i < 1 || i > dim_) throw std::out_of_range("coproduct index out of range");
  return components_[static_cast<std::size_t>(i - 1)];
}

Tensor& Coproduct::operator()(int i) {
  if (i < 1 || i > dim_) throw std::out_of_range("coproduct index out of range");
  return components_[static_cast<std::size_t>(i - 1)];
}

Scalar Coproduct::coefficient(int i, int p, int q, int r) const { return (*this)(i).coefficient({p, q, r}); }

Tensor Coproduct::apply(const Vector& x) const {
  if (x.size() != static_cast<std::size_t>(dim_)) throw std::invalid_argument("coproduct argument has wrong dimension");
  Tensor out(3, dim_);
  for (int i = 1; i <= dim_; ++i) {
    const Scalar& c = x[static_cast<std::size_t>(i - 1)];
    if (!c.is_zero()) out += c * (*this)(i);
  }
  return out;
}

bool Coproduct::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Tensor& t) { return t.is_zero(); });
}

bool Coproduct::is_alternating() const {
  return std::all_of(components_.begin(), components_.end(), [](const Tensor& t) { return is_fully_antisymmetric(t); });
}

Coproduct Coproduct::substitute(const std::map<std::string, Rational>& bindings) const {
  return map_components([&](const Tensor& t) { return t.substitute(bindings); });
}

Coproduct operator+(const Coproduct& a, const Coproduct& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("coproduct dimension mismatch");
  Coproduct out = a;
  for (std::size_t i = 0; i < out.components_.size(); ++i) out.components_[i] += b.components_[i];
  return out;
}

Coproduct operator-(const Coproduct& a, const Coproduct& b) { return a + (-b); }

Coproduct operator-(const Coproduct& a) {
  return a.map_components([](const Tensor& t) { return -t; });
}

}  // namespace threelie
