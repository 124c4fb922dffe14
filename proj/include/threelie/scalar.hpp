#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace threelie {

/// Exact rational number. GMP keeps it canonical (reduced, positive
/// denominator, zero is 0/1) after every arithmetic operation.
using Rational = mpq_class;

/// Parses "n", "-n" or "n/d". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// A product of named parameters raised to positive exponents. Factors are
/// kept sorted by name so equal monomials compare equal.
class Monomial {
 public:
  using Factor = std::pair<std::string, unsigned>;

  Monomial() = default;
  explicit Monomial(std::string name, unsigned exponent = 1);
  /// Accepts factors in any order; repeated names are merged.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  unsigned degree() const;
  unsigned exponent_of(std::string_view name) const;

  /// The monomial with `name` removed.
  Monomial without(std::string_view name) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

std::string to_string(const Monomial& m);

/// Sparse multivariate polynomial with rational coefficients. This is the
/// coefficient type used for structure constants, r-matrix entries and all
/// tensor components. Zero coefficients are never stored, so the empty term
/// map is the zero polynomial.
class Scalar {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Scalar() = default;
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& coeff, Monomial monomial);

  static Scalar variable(std::string name);
  /// Builds from arbitrary terms; merges duplicates and drops zeros.
  static Scalar from_terms(const std::vector<std::pair<Monomial, Rational>>& terms);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial. Throws std::logic_error otherwise.
  Rational constant_value() const;
  unsigned total_degree() const;
  unsigned degree_in(std::string_view name) const;
  std::set<std::string> variables() const;

  /// Sum of the terms containing name^exponent exactly, with that factor
  /// stripped. coefficient(x, 0) gives the part free of x.
  Scalar coefficient(std::string_view name, unsigned exponent) const;

  /// Coefficient of the leading (largest in monomial order) term.
  Rational leading_coefficient() const;
  /// Divides by the leading coefficient, so the leading term becomes monic.
  Scalar normalized_up_to_scale() const;

  Scalar substitute(const std::map<std::string, Rational>& bindings) const;
  Scalar substitute(const std::map<std::string, Scalar>& bindings) const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  /// Adds coeff * other without building a temporary.
  void add_scaled(const Scalar& other, const Scalar& coeff);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  /// Largest monomial dividing every term (the "common factor" used for
  /// display), and the quotient.
  std::pair<Monomial, Scalar> extract_monomial_factor() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

Scalar pow(const Scalar& base, unsigned exponent);

/// Canonical text form, e.g. `2*a_1_2*a_3_4 - 1*a_1_3*a_2_4`. Terms appear
/// in monomial order, every coefficient is printed, and zero prints as `0`.
std::string to_string(const Scalar& s);
/// Inverse of to_string; also accepts `^` exponents and bare names.
Scalar parse_scalar(std::string_view text);

/// Name of the r-matrix parameter a^{ij} (1-based).
std::string rmatrix_parameter(int i, int j);

}  // namespace threelie
