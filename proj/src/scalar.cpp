#include "threelie/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace threelie {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  if (num.front() == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::string name, unsigned exponent) {
  if (exponent > 0) factors_.emplace_back(std::move(name), exponent);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (auto& [name, exp] : factors) {
    if (exp == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == name) {
      m.factors_.back().second += exp;
    } else {
      m.factors_.emplace_back(std::move(name), exp);
    }
  }
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned Monomial::exponent_of(std::string_view name) const {
  for (const auto& [n, e] : factors_) {
    if (n == name) return e;
  }
  return 0;
}

Monomial Monomial::without(std::string_view name) const {
  Monomial m;
  for (const auto& f : factors_) {
    if (f.first != name) m.factors_.push_back(f);
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      m.factors_.push_back(*i++);
    } else if (j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  m.factors_.insert(m.factors_.end(), i, a.factors_.end());
  m.factors_.insert(m.factors_.end(), j, b.factors_.end());
  return m;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (const auto& [name, exp] : m.factors()) {
    if (!out.empty()) out += '*';
    out += name;
    if (exp != 1) out += '^' + std::to_string(exp);
  }
  return out.empty() ? "1" : out;
}

// ------------------------------------------------------------------ Scalar

Scalar::Scalar(long value) : Scalar(Rational(value)) {}

Scalar::Scalar(const Rational& value) {
  if (value != 0) terms_.emplace(Monomial{}, value);
}

Scalar::Scalar(const Rational& coeff, Monomial monomial) {
  if (coeff != 0) terms_.emplace(std::move(monomial), coeff);
}

Scalar Scalar::variable(std::string name) { return Scalar(Rational(1), Monomial(std::move(name))); }

Scalar Scalar::from_terms(const std::vector<std::pair<Monomial, Rational>>& terms) {
  Scalar s;
  for (const auto& [m, c] : terms) s.add_term(m, c);
  return s;
}

void Scalar::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Scalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Scalar::constant_value() const {
  if (!is_constant()) throw std::logic_error("scalar is not constant: " + to_string(*this));
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

unsigned Scalar::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

unsigned Scalar::degree_in(std::string_view name) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent_of(name));
  return d;
}

std::set<std::string> Scalar::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out.insert(f.first);
  }
  return out;
}

Scalar Scalar::coefficient(std::string_view name, unsigned exponent) const {
  Scalar out;
  for (const auto& [m, c] : terms_) {
    if (m.exponent_of(name) == exponent) out.add_term(m.without(name), c);
  }
  return out;
}

Rational Scalar::leading_coefficient() const {
  if (terms_.empty()) return Rational(0);
  return terms_.rbegin()->second;
}

Scalar Scalar::normalized_up_to_scale() const {
  if (terms_.empty()) return *this;
  Rational lead = leading_coefficient();
  Scalar out = *this;
  for (auto& [m, c] : out.terms_) c /= lead;
  return out;
}

Scalar Scalar::substitute(const std::map<std::string, Rational>& bindings) const {
  Scalar out;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    std::vector<Monomial::Factor> rest;
    for (const auto& [name, exp] : m.factors()) {
      auto it = bindings.find(name);
      if (it == bindings.end()) {
        rest.emplace_back(name, exp);
        continue;
      }
      Rational p = 1;
      for (unsigned e = 0; e < exp; ++e) p *= it->second;
      coeff *= p;
    }
    out.add_term(Monomial::from_factors(std::move(rest)), coeff);
  }
  return out;
}

Scalar Scalar::substitute(const std::map<std::string, Scalar>& bindings) const {
  Scalar out;
  for (const auto& [m, c] : terms_) {
    Scalar term(c);
    std::vector<Monomial::Factor> rest;
    for (const auto& [name, exp] : m.factors()) {
      auto it = bindings.find(name);
      if (it == bindings.end()) {
        rest.emplace_back(name, exp);
      } else {
        term *= pow(it->second, exp);
      }
    }
    out += term * Scalar(Rational(1), Monomial::from_factors(std::move(rest)));
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  *this = *this * other;
  return *this;
}

void Scalar::add_scaled(const Scalar& other, const Scalar& coeff) {
  for (const auto& [m1, c1] : other.terms_) {
    for (const auto& [m2, c2] : coeff.terms_) add_term(m1 * m2, c1 * c2);
  }
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  if (a.is_zero() || b.is_zero()) return out;
  out.add_scaled(a, b);
  return out;
}

Scalar operator-(const Scalar& a) {
  Scalar out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::pair<Monomial, Scalar> Scalar::extract_monomial_factor() const {
  if (terms_.empty()) return {Monomial{}, *this};
  // Minimum exponent per name over all terms.
  std::vector<Monomial::Factor> common = terms_.begin()->first.factors();
  for (const auto& [m, c] : terms_) {
    for (auto& f : common) f.second = std::min(f.second, m.exponent_of(f.first));
  }
  Monomial factor = Monomial::from_factors(common);
  Scalar quotient;
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Factor> rest;
    for (const auto& [name, exp] : m.factors()) {
      unsigned e = exp - factor.exponent_of(name);
      if (e > 0) rest.emplace_back(name, e);
    }
    quotient.add_term(Monomial::from_factors(std::move(rest)), c);
  }
  return {factor, quotient};
}

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

std::string to_string(const Scalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    out += to_string(mag);
    if (!m.is_one()) out += '*' + to_string(m);
  }
  return out;
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar result;
    skip_ws();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Scalar term = parse_term();
      result += sign < 0 ? -term : term;
    }
    return result;
  }

 private:
  Scalar parse_term() {
    Scalar term(1);
    term *= parse_factor();
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      term *= parse_factor();
      skip_ws();
    }
    return term;
  }

  Scalar parse_factor() {
    if (at_end()) fail("unexpected end");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
      return Scalar(parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      unsigned exp = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        std::size_t es = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (es == pos_) fail("missing exponent");
        exp = static_cast<unsigned>(std::stoul(std::string(text_.substr(es, pos_ - es))));
      }
      return Scalar(Rational(1), Monomial(name, exp));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse scalar '" + std::string(text_) + "': " + what);
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

std::string rmatrix_parameter(int i, int j) { return "a_" + std::to_string(i) + "_" + std::to_string(j); }

}  // namespace threelie
