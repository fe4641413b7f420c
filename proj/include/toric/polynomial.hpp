#pragma once

#include "toric/numeric.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace toric {

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

/// Degree-reverse-lexicographic order with x_0 > x_1 > ... ; `operator()`
/// answers "a is larger than b", so maps iterate from the leading term down.
struct DegRevLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

bool divides(const Exponent& a, const Exponent& b);
Exponent lcm(const Exponent& a, const Exponent& b);
Exponent exponent_product(const Exponent& a, const Exponent& b);
/// b / a, assuming divides(a, b)
Exponent exponent_quotient(const Exponent& b, const Exponent& a);
bool coprime(const Exponent& a, const Exponent& b);

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed number of variables. No zero coefficients are stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, Rational, DegRevLexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t num_vars) : num_vars_(num_vars) {}

  static MultiPoly constant(std::size_t num_vars, const Rational& c);
  static MultiPoly variable(std::size_t num_vars, std::size_t index);
  static MultiPoly monomial(const Exponent& e, const Rational& c = 1);

  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  const Exponent& leading_exponent() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }
  Rational coefficient(const Exponent& e) const;

  /// Largest total degree of a term; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  MultiPoly homogeneous_component(int degree) const;
  /// Drops every term of total degree above max_degree.
  MultiPoly truncated(int max_degree) const;

  void add_term(const Exponent& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator+(MultiPoly a, const Rational& c) { return a += constant(a.num_vars(), c); }
  friend MultiPoly operator+(const Rational& c, MultiPoly a) { return a += constant(a.num_vars(), c); }
  friend MultiPoly operator-(MultiPoly a, const Rational& c) { return a -= constant(a.num_vars(), c); }

  MultiPoly times_monomial(const Exponent& e, const Rational& c) const;
  MultiPoly pow(unsigned k) const;
  /// Product truncated at max_degree, computed without forming higher terms.
  static MultiPoly truncated_product(const MultiPoly& a, const MultiPoly& b, int max_degree);

  bool operator==(const MultiPoly& rhs) const { return num_vars_ == rhs.num_vars_ && terms_ == rhs.terms_; }

  /// Human-readable form, e.g. "67*y^2 + 24*x*y". Default names are x0, x1, ...
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void check_compatible(const MultiPoly& rhs) const;

  std::size_t num_vars_ = 0;
  Terms terms_;
};

}  // namespace toric
