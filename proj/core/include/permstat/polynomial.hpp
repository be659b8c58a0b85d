#pragma once

#include <climits>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "permstat/rational.hpp"

namespace permstat {

// Exponent vector with trailing zeros trimmed, so equal monomials compare
// equal regardless of how many variables were in play when they were built.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial variable(int index, int power = 1);

  int exponent(int index) const {
    return index < static_cast<int>(exps_.size()) ? exps_[index] : 0;
  }
  int num_vars() const { return static_cast<int>(exps_.size()); }
  const std::vector<int>& exponents() const { return exps_; }
  bool is_constant() const { return exps_.empty(); }

  int total_degree() const;
  // Degree where variable i has weight weight(i).
  int weighted_degree(const std::function<int(int)>& weight) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  void trim();
  std::vector<int> exps_;
};

// How variables are printed and graded. Index 0 of the n/m ring is n and
// index i >= 1 is m_i; weight-index grading makes deg n = 1, deg m_i = i.
struct VariableNaming {
  std::function<std::string(int)> name;
  std::function<int(int)> weight;

  static const VariableNaming& class_ring();  // n, m1, m2, ...  (deg m_i = i)
  static const VariableNaming& positions();   // x1, x2, ...     (index 0 is x1)
  static const VariableNaming& scaled();      // y1, y2, ...     (index i is y_i)
  static const VariableNaming& limits();      // alpha, beta
};

// Sparse polynomial with exact rational coefficients. Zero coefficients are
// never stored.
class Polynomial {
 public:
  static constexpr int kZeroDegree = INT_MIN;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT

  static Polynomial variable(int index, int power = 1);
  static Polynomial monomial(const Monomial& m, const Rational& coefficient);

  // Class-ring shorthands: n is variable 0, m_i is variable i.
  static Polynomial n() { return variable(0); }
  static Polynomial m(int i) { return variable(i); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;
  int num_vars() const;

  // Degree with deg n = 1 and deg m_i = i; kZeroDegree for the zero polynomial.
  int graded_degree() const;
  int total_degree() const;
  int degree_in(int var) const;
  int weighted_degree(const std::function<int(int)>& weight) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(int s, Polynomial a) { return a *= Rational(s); }
  friend Polynomial operator*(Polynomial a, int s) { return a *= Rational(s); }
  Polynomial operator-() const;

  Polynomial pow(int exponent) const;

  // Missing trailing values are treated as zero.
  Rational evaluate(std::span<const Rational> values) const;

  Polynomial substitute(int var, const Polynomial& replacement) const;
  Polynomial substitute(int var, const Rational& value) const {
    return substitute(var, Polynomial(value));
  }
  // Variable i becomes variable mapping[i].
  Polynomial rename(std::span<const int> mapping) const;

  // Sum of the terms whose variable-`var` exponent equals `power`, with that
  // variable removed.
  Polynomial coefficient_of(int var, int power) const;

  // Terms whose weighted degree equals `degree`.
  Polynomial homogeneous_part(int degree, const std::function<int(int)>& weight) const;

  // Division by (x_var - root). Returns false (leaving outputs untouched)
  // when the remainder is nonzero.
  bool divide_by_linear(int var, const Rational& root, Polynomial& quotient) const;

  // Canonical text: terms sorted by weighted degree ascending, then by
  // exponent vector descending, e.g. "1/12*n - 1/12*m1 - 1/6*m2".
  std::string to_string(const VariableNaming& naming = VariableNaming::class_ring()) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

// Monomials of `p` in canonical print order.
std::vector<std::pair<Monomial, Rational>> ordered_terms(const Polynomial& p,
                                                         const VariableNaming& naming);

// Univariate helpers in variable 0.
Polynomial falling_factorial_poly(int a, int offset = 0);  // (x - offset)_a
Polynomial binomial_poly(int offset, int k);              // binom(x - offset, k)

// Exact quotient of univariate polynomials in variable 0. Throws
// ConsistencyError if the division leaves a remainder.
Polynomial exact_divide_univariate(const Polynomial& numerator, const Polynomial& divisor);

// Interpolating polynomial in variable 0 through (xs[i], ys[i]).
Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

}  // namespace permstat
