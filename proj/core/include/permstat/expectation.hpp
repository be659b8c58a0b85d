#pragma once

#include <vector>

#include "permstat/partitions.hpp"
#include "permstat/polynomial.hpp"

namespace permstat {

// numerator(n, m_1, ...) / prod_j (n)_{a_j}.
//
// The denominator is kept as exponents e_i of the linear factors (n - i);
// products of falling factorials always give e_0 >= e_1 >= ..., which is what
// lets the factor list be read back as falling factorials. Every operation
// leaves the value normalized: common factors (n - i) are cancelled from the
// top of each falling-factorial run and a zero numerator clears the
// denominator.
class RationalExpectation {
 public:
  RationalExpectation() = default;
  RationalExpectation(Polynomial numerator);  // NOLINT(google-explicit-constructor)

  // numerator / (n)_a
  static RationalExpectation over_falling(Polynomial numerator, int a);

  const Polynomial& numerator() const { return numerator_; }
  // [a_1, a_2, ...] with a_1 >= a_2 >= ...; empty means denominator 1.
  std::vector<int> denom_falling() const;
  // Exponent of (n - i) in the denominator.
  int factor_exponent(int i) const;
  int denominator_degree() const;
  Polynomial denominator() const;

  bool is_zero() const { return numerator_.is_zero(); }

  RationalExpectation& operator+=(const RationalExpectation& other);
  RationalExpectation& operator-=(const RationalExpectation& other);
  RationalExpectation& operator*=(const RationalExpectation& other);

  friend RationalExpectation operator+(RationalExpectation a, const RationalExpectation& b) {
    return a += b;
  }
  friend RationalExpectation operator-(RationalExpectation a, const RationalExpectation& b) {
    return a -= b;
  }
  friend RationalExpectation operator*(RationalExpectation a, const RationalExpectation& b) {
    return a *= b;
  }

  RationalExpectation times_poly(const Polynomial& factor) const;

  // Exact value at (n, m_1(lambda), ...). Throws DegenerateEvaluation when a
  // denominator factor vanishes, i.e. n is below the falling-factorial length.
  Rational evaluate_at(const Partition& lambda) const;

  // (n)_a times this value as a polynomial. Throws ConsistencyError when
  // (n)_a is not a multiple of the denominator or the division is inexact.
  Polynomial cleared_to_falling(int a) const;

  friend bool operator==(const RationalExpectation&, const RationalExpectation&) = default;

 private:
  void normalize();

  Polynomial numerator_;
  std::vector<int> factor_exps_;  // factor_exps_[i] = exponent of (n - i)
};

}  // namespace permstat
