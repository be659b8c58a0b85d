#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "permstat/partial_permutation.hpp"
#include "permstat/polynomial.hpp"

namespace permstat {

// A permutation of [n] in one-line notation, 1-based values.
using Permutation = std::vector<int>;

// T^f_{(U,V),C} = sum over C-constrained m-subsets L = {l_1 < ... < l_m} of
// f(l_1, ..., l_m) * 1_{L(U) L(V)}.
class ConstrainedTranslate {
 public:
  // Throws MalformedInput if `packed` is not packed, C is not a subset of
  // [m - 1], or the weight is zero or mentions variables beyond x_m.
  ConstrainedTranslate(PartialPermutation packed, std::vector<int> constraints,
                       Polynomial weight = Polynomial(1));

  const PartialPermutation& packed() const { return packed_; }
  const std::vector<int>& constraints() const { return constraints_; }
  // Polynomial in x_1..x_m; variable index i - 1 is x_i.
  const Polynomial& weight() const { return weight_; }

  int support_size() const { return packed_.support_size(); }
  int size() const { return packed_.size(); }
  int shift() const { return static_cast<int>(constraints_.size()); }
  int power() const { return size() + weight_.total_degree() - shift(); }

  Rational evaluate(std::span<const int> one_line) const;

  // "T(U=(1,2);V=(2,1);C={1};f=x1)", the DSL's own syntax.
  std::string to_string() const;

 private:
  PartialPermutation packed_;
  std::vector<int> constraints_;
  Polynomial weight_;
};

// Linear combination of constrained translates, canonicalized: translates
// sharing (packed, C) are merged by adding weights, scalar coefficients are
// folded into the weights and zero weights are dropped.
class RegularStatistic {
 public:
  RegularStatistic() = default;
  RegularStatistic(const ConstrainedTranslate& t);  // NOLINT(google-explicit-constructor)

  static RegularStatistic constant(const Rational& c);

  void add(const ConstrainedTranslate& t, const Rational& coefficient = Rational(1));

  std::vector<ConstrainedTranslate> translates() const;
  std::size_t num_translates() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Maxima over the stored expansion; upper bounds on the minimal values.
  int size() const;
  int shift() const;
  int power() const;

  Rational evaluate(std::span<const int> one_line) const;

  RegularStatistic& operator+=(const RegularStatistic& other);
  RegularStatistic& operator-=(const RegularStatistic& other);
  RegularStatistic& operator*=(const Rational& scalar);

  friend RegularStatistic operator+(RegularStatistic a, const RegularStatistic& b) { return a += b; }
  friend RegularStatistic operator-(RegularStatistic a, const RegularStatistic& b) { return a -= b; }
  friend RegularStatistic operator*(RegularStatistic a, const Rational& s) { return a *= s; }
  friend RegularStatistic operator*(const Rational& s, RegularStatistic a) { return a *= s; }
  friend RegularStatistic operator*(const RegularStatistic& a, const RegularStatistic& b);

  RegularStatistic pow(int d) const;

  // Parseable expression, one translate per line: "T(...)\n+ T(...)"; "0"
  // for the zero statistic.
  std::string to_string() const;

  friend bool operator==(const RegularStatistic&, const RegularStatistic&) = default;

 private:
  using Key = std::pair<PartialPermutation, std::vector<int>>;
  void add_term(const Key& key, const Polynomial& weight);
  std::map<Key, Polynomial> terms_;
};

// Expansion of the pointwise product over every way of overlaying the two
// supports inside a common [r].
RegularStatistic product(const ConstrainedTranslate& a, const ConstrainedTranslate& b);

}  // namespace permstat
