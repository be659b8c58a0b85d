#pragma once

#include <string_view>
#include <vector>

#include "permstat/polynomial.hpp"
#include "permstat/statistic.hpp"

namespace permstat {

// Weighted bivincular pattern (sigma, A, B, f, g). An occurrence is a set of
// positions i_1 < ... < i_k whose values are order-isomorphic to sigma, with
// i_{a+1} = i_a + 1 for a in A and, writing w_1 < ... < w_k for the sorted
// values, w_{b+1} = w_b + 1 for b in B. It is weighted by f(i_1, ..., i_k)
// times g(w_1, ..., w_k).
struct BivincularPattern {
  std::vector<int> sigma;  // one-line, a permutation of [k]
  std::vector<int> A;
  std::vector<int> B;
  Polynomial f = Polynomial(1);
  Polynomial g = Polynomial(1);

  int size() const { return static_cast<int>(sigma.size()); }
  int shift() const { return static_cast<int>(A.size() + B.size()); }
  int power() const;

  // Throws MalformedInput.
  void validate() const;
};

RegularStatistic compile_bivincular(const BivincularPattern& pattern);

// Classical (A empty) or vincular pattern count N_{sigma, A}.
RegularStatistic pattern_count(const std::vector<int>& sigma, const std::vector<int>& A = {});

RegularStatistic excedances();   // T^1_{(1)(2)}
RegularStatistic descents();     // N_{21,{1}}
RegularStatistic inversions();   // N_{21}
RegularStatistic major_index();  // eight vincular translates
RegularStatistic fixed_points(); // T^1_{(1)(1)}, the class function m_1
RegularStatistic two_cycles();   // T^1_{(12)(21)}, the class function m_2

// exc, des, maj, inv, fix (or fixpoints), cyc2. Throws MalformedInput.
RegularStatistic builtin(std::string_view name);

}  // namespace permstat
