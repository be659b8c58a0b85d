#pragma once

#include <map>

#include "permstat/expectation.hpp"
#include "permstat/indicator_moment.hpp"
#include "permstat/polynomial.hpp"
#include "permstat/statistic.hpp"

namespace permstat {

// E / n^p = (n^s / D(n)) * sum_l n^{-(p + s - l)} g_l(y_1, y_2, ...)
// with y_i = m_i / n^i, D the denominator of E and s = deg D. Layer g_l
// collects the numerator monomials of graded degree l.
struct GradedDecomposition {
  int power = 0;
  int shift = 0;  // degree of the denominator
  // Polynomials in y_1, y_2, ... (variable index i is y_i).
  std::map<int, Polynomial> layers;

  int top_degree() const { return power + shift; }
  Polynomial layer(int degree) const;
  Polynomial leading() const { return layer(top_degree()); }
};

// Throws ConsistencyError if a numerator monomial has graded degree above
// power + deg(denominator).
GradedDecomposition decompose(const RationalExpectation& e, int power);

// Rebuilds the numerator from the layers and compares exactly.
bool reassembles(const GradedDecomposition& d, const RationalExpectation& e);

// lim_{n -> inf} E / n^p after m_1 = alpha n, m_2 = beta n, m_{i >= 3} = 0.
// The result is a polynomial in alpha (index 0) and beta (index 1). Throws
// DivergenceError when the numerator outgrows the denominator.
Polynomial limit_ratio(const RationalExpectation& e, int scale_power);

// f(alpha) = g_top(alpha, 0, 0, ...) for E_lambda[psi] / n^p, p the power of
// psi's expansion. Univariate in alpha (index 0).
Polynomial alpha_limit(const RegularStatistic& psi,
                       IndicatorMoments& moments = shared_indicator_moments());

struct VarianceLimit {
  int power = 0;
  Polynomial v1;  // in alpha
  Polynomial v2;  // in alpha; the limit is v1(alpha) + beta v2(alpha)
};

// lim V_lambda[psi] / n^{2p - 1}. Throws ConsistencyError if the top layer of
// the variance contains a monomial in y_1 alone or the limit is not affine in
// beta.
VarianceLimit variance_limit(const RegularStatistic& psi,
                             IndicatorMoments& moments = shared_indicator_moments());

}  // namespace permstat
