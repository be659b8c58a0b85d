#pragma once

#include "permstat/expectation.hpp"
#include "permstat/indicator_moment.hpp"
#include "permstat/statistic.hpp"

namespace permstat {

// E_lambda[T] for one translate as a function of (n, m_1, ...).
RationalExpectation translate_expectation(const ConstrainedTranslate& t,
                                          IndicatorMoments& moments = shared_indicator_moments());

// E_lambda[psi] for pi uniform in K_lambda, as a function of (n, m_1, ...).
RationalExpectation expectation(const RegularStatistic& psi,
                                IndicatorMoments& moments = shared_indicator_moments());

// E_lambda[psi^d]. Checks that (n)_{dq} E is a polynomial of graded degree at
// most d p + d q for the expansion's power p and shift q, and throws
// ConsistencyError otherwise.
RationalExpectation moment(const RegularStatistic& psi, int d,
                           IndicatorMoments& moments = shared_indicator_moments());

// E[psi^d] over all of S_n, a rational function of n alone, with the
// analogous degree check. Exact for n >= max(size, shift) of psi^d; below
// that, cancelled factors of the falling factorials can turn 0/0 into a
// finite wrong value.
RationalExpectation uniform_moment(const RegularStatistic& psi, int d);

// E_lambda[psi^2] - E_lambda[psi]^2.
RationalExpectation variance(const RegularStatistic& psi,
                             IndicatorMoments& moments = shared_indicator_moments());

}  // namespace permstat
