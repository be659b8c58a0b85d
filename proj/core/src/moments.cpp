#include "permstat/moments.hpp"

#include <map>

#include "permstat/constrained_sum.hpp"
#include "permstat/errors.hpp"

namespace permstat {

namespace {

// (n)_{dq} E must be a polynomial whose degree is at most dp + dq.
void check_degree_bound(const RationalExpectation& e, const RegularStatistic& psi, int d,
                        const char* what) {
  const int dq = d * psi.shift();
  const int bound = d * psi.power() + dq;
  Polynomial cleared = e.cleared_to_falling(dq);
  if (!cleared.is_zero() && cleared.graded_degree() > bound) {
    throw ConsistencyError(std::string(what) + ": (n)_" + std::to_string(dq) +
                           " times the moment has degree " + std::to_string(cleared.graded_degree()) +
                           ", above the bound " + std::to_string(bound));
  }
}

}  // namespace

RationalExpectation translate_expectation(const ConstrainedTranslate& t, IndicatorMoments& moments) {
  const int m = t.support_size();
  const int q = t.shift();
  auto indicator = moments.get(cycle_path_type(t.packed()));
  ConstrainedSum sum = constrained_sum(t.weight(), m, t.constraints());
  // binom(n - q, m - q) / (n)_m = 1 / ((m - q)! (n)_q)
  Polynomial numerator = sum.fbar * indicator->poly * ratio(1, factorial(m - q));
  return RationalExpectation::over_falling(std::move(numerator), q);
}

RationalExpectation expectation(const RegularStatistic& psi, IndicatorMoments& moments) {
  // Translates with equal shift q and cycle-path type share the factor
  // f_type / (n)_q, so their constrained sums are added as polynomials first.
  std::map<int, std::map<CyclePathType, Polynomial>> grouped;
  for (const auto& t : psi.translates()) {
    const int m = t.support_size();
    const int q = t.shift();
    ConstrainedSum sum = constrained_sum(t.weight(), m, t.constraints());
    grouped[q][cycle_path_type(t.packed())] += sum.fbar * ratio(1, factorial(m - q));
  }
  RationalExpectation total;
  for (const auto& [q, by_type] : grouped) {
    Polynomial numerator;
    for (const auto& [type, factor] : by_type) numerator += factor * moments.get(type)->poly;
    total += RationalExpectation::over_falling(std::move(numerator), q);
  }
  return total;
}

RationalExpectation moment(const RegularStatistic& psi, int d, IndicatorMoments& moments) {
  if (d < 1) throw DomainError("moment order must be positive");
  RationalExpectation e = expectation(psi.pow(d), moments);
  check_degree_bound(e, psi, d, "class moment");
  return e;
}

RationalExpectation uniform_moment(const RegularStatistic& psi, int d) {
  if (d < 1) throw DomainError("moment order must be positive");
  // E_{S_n}[1_{IJ}] = 1 / (n)_k, so sums are grouped by the size k.
  std::map<int, Polynomial> by_size;
  for (const auto& t : psi.pow(d).translates()) {
    by_size[t.size()] += constrained_sum(t.weight(), t.support_size(), t.constraints()).sum;
  }
  RationalExpectation total;
  for (const auto& [k, sum] : by_size) total += RationalExpectation::over_falling(sum, k);
  check_degree_bound(total, psi, d, "uniform moment");
  return total;
}

RationalExpectation variance(const RegularStatistic& psi, IndicatorMoments& moments) {
  RationalExpectation mean = expectation(psi, moments);
  return moment(psi, 2, moments) - mean * mean;
}

}  // namespace permstat
