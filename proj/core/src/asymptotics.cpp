#include "permstat/asymptotics.hpp"

#include "permstat/errors.hpp"
#include "permstat/moments.hpp"

namespace permstat {

Polynomial GradedDecomposition::layer(int degree) const {
  auto it = layers.find(degree);
  return it == layers.end() ? Polynomial() : it->second;
}

GradedDecomposition decompose(const RationalExpectation& e, int power) {
  GradedDecomposition d;
  d.power = power;
  d.shift = e.denominator_degree();
  const auto& weight = VariableNaming::class_ring().weight;
  for (const auto& [m, c] : e.numerator().terms()) {
    int degree = m.weighted_degree(weight);
    if (degree > d.top_degree()) {
      throw ConsistencyError("numerator monomial of graded degree " + std::to_string(degree) +
                             " exceeds power + shift = " + std::to_string(d.top_degree()));
    }
    // n^{a_0} prod m_i^{a_i} = n^degree prod y_i^{a_i}: drop the n exponent.
    std::vector<int> exps = m.exponents();
    if (!exps.empty()) exps[0] = 0;
    d.layers[degree] += Polynomial::monomial(Monomial(std::move(exps)), c);
  }
  return d;
}

bool reassembles(const GradedDecomposition& d, const RationalExpectation& e) {
  Polynomial numerator;
  const auto& weight = VariableNaming::scaled().weight;
  for (const auto& [degree, layer] : d.layers) {
    for (const auto& [m, c] : layer.terms()) {
      std::vector<int> exps = m.exponents();
      if (exps.empty()) exps.push_back(0);
      exps[0] = degree - m.weighted_degree(weight);
      if (exps[0] < 0) return false;
      numerator += Polynomial::monomial(Monomial(std::move(exps)), c);
    }
  }
  return numerator == e.numerator() && d.shift == e.denominator_degree();
}

Polynomial limit_ratio(const RationalExpectation& e, int scale_power) {
  // Work in n (0), alpha (1), beta (2).
  Polynomial p = e.numerator();
  for (int i = p.num_vars() - 1; i >= 3; --i) p = p.substitute(i, Rational(0));
  p = p.substitute(2, Polynomial::variable(0) * Polynomial::variable(3));
  p = p.substitute(1, Polynomial::variable(0) * Polynomial::variable(4));
  p = p.rename(std::vector<int>{0, 0, 0, 2, 1});
  const int scale = e.denominator_degree() + scale_power;
  const int top = p.degree_in(0);
  if (p.is_zero() || top < scale) return Polynomial();
  if (top > scale) {
    throw DivergenceError("E / n^" + std::to_string(scale_power) + " grows like n^" +
                          std::to_string(top - scale));
  }
  // The denominator is monic of degree deg D in n.
  return p.coefficient_of(0, top).rename(std::vector<int>{0, 0, 1});
}

namespace {

// g(alpha, 0, 0, ...) for g in y_1, y_2, ..., as a polynomial in alpha.
Polynomial on_alpha_axis(const Polynomial& g) {
  Polynomial p = g;
  for (int i = p.num_vars() - 1; i >= 2; --i) p = p.substitute(i, Rational(0));
  return p.rename(std::vector<int>{0, 0});
}

}  // namespace

Polynomial alpha_limit(const RegularStatistic& psi, IndicatorMoments& moments) {
  GradedDecomposition d = decompose(expectation(psi, moments), psi.power());
  return on_alpha_axis(d.leading());
}

VarianceLimit variance_limit(const RegularStatistic& psi, IndicatorMoments& moments) {
  const int p = psi.power();
  RationalExpectation v = variance(psi, moments);
  GradedDecomposition d = decompose(v, 2 * p);
  Polynomial top = d.leading();
  for (const auto& [m, c] : top.terms()) {
    bool y1_only = true;
    for (int i = 2; i < m.num_vars(); ++i) y1_only = y1_only && m.exponent(i) == 0;
    if (y1_only) {
      throw ConsistencyError("top variance layer contains a pure y1 term: coefficient " +
                             to_string(c) + " of " + Polynomial::monomial(m, 1).to_string(
                                                          VariableNaming::scaled()));
    }
  }
  VarianceLimit out;
  out.power = p;
  out.v1 = on_alpha_axis(d.layer(d.top_degree() - 1));
  out.v2 = on_alpha_axis(top.coefficient_of(2, 1));

  Polynomial expected = out.v1 + out.v2 * Polynomial::variable(1);
  Polynomial direct = limit_ratio(v, 2 * p - 1);
  if (direct != expected) {
    throw ConsistencyError("variance limit " + direct.to_string(VariableNaming::limits()) +
                           " is not V1 + beta V2 = " + expected.to_string(VariableNaming::limits()));
  }
  return out;
}

}  // namespace permstat
