#pragma once

#include <string>
#include <string_view>

#include "permstat/expectation.hpp"
#include "permstat/polynomial.hpp"

namespace permstat {

// {"terms":[{"coef":"p/q","exps":{"n":a0,"m1":a1,...}}, ...]} with terms in
// canonical text order.
std::string polynomial_to_json(const Polynomial& p,
                               const VariableNaming& naming = VariableNaming::class_ring());
// Accepts n, m<i>, x<i>, y<i>, alpha, beta as exponent keys.
Polynomial polynomial_from_json(std::string_view json_text);

// Numerator with its content pulled out, e.g. "(n - m1 - 2*m2) / 12" or
// "n*(n - 1) / (4 * (n)_2)".
std::string pretty(const RationalExpectation& e);
std::string pretty(const Polynomial& p, const VariableNaming& naming = VariableNaming::class_ring());

// "(n)_2*(n)_1" style, or "1".
std::string denominator_to_string(const RationalExpectation& e);

}  // namespace permstat
