#pragma once

#include <string_view>

#include "permstat/polynomial.hpp"
#include "permstat/statistic.hpp"

namespace permstat {

// Statistic description language:
//
//   expr     := term (("+" | "-") term)*
//   term     := factor ("*" factor)*
//   factor   := primary ("^" int)?
//   primary  := rational | builtin | translate | "(" expr ")"
//   builtin  := "exc" | "des" | "maj" | "inv" | "fix" | "fixpoints" | "cyc2"
//             | "N(" word ")" | "N(" word ";A=" intset ")"
//             | "biv(" word [";A=" intset] [";B=" intset] [";f=" poly] [";g=" poly] ")"
//   translate:= "T(U=" inttuple ";V=" inttuple ";C=" intset ";f=" poly ")"
//
// A rational literal denotes the constant statistic. Polynomials are in
// x1, x2, ... with "+ - * ^" and parentheses. "#" starts a comment that runs
// to the end of the line. Throws ParseError.
RegularStatistic parse_statistic(std::string_view text);

// Polynomial in x1, x2, ...; x_i is variable index i - 1.
Polynomial parse_weight(std::string_view text);

}  // namespace permstat
