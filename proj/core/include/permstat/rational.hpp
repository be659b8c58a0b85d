#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace permstat {

using Integer = mpz_class;
using Rational = mpq_class;

// num / den in canonical form. The two-argument mpq_class constructor does not
// canonicalize, so every fraction built from parts goes through here.
Rational ratio(const Integer& num, const Integer& den);

// Accepts "p", "-p", "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer factorial(int n);
Integer binomial(long long n, long long k);

// (x)_a = x (x - 1) ... (x - a + 1).
Rational falling_factorial(const Rational& x, int a);

}  // namespace permstat
