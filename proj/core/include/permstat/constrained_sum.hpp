#pragma once

#include <span>
#include <vector>

#include "permstat/polynomial.hpp"

namespace permstat {

// The sum of f(i_1, ..., i_k) over k-subsets {i_1 < ... < i_k} of [n] with
// i_{c+1} = i_c + 1 for every c in C, as an exact polynomial in n (variable 0).
struct ConstrainedSum {
  Polynomial sum;   // S(n), valid for every n >= |C|
  Polynomial fbar;  // S(n) = fbar(n) * binom(n - |C|, k - |C|)
};

// `weight` is a polynomial in x_1..x_k (variable index i - 1 is x_i).
// Results are memoized; the cache is thread safe.
ConstrainedSum constrained_sum(const Polynomial& weight, int k, std::span<const int> constraints);

// Direct summation at one n. Used for interpolation and exposed for checks.
Rational constrained_sum_at(const Polynomial& weight, int k, std::span<const int> constraints,
                            int n);

// Throws MalformedInput unless C is a strictly increasing subset of [k - 1].
void validate_constraints(int k, std::span<const int> constraints);

}  // namespace permstat
