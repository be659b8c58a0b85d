#pragma once

#include <functional>
#include <map>
#include <vector>

#include "permstat/partial_permutation.hpp"
#include "permstat/partitions.hpp"
#include "permstat/rational.hpp"
#include "permstat/statistic.hpp"

// Brute-force ground truth over small symmetric groups. Nothing here touches
// the symbolic engine.
namespace permstat::oracle {

inline constexpr int kDefaultMaxN = 8;

using Evaluator = std::function<Rational(const Permutation&)>;

Partition cycle_type(const Permutation& pi);

// Lexicographic order of one-line notation.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

// Permutation of type lambda with cycles on consecutive integers, longest
// first. `rotation` conjugates by i -> i + rotation (mod n) to obtain a
// different element of the same class.
Permutation class_representative(const Partition& lambda, int rotation = 0);

// S_n bucketed by cycle type. Throws ResourceLimit for n > max_n.
class ClassTable {
 public:
  explicit ClassTable(int n, int max_n = kDefaultMaxN);

  int n() const { return n_; }
  const std::map<Partition, std::vector<Permutation>>& classes() const { return classes_; }
  const std::vector<Permutation>& of(const Partition& lambda) const;

 private:
  int n_;
  std::map<Partition, std::vector<Permutation>> classes_;
};

// Average of psi(w)^d over K_lambda.
Rational class_moment(const Evaluator& psi, const Partition& lambda, int d,
                      int max_n = kDefaultMaxN);
// Average of psi(w)^d over all of S_n.
Rational uniform_moment(const Evaluator& psi, int n, int d, int max_n = kDefaultMaxN);

// Injections phi: [m] -> [n] with pi(phi(i_t)) = phi(j_t) for all t, counted
// for a given permutation or for the representative of a class.
Integer injection_count_in(const PartialPermutation& packed, const Permutation& pi);
Integer injection_count(const PartialPermutation& packed, const Partition& lambda,
                        int max_n = kDefaultMaxN);

// Compatible maps psi: [m] -> [n] that are injective on each connected
// component of G(I, J).
Integer compatible_function_count(const PartialPermutation& packed, const Partition& lambda,
                                  int max_n = kDefaultMaxN);
// Compatible maps with no injectivity requirement.
Integer all_compatible_function_count(const PartialPermutation& packed, const Partition& lambda,
                                      int max_n = kDefaultMaxN);

// Definitional statistics.
Rational excedances(const Permutation& pi);
Rational descents(const Permutation& pi);
Rational major_index(const Permutation& pi);
Rational inversions(const Permutation& pi);
Rational fixed_points(const Permutation& pi);

// Direct occurrence count of a weighted bivincular pattern: every k-subset
// of positions is tested against sigma, A and B. f and g are polynomials in
// x1..xk evaluated at the positions and at the sorted values.
Rational bivincular_occurrences(const Permutation& pi, const std::vector<int>& sigma,
                                const std::vector<int>& A, const std::vector<int>& B,
                                const Polynomial& f, const Polynomial& g);

}  // namespace permstat::oracle
