#pragma once

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <vector>

#include "permstat/oracle.hpp"
#include "permstat/partial_permutation.hpp"
#include "permstat/partitions.hpp"
#include "permstat/polynomial.hpp"
#include "permstat/set_partition.hpp"
#include "permstat/statistic.hpp"

namespace permstat {

inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const PartialPermutation& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const CyclePathType& t, std::ostream* os) { *os << t.to_string(); }
inline void PrintTo(const SetPartition& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace permstat

namespace permstat::testing {

// Seeded source for the hand-rolled property generators.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  template <typename T>
  void shuffle(std::vector<T>& xs) {
    std::shuffle(xs.begin(), xs.end(), rng_);
  }

  // Random k-subset of [m], sorted.
  std::vector<int> subset(int m, int k) {
    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 1);
    shuffle(all);
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
  }

  // Packed partial permutation with support exactly [m], m >= 1.
  PartialPermutation packed(int m) {
    while (true) {
      int k = uniform((m + 1) / 2, m);
      auto positions = subset(m, k);
      auto values = subset(m, k);
      shuffle(values);
      PartialPermutation p(positions, values);
      if (p.is_packed() && p.support_size() == m) return p;
    }
  }

  Polynomial weight(int m, int max_degree) {
    while (true) {
      Polynomial f;
      int terms = uniform(1, 2);
      for (int t = 0; t < terms; ++t) {
        Polynomial term(uniform(-2, 3));
        int deg = uniform(0, max_degree);
        for (int i = 0; i < deg && m > 0; ++i) term *= Polynomial::variable(uniform(0, m - 1));
        f += term;
      }
      if (!f.is_zero()) return f;
    }
  }

  ConstrainedTranslate translate(int max_m, int max_degree = 1) {
    int m = uniform(1, max_m);
    std::vector<int> constraints;
    for (int c = 1; c < m; ++c) {
      if (uniform(0, 2) == 0) constraints.push_back(c);
    }
    return ConstrainedTranslate(packed(m), constraints, weight(m, max_degree));
  }

  SetPartition set_partition(int m) {
    std::vector<int> labels(m);
    for (int& l : labels) l = uniform(0, m - 1);
    return SetPartition::from_labels(labels);
  }

  Permutation permutation(int n) {
    Permutation pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    shuffle(pi);
    return pi;
  }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<CyclePathType> types_up_to(int kmax, int kmin = 0) {
  std::vector<CyclePathType> out;
  for (int k = kmin; k <= kmax; ++k) {
    auto level = cycle_path_types_of_size(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

inline std::vector<Partition> partitions_up_to(int nmax) {
  std::vector<Partition> out;
  for (int n = 1; n <= nmax; ++n) {
    auto level = partitions_of(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// Compatible maps psi: [m] -> [n] that are constant on the blocks of rho,
// counted directly over maps of the blocks. With `per_component`, psi must
// also be injective on every connected component of the graph.
inline long brute_block_maps(const PartialPermutation& packed, const SetPartition& rho,
                             const Permutation& pi, bool per_component) {
  const int m = packed.support_size();
  const int n = static_cast<int>(pi.size());
  const int blocks = rho.num_blocks();
  std::vector<int> comp(m);
  std::iota(comp.begin(), comp.end(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (int t = 0; t < packed.size(); ++t) {
      int a = packed.positions()[t] - 1, b = packed.values()[t] - 1;
      int lo = std::min(comp[a], comp[b]);
      if (comp[a] != lo || comp[b] != lo) changed = true;
      comp[a] = comp[b] = lo;
    }
  }
  std::vector<int> image(blocks, 1);
  long count = 0;
  while (true) {
    bool ok = true;
    for (int t = 0; t < packed.size() && ok; ++t) {
      int a = image[rho.block_of(packed.positions()[t])];
      int b = image[rho.block_of(packed.values()[t])];
      ok = pi[a - 1] == b;
    }
    if (ok && per_component) {
      for (int u = 0; u < m && ok; ++u) {
        for (int v = u + 1; v < m && ok; ++v) {
          if (comp[u] == comp[v] && image[rho.block_of(u + 1)] == image[rho.block_of(v + 1)]) ok = false;
        }
      }
    }
    if (ok) ++count;
    int i = 0;
    while (i < blocks && image[i] == n) image[i++] = 1;
    if (i == blocks) break;
    ++image[i];
  }
  return count;
}

}  // namespace permstat::testing
