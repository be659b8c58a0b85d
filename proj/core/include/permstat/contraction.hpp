#pragma once

#include "permstat/partial_permutation.hpp"
#include "permstat/set_partition.hpp"

namespace permstat {

// Result of forcing the vertices in each block of rho to a common image.
struct Contraction {
  // Smallest tau >= rho closed under: a ~ b implies succ(a) ~ succ(b) and
  // pred(a) ~ pred(b) whenever both sides exist.
  SetPartition closure;
  // Cycle-path type of the quotient graph G / closure.
  CyclePathType quotient;
  // Some closure block holds two distinct vertices of one component of G.
  // Exactly then no map that is injective on every component of G can be
  // constant on the blocks of rho.
  bool component_collision = false;
};

// `packed` must have support [m] and rho must lie in Pi_m.
Contraction contract(const PartialPermutation& packed, const SetPartition& rho);

}  // namespace permstat
