#pragma once

#include <cstddef>
#include <filesystem>
#include <future>
#include <map>
#include <memory>
#include <mutex>

#include "permstat/expectation.hpp"
#include "permstat/partial_permutation.hpp"
#include "permstat/partitions.hpp"
#include "permstat/polynomial.hpp"

namespace permstat {

// Number of maps psi from the vertices of a graph of type t into [n] with
// pi(psi(i)) = psi(j) along every edge and psi injective on each connected
// component, for pi of cycle type lambda:
//   prod_i (i m_i)^{m_i(mu)} * prod_l (n - sum_{i <= l} i m_i)^{m_l(nu)}.
Polynomial c_poly(const CyclePathType& type);

// Same count without the per-component injectivity requirement. A cycle of
// length s can land on any point whose pi-orbit length divides s, a path on
// any point at all:
//   prod_{cycles s} (sum_{i | s} i m_i) * n^{len(nu)}.
Polynomial compatible_poly(const CyclePathType& type);

struct IndicatorMomentResult {
  CyclePathType type;
  int support_size = 0;
  // f with (n)_m E_lambda[1_IJ] = f(n, m_1(lambda), ..., m_k(lambda)).
  Polynomial poly;
  // poly / (n)_m
  RationalExpectation expectation;
};

inline constexpr int kDefaultBellCap = 12;

// Uncached computation by Moebius inversion over the set partitions of the
// support. Throws ResourceLimit when the support exceeds `bell_cap`.
IndicatorMomentResult compute_indicator_moment(const CyclePathType& type,
                                               int bell_cap = kDefaultBellCap);

// Memoizing front end. Concurrent requests for one type share a single
// computation.
class IndicatorMoments {
 public:
  explicit IndicatorMoments(int bell_cap = kDefaultBellCap) : bell_cap_(bell_cap) {}

  IndicatorMoments(const IndicatorMoments&) = delete;
  IndicatorMoments& operator=(const IndicatorMoments&) = delete;

  std::shared_ptr<const IndicatorMomentResult> get(const CyclePathType& type);

  int bell_cap() const { return bell_cap_; }
  void set_bell_cap(int cap) { bell_cap_ = cap; }

  // Number of Moebius computations actually performed.
  std::size_t computations() const;
  std::size_t cached_types() const;
  void clear();

  // JSON object mapping "mu=[..];nu=[..]" to a serialized polynomial.
  void load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

 private:
  using Entry = std::shared_future<std::shared_ptr<const IndicatorMomentResult>>;

  int bell_cap_;
  mutable std::mutex mutex_;
  std::map<CyclePathType, Entry> cache_;
  std::size_t computations_ = 0;
};

IndicatorMoments& shared_indicator_moments();

// P[pi(i_t) = j_t for all t] for pi uniform in K_lambda. Throws DomainError
// when the support of p is not inside [|lambda|].
Rational indicator_expectation(const PartialPermutation& p, const Partition& lambda,
                               IndicatorMoments& moments = shared_indicator_moments());

}  // namespace permstat
