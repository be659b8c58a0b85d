#include "permstat/constrained_sum.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "permstat/errors.hpp"

namespace permstat {

void validate_constraints(int k, std::span<const int> constraints) {
  int previous = 0;
  for (int c : constraints) {
    if (c <= previous || c >= k) {
      throw MalformedInput("constraint set must be a strictly increasing subset of [" +
                           std::to_string(k - 1) + "]");
    }
    previous = c;
  }
}

namespace {

void validate_weight(const Polynomial& weight, int k) {
  if (weight.num_vars() > k) {
    throw MalformedInput("weight mentions x" + std::to_string(weight.num_vars()) + " but only " +
                         std::to_string(k) + " positions exist");
  }
}

}  // namespace

Rational constrained_sum_at(const Polynomial& weight, int k, std::span<const int> constraints,
                            int n) {
  validate_constraints(k, constraints);
  validate_weight(weight, k);
  if (k == 0) return weight.constant_term();
  std::vector<bool> forced(k + 1, false);  // forced[t]: i_t = i_{t-1} + 1
  for (int c : constraints) forced[c + 1] = true;
  // Positions still needed after slot t, counted as the length of [n] they use.
  std::vector<int> tail(k + 2, 0);
  for (int t = k; t >= 1; --t) tail[t] = tail[t + 1] + 1;

  std::vector<Rational> point(k);
  Rational total = 0;
  auto recurse = [&](auto&& self, int t, int last) -> void {
    if (t > k) {
      total += weight.evaluate(point);
      return;
    }
    if (forced[t]) {
      if (last + 1 > n) return;
      point[t - 1] = last + 1;
      self(self, t + 1, last + 1);
      return;
    }
    for (int i = last + 1; i + (k - t) <= n; ++i) {
      point[t - 1] = i;
      self(self, t + 1, i);
    }
  };
  recurse(recurse, 1, 0);
  return total;
}

ConstrainedSum constrained_sum(const Polynomial& weight, int k, std::span<const int> constraints) {
  validate_constraints(k, constraints);
  validate_weight(weight, k);
  using Key = std::tuple<std::string, int, std::vector<int>>;
  static std::mutex mutex;
  static std::map<Key, ConstrainedSum> cache;
  Key key{weight.to_string(VariableNaming::positions()), k,
          std::vector<int>(constraints.begin(), constraints.end())};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  const int q = static_cast<int>(constraints.size());
  const int degree = std::max(weight.total_degree(), 0) + k - q;
  std::vector<Rational> xs, ys;
  for (int n = q; n <= q + degree; ++n) {
    xs.emplace_back(n);
    ys.push_back(constrained_sum_at(weight, k, constraints, n));
  }
  ConstrainedSum result;
  result.sum = interpolate(xs, ys);
  result.fbar = exact_divide_univariate(result.sum, binomial_poly(q, k - q));

  std::lock_guard lock(mutex);
  cache.emplace(std::move(key), result);
  return result;
}

}  // namespace permstat
