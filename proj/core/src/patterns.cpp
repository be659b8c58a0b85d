#include "permstat/patterns.hpp"

#include <algorithm>
#include <functional>

#include "permstat/errors.hpp"

namespace permstat {

int BivincularPattern::power() const {
  return size() + std::max(f.total_degree(), 0) + std::max(g.total_degree(), 0) - shift();
}

void BivincularPattern::validate() const {
  const int k = size();
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < k; ++i) {
    if (sorted[i] != i + 1) throw MalformedInput("pattern is not a permutation of [" + std::to_string(k) + "]");
  }
  for (const auto* set : {&A, &B}) {
    int previous = 0;
    for (int a : *set) {
      if (a <= previous || a >= k) {
        throw MalformedInput("adjacency set must be a strictly increasing subset of [" +
                             std::to_string(k - 1) + "]");
      }
      previous = a;
    }
  }
  if (f.is_zero() || g.is_zero()) throw MalformedInput("pattern weight is zero");
  if (f.num_vars() > k || g.num_vars() > k) {
    throw MalformedInput("pattern weight mentions a variable beyond x" + std::to_string(k));
  }
}

namespace {

// Visits the k-subsets of [m] as sorted vectors.
void for_each_subset(int m, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> chosen;
  auto recurse = [&](auto&& self, int next) -> void {
    if (static_cast<int>(chosen.size()) == k) {
      visit(chosen);
      return;
    }
    for (int x = next; x <= m - (k - static_cast<int>(chosen.size())) + 1; ++x) {
      chosen.push_back(x);
      self(self, x + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 1);
}

}  // namespace

RegularStatistic compile_bivincular(const BivincularPattern& pattern) {
  pattern.validate();
  const int k = pattern.size();
  RegularStatistic out;
  for (int m = k; m <= 2 * k; ++m) {
    for_each_subset(m, k, [&](const std::vector<int>& U) {
      for_each_subset(m, k, [&](const std::vector<int>& W) {
        std::vector<bool> covered(m + 1, false);
        for (int x : U) covered[x] = true;
        for (int x : W) covered[x] = true;
        if (std::count(covered.begin() + 1, covered.end(), true) != m) return;

        std::vector<int> constraints;
        for (int a : pattern.A) {
          if (U[a] != U[a - 1] + 1) return;
          constraints.push_back(U[a - 1]);
        }
        for (int b : pattern.B) {
          if (W[b] != W[b - 1] + 1) return;
          constraints.push_back(W[b - 1]);
        }
        std::sort(constraints.begin(), constraints.end());
        constraints.erase(std::unique(constraints.begin(), constraints.end()), constraints.end());

        std::vector<int> V(k);
        for (int t = 0; t < k; ++t) V[t] = W[pattern.sigma[t] - 1];
        std::vector<int> to_u(k), to_w(k);
        for (int t = 0; t < k; ++t) {
          to_u[t] = U[t] - 1;
          to_w[t] = W[t] - 1;
        }
        Polynomial weight = pattern.f.rename(to_u) * pattern.g.rename(to_w);
        out.add(ConstrainedTranslate(PartialPermutation(U, V), std::move(constraints),
                                     std::move(weight)));
      });
    });
  }
  return out;
}

RegularStatistic pattern_count(const std::vector<int>& sigma, const std::vector<int>& A) {
  return compile_bivincular(BivincularPattern{sigma, A, {}});
}

RegularStatistic excedances() {
  return ConstrainedTranslate(PartialPermutation({1}, {2}), {});
}

RegularStatistic descents() { return pattern_count({2, 1}, {1}); }

RegularStatistic inversions() { return pattern_count({2, 1}); }

RegularStatistic major_index() {
  struct Row {
    std::vector<int> U, V;
    int c;
  };
  // Each term is weighted by x_c, the left end of the adjacent pair.
  static const std::vector<Row> rows = {
      {{1, 2}, {2, 1}, 1}, {{1, 2}, {3, 1}, 1}, {{1, 2}, {3, 2}, 1}, {{2, 3}, {2, 1}, 2},
      {{2, 3}, {3, 1}, 2}, {{1, 2}, {4, 3}, 1}, {{2, 3}, {4, 1}, 2}, {{3, 4}, {2, 1}, 3},
  };
  RegularStatistic out;
  for (const auto& row : rows) {
    out.add(ConstrainedTranslate(PartialPermutation(row.U, row.V), {row.c},
                                 Polynomial::variable(row.c - 1)));
  }
  return out;
}

RegularStatistic fixed_points() {
  return ConstrainedTranslate(PartialPermutation({1}, {1}), {});
}

RegularStatistic two_cycles() {
  return ConstrainedTranslate(PartialPermutation({1, 2}, {2, 1}), {});
}

RegularStatistic builtin(std::string_view name) {
  if (name == "exc") return excedances();
  if (name == "des") return descents();
  if (name == "maj") return major_index();
  if (name == "inv") return inversions();
  if (name == "fix" || name == "fixpoints") return fixed_points();
  if (name == "cyc2") return two_cycles();
  throw MalformedInput("unknown builtin statistic \"" + std::string(name) + "\"");
}

}  // namespace permstat
