#include "permstat/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "permstat/errors.hpp"

namespace permstat::oracle {

namespace {

void check_size(int n, int max_n) {
  if (n > max_n) {
    throw ResourceLimit("oracle enumeration of S_" + std::to_string(n) + " exceeds max n = " +
                        std::to_string(max_n));
  }
}

// Component id of every vertex of the packed graph (0-based vertices).
std::vector<int> components(const PartialPermutation& packed) {
  const int m = packed.support_size();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int t = 0; t < packed.size(); ++t) {
    parent[find(packed.positions()[t] - 1)] = find(packed.values()[t] - 1);
  }
  std::vector<int> out(m);
  for (int v = 0; v < m; ++v) out[v] = find(v);
  return out;
}

enum class Injectivity { kGlobal, kPerComponent, kNone };

Integer count_maps(const PartialPermutation& packed, const Permutation& pi, Injectivity mode) {
  if (!packed.is_packed()) throw MalformedInput(packed.to_string() + " is not packed");
  const int m = packed.support_size();
  const int n = static_cast<int>(pi.size());
  auto comp = components(packed);
  std::vector<int> succ(m, -1);
  for (int t = 0; t < packed.size(); ++t) succ[packed.positions()[t] - 1] = packed.values()[t] - 1;

  std::vector<int> phi(m, 0);
  Integer total = 0;
  auto recurse = [&](auto&& self, int v) -> void {
    if (v == m) {
      ++total;
      return;
    }
    for (int x = 1; x <= n; ++x) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        if (phi[u] != x) continue;
        if (mode == Injectivity::kGlobal) ok = false;
        if (mode == Injectivity::kPerComponent && comp[u] == comp[v]) ok = false;
      }
      if (!ok) continue;
      phi[v] = x;
      // Edges whose endpoints are both assigned.
      for (int u = 0; u <= v && ok; ++u) {
        if (succ[u] >= 0 && std::max(u, succ[u]) == v) ok = pi[phi[u] - 1] == phi[succ[u]];
      }
      if (ok) self(self, v + 1);
    }
  };
  recurse(recurse, 0);
  return total;
}

}  // namespace

Partition cycle_type(const Permutation& pi) {
  const int n = static_cast<int>(pi.size());
  std::vector<bool> seen(n, false);
  Partition lambda;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = pi[j] - 1) {
      seen[j] = true;
      ++len;
    }
    lambda.push_back(len);
  }
  std::sort(lambda.rbegin(), lambda.rend());
  return lambda;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  Permutation pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    visit(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
}

Permutation class_representative(const Partition& lambda, int rotation) {
  const int n = partition_size(lambda);
  Permutation base(n);
  int start = 0;
  for (int part : lambda) {
    for (int i = 0; i < part; ++i) base[start + i] = start + (i + 1) % part + 1;
    start += part;
  }
  if (n == 0) return base;
  int r = ((rotation % n) + n) % n;
  Permutation out(n);
  for (int i = 0; i < n; ++i) out[(i + r) % n] = (base[i] - 1 + r) % n + 1;
  return out;
}

ClassTable::ClassTable(int n, int max_n) : n_(n) {
  check_size(n, max_n);
  for_each_permutation(n, [&](const Permutation& pi) { classes_[cycle_type(pi)].push_back(pi); });
}

const std::vector<Permutation>& ClassTable::of(const Partition& lambda) const {
  auto it = classes_.find(lambda);
  if (it == classes_.end()) {
    throw DomainError(partition_to_string(lambda) + " is not a partition of " + std::to_string(n_));
  }
  return it->second;
}

Rational class_moment(const Evaluator& psi, const Partition& lambda, int d, int max_n) {
  const int n = partition_size(lambda);
  check_size(n, max_n);
  Rational total = 0;
  Integer count = 0;
  for_each_permutation(n, [&](const Permutation& pi) {
    if (cycle_type(pi) != lambda) return;
    Rational value = psi(pi), power = 1;
    for (int i = 0; i < d; ++i) power *= value;
    total += power;
    ++count;
  });
  return total / Rational(count);
}

Rational uniform_moment(const Evaluator& psi, int n, int d, int max_n) {
  check_size(n, max_n);
  Rational total = 0;
  Integer count = 0;
  for_each_permutation(n, [&](const Permutation& pi) {
    Rational value = psi(pi), power = 1;
    for (int i = 0; i < d; ++i) power *= value;
    total += power;
    ++count;
  });
  return total / Rational(count);
}

Integer injection_count_in(const PartialPermutation& packed, const Permutation& pi) {
  return count_maps(packed, pi, Injectivity::kGlobal);
}

Integer injection_count(const PartialPermutation& packed, const Partition& lambda, int max_n) {
  check_size(partition_size(lambda), max_n);
  return count_maps(packed, class_representative(lambda), Injectivity::kGlobal);
}

Integer compatible_function_count(const PartialPermutation& packed, const Partition& lambda,
                                  int max_n) {
  check_size(partition_size(lambda), max_n);
  return count_maps(packed, class_representative(lambda), Injectivity::kPerComponent);
}

Integer all_compatible_function_count(const PartialPermutation& packed, const Partition& lambda,
                                      int max_n) {
  check_size(partition_size(lambda), max_n);
  return count_maps(packed, class_representative(lambda), Injectivity::kNone);
}

Rational excedances(const Permutation& pi) {
  int count = 0;
  for (std::size_t i = 0; i < pi.size(); ++i) count += pi[i] > static_cast<int>(i) + 1;
  return count;
}

Rational descents(const Permutation& pi) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < pi.size(); ++i) count += pi[i] > pi[i + 1];
  return count;
}

Rational major_index(const Permutation& pi) {
  int total = 0;
  for (std::size_t i = 0; i + 1 < pi.size(); ++i) {
    if (pi[i] > pi[i + 1]) total += static_cast<int>(i) + 1;
  }
  return total;
}

Rational inversions(const Permutation& pi) {
  int count = 0;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    for (std::size_t j = i + 1; j < pi.size(); ++j) count += pi[i] > pi[j];
  }
  return count;
}

Rational fixed_points(const Permutation& pi) {
  int count = 0;
  for (std::size_t i = 0; i < pi.size(); ++i) count += pi[i] == static_cast<int>(i) + 1;
  return count;
}

Rational bivincular_occurrences(const Permutation& pi, const std::vector<int>& sigma,
                                const std::vector<int>& A, const std::vector<int>& B,
                                const Polynomial& f, const Polynomial& g) {
  const int n = static_cast<int>(pi.size());
  const int k = static_cast<int>(sigma.size());
  Rational total = 0;
  std::vector<int> idx;
  auto recurse = [&](auto&& self, int next) -> void {
    if (static_cast<int>(idx.size()) == k) {
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
          if ((pi[idx[a] - 1] < pi[idx[b] - 1]) != (sigma[a] < sigma[b])) return;
        }
      }
      for (int a : A) {
        if (idx[a] != idx[a - 1] + 1) return;
      }
      std::vector<int> sorted_values(k);
      for (int a = 0; a < k; ++a) sorted_values[a] = pi[idx[a] - 1];
      std::sort(sorted_values.begin(), sorted_values.end());
      for (int b : B) {
        if (sorted_values[b] != sorted_values[b - 1] + 1) return;
      }
      std::vector<Rational> at_positions(idx.begin(), idx.end());
      std::vector<Rational> at_values(sorted_values.begin(), sorted_values.end());
      total += f.evaluate(at_positions) * g.evaluate(at_values);
      return;
    }
    for (int i = next; i <= n; ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  recurse(recurse, 1);
  return total;
}

}  // namespace permstat::oracle
