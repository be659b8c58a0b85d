#include "permstat/contraction.hpp"

#include <deque>
#include <set>
#include <utility>

#include "permstat/errors.hpp"

namespace permstat {

Contraction contract(const PartialPermutation& packed, const SetPartition& rho) {
  const int m = packed.support_size();
  if (!packed.is_packed()) throw MalformedInput("contract: " + packed.to_string() + " is not packed");
  if (rho.ground_size() != m) {
    throw SizeMismatch("contract: set partition on " + std::to_string(rho.ground_size()) +
                       " elements for support size " + std::to_string(m));
  }

  // 0-based successor / predecessor per vertex, -1 when absent.
  std::vector<int> succ(m, -1), pred(m, -1), component(m, -1);
  for (int t = 0; t < packed.size(); ++t) {
    succ[packed.positions()[t] - 1] = packed.values()[t] - 1;
    pred[packed.values()[t] - 1] = packed.positions()[t] - 1;
  }
  {
    DisjointSets comps(m);
    for (int v = 0; v < m; ++v) {
      if (succ[v] >= 0) comps.unite(v, succ[v]);
    }
    for (int v = 0; v < m; ++v) component[v] = comps.find(v);
  }

  // Congruence closure: each class remembers one successor and one
  // predecessor; merging two classes that both have one merges those too.
  DisjointSets classes(m);
  std::vector<int> class_succ = succ, class_pred = pred;
  std::deque<std::pair<int, int>> pending;
  auto blocks = rho.blocks();
  for (const auto& block : blocks) {
    for (std::size_t i = 1; i < block.size(); ++i) pending.emplace_back(block[0] - 1, block[i] - 1);
  }
  while (!pending.empty()) {
    auto [a, b] = pending.front();
    pending.pop_front();
    int ra = classes.find(a), rb = classes.find(b);
    if (ra == rb) continue;
    int sa = class_succ[ra], sb = class_succ[rb];
    int pa = class_pred[ra], pb = class_pred[rb];
    classes.unite(ra, rb);
    int root = classes.find(ra);
    class_succ[root] = sa >= 0 ? sa : sb;
    class_pred[root] = pa >= 0 ? pa : pb;
    if (sa >= 0 && sb >= 0) pending.emplace_back(sa, sb);
    if (pa >= 0 && pb >= 0) pending.emplace_back(pa, pb);
  }

  Contraction result;
  std::vector<int> labels(m);
  for (int v = 0; v < m; ++v) labels[v] = classes.find(v);
  result.closure = SetPartition::from_labels(labels);

  std::set<std::pair<int, int>> members;  // (class, component)
  for (int v = 0; v < m; ++v) {
    if (!members.emplace(result.closure.labels()[v], component[v]).second) {
      result.component_collision = true;
      break;
    }
  }

  std::set<std::pair<int, int>> edges;
  for (int t = 0; t < packed.size(); ++t) {
    edges.emplace(result.closure.block_of(packed.positions()[t]) + 1,
                  result.closure.block_of(packed.values()[t]) + 1);
  }
  std::vector<int> u, w;
  for (const auto& [from, to] : edges) {
    u.push_back(from);
    w.push_back(to);
  }
  // Vertices with no incident edge cannot occur: every vertex of a packed
  // partial permutation lies on an edge, and merging keeps that true.
  result.quotient = cycle_path_type(PartialPermutation(std::move(u), std::move(w)));
  return result;
}

}  // namespace permstat
