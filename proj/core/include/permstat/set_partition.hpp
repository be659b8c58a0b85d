#pragma once

#include <functional>
#include <string>
#include <vector>

#include "permstat/rational.hpp"

namespace permstat {

// Union-find over {0, ..., size - 1} with path halving and union by rank.
class DisjointSets {
 public:
  explicit DisjointSets(int size);

  int find(int x);
  // Returns true when x and y were in different sets.
  bool unite(int x, int y);
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

// A set partition of [m] stored as its restricted-growth string: labels[i]
// is the block of element i + 1, and every label is at most one more than
// the maximum of the labels before it. The encoding is unique per partition.
class SetPartition {
 public:
  SetPartition() = default;

  // Any block labeling; relabeled into restricted-growth form.
  static SetPartition from_labels(const std::vector<int>& labels);
  // Blocks over {1, ..., m}; must cover [m] exactly once.
  static SetPartition from_blocks(int m, const std::vector<std::vector<int>>& blocks);
  static SetPartition finest(int m);
  static SetPartition coarsest(int m);

  int ground_size() const { return static_cast<int>(labels_.size()); }
  int num_blocks() const;
  const std::vector<int>& labels() const { return labels_; }
  // Block index (0-based) of element x in {1, ..., m}.
  int block_of(int x) const { return labels_[x - 1]; }
  // Blocks as sorted lists of 1-based elements, ordered by least element.
  std::vector<std::vector<int>> blocks() const;

  // Every block of *this lies inside a block of other.
  bool refines(const SetPartition& other) const;

  std::string to_string() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  std::vector<int> labels_;
};

// Visits every partition of [m] once, in lexicographic order of the
// restricted-growth string. m = 0 visits only the empty partition.
void for_each_set_partition(int m, const std::function<void(const SetPartition&)>& visit);
std::vector<SetPartition> set_partitions(int m);

Integer bell_number(int m);

// mu(0_m, rho) = (-1)^{m - |rho|} prod_blocks (|block| - 1)!
long mobius_lower(const SetPartition& rho);

// Finest common coarsening. Throws SizeMismatch on different ground sets.
SetPartition join(const SetPartition& a, const SetPartition& b);

}  // namespace permstat
