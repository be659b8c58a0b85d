#include "permstat/set_partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "permstat/errors.hpp"

namespace permstat {

DisjointSets::DisjointSets(int size) : parent_(size), rank_(size, 0) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(int x, int y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (rank_[x] < rank_[y]) std::swap(x, y);
  parent_[y] = x;
  if (rank_[x] == rank_[y]) ++rank_[x];
  return true;
}

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
  SetPartition p;
  std::map<int, int> relabel;
  p.labels_.reserve(labels.size());
  for (int label : labels) {
    auto [it, inserted] = relabel.try_emplace(label, static_cast<int>(relabel.size()));
    p.labels_.push_back(it->second);
  }
  return p;
}

SetPartition SetPartition::from_blocks(int m, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> labels(m, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw MalformedInput("set partition blocks must be nonempty");
    for (int x : blocks[b]) {
      if (x < 1 || x > m) throw MalformedInput("block element " + std::to_string(x) + " outside [m]");
      if (labels[x - 1] != -1) throw MalformedInput("element " + std::to_string(x) + " in two blocks");
      labels[x - 1] = static_cast<int>(b);
    }
  }
  for (int x = 0; x < m; ++x) {
    if (labels[x] == -1) throw MalformedInput("element " + std::to_string(x + 1) + " not covered");
  }
  return from_labels(labels);
}

SetPartition SetPartition::finest(int m) {
  std::vector<int> labels(m);
  std::iota(labels.begin(), labels.end(), 0);
  return from_labels(labels);
}

SetPartition SetPartition::coarsest(int m) { return from_labels(std::vector<int>(m, 0)); }

int SetPartition::num_blocks() const {
  return labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end()) + 1;
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(num_blocks());
  for (int x = 0; x < ground_size(); ++x) out[labels_[x]].push_back(x + 1);
  return out;
}

bool SetPartition::refines(const SetPartition& other) const {
  if (ground_size() != other.ground_size()) return false;
  std::vector<int> image(num_blocks(), -1);
  for (int x = 0; x < ground_size(); ++x) {
    int& target = image[labels_[x]];
    if (target == -1) target = other.labels_[x];
    else if (target != other.labels_[x]) return false;
  }
  return true;
}

std::string SetPartition::to_string() const {
  std::string out = "{";
  auto bs = blocks();
  for (std::size_t b = 0; b < bs.size(); ++b) {
    if (b) out += ",";
    out += "{";
    for (std::size_t i = 0; i < bs[b].size(); ++i) {
      if (i) out += ",";
      out += std::to_string(bs[b][i]);
    }
    out += "}";
  }
  return out + "}";
}

void for_each_set_partition(int m, const std::function<void(const SetPartition&)>& visit) {
  std::vector<int> labels(m, 0);
  // prefix_max[i] = max(labels[0..i]).
  std::vector<int> prefix_max(m, 0);
  while (true) {
    visit(SetPartition::from_labels(labels));
    int i = m - 1;
    while (i > 0 && labels[i] > prefix_max[i - 1]) --i;
    if (i <= 0) return;
    ++labels[i];
    prefix_max[i] = std::max(prefix_max[i - 1], labels[i]);
    for (int j = i + 1; j < m; ++j) {
      labels[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::vector<SetPartition> set_partitions(int m) {
  std::vector<SetPartition> out;
  for_each_set_partition(m, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

Integer bell_number(int m) {
  // Bell triangle.
  std::vector<Integer> row{1};
  for (int i = 0; i < m; ++i) {
    std::vector<Integer> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

long mobius_lower(const SetPartition& rho) {
  long value = 1;
  for (const auto& block : rho.blocks()) {
    for (long i = 2; i < static_cast<long>(block.size()); ++i) value *= i;
  }
  return (rho.ground_size() - rho.num_blocks()) % 2 == 0 ? value : -value;
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
  if (a.ground_size() != b.ground_size()) {
    throw SizeMismatch("join of set partitions on grounds of size " + std::to_string(a.ground_size()) +
                       " and " + std::to_string(b.ground_size()));
  }
  int m = a.ground_size();
  DisjointSets sets(m);
  for (const auto* p : {&a, &b}) {
    std::vector<int> first(p->num_blocks(), -1);
    for (int x = 0; x < m; ++x) {
      int& f = first[p->labels()[x]];
      if (f == -1) f = x;
      else sets.unite(f, x);
    }
  }
  std::vector<int> labels(m);
  for (int x = 0; x < m; ++x) labels[x] = sets.find(x);
  return SetPartition::from_labels(labels);
}

}  // namespace permstat
