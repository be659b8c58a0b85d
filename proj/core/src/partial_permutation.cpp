#include "permstat/partial_permutation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "permstat/errors.hpp"
#include "permstat/partitions.hpp"

namespace permstat {
namespace {

std::string tuple_to_string(std::span<const int> xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + ")";
}

std::string list_to_string(const std::vector<int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw MalformedInput("expected [..] list, got \"" + text + "\"");
  }
  std::stringstream stream(text.substr(1, text.size() - 2));
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) continue;
    out.push_back(std::stoi(token));
  }
  return out;
}

}  // namespace

PartialPermutation::PartialPermutation(std::vector<int> positions, std::vector<int> values) {
  if (positions.size() != values.size()) {
    throw MalformedInput("partial permutation needs aligned tuples of equal length");
  }
  std::vector<std::size_t> order(positions.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return positions[a] < positions[b]; });
  positions_.reserve(order.size());
  values_.reserve(order.size());
  for (std::size_t idx : order) {
    positions_.push_back(positions[idx]);
    values_.push_back(values[idx]);
  }
  for (std::size_t t = 0; t < positions_.size(); ++t) {
    if (positions_[t] <= 0 || values_[t] <= 0) {
      throw MalformedInput("partial permutation entries must be positive: " + to_string());
    }
    if (t > 0 && positions_[t] == positions_[t - 1]) {
      throw MalformedInput("repeated position in " + to_string());
    }
  }
  std::vector<int> sorted_values = values_;
  std::sort(sorted_values.begin(), sorted_values.end());
  if (std::adjacent_find(sorted_values.begin(), sorted_values.end()) != sorted_values.end()) {
    throw MalformedInput("repeated value in " + to_string());
  }
}

std::vector<int> PartialPermutation::support() const {
  std::vector<int> out(positions_.begin(), positions_.end());
  out.insert(out.end(), values_.begin(), values_.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int PartialPermutation::support_size() const { return static_cast<int>(support().size()); }

bool PartialPermutation::is_packed() const {
  auto s = support();
  return s.empty() || s.back() == static_cast<int>(s.size());
}

std::optional<int> PartialPermutation::image(int position) const {
  auto it = std::lower_bound(positions_.begin(), positions_.end(), position);
  if (it == positions_.end() || *it != position) return std::nullopt;
  return values_[it - positions_.begin()];
}

std::optional<int> PartialPermutation::preimage(int value) const {
  auto it = std::find(values_.begin(), values_.end(), value);
  if (it == values_.end()) return std::nullopt;
  return positions_[it - values_.begin()];
}

std::string PartialPermutation::to_string() const {
  return tuple_to_string(positions_) + tuple_to_string(values_);
}

CanonicalForm canonicalize(const PartialPermutation& raw) {
  auto support = raw.support();
  auto rank = [&](int x) {
    return static_cast<int>(std::lower_bound(support.begin(), support.end(), x) - support.begin()) + 1;
  };
  std::vector<int> u, v;
  for (int i : raw.positions()) u.push_back(rank(i));
  for (int j : raw.values()) v.push_back(rank(j));
  return {PartialPermutation(std::move(u), std::move(v)), std::move(support)};
}

PartialPermutation relabel(std::span<const int> support, const PartialPermutation& packed) {
  int m = packed.support_size();
  if (static_cast<int>(support.size()) != m) {
    throw SizeMismatch("relabel: support has " + std::to_string(support.size()) +
                       " elements but the partial permutation has support size " +
                       std::to_string(m));
  }
  if (!packed.is_packed()) throw MalformedInput("relabel: " + packed.to_string() + " is not packed");
  std::vector<int> sorted(support.begin(), support.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> i, j;
  for (int u : packed.positions()) i.push_back(sorted[u - 1]);
  for (int v : packed.values()) j.push_back(sorted[v - 1]);
  return PartialPermutation(std::move(i), std::move(j));
}

int CyclePathType::size() const {
  return std::accumulate(cycles.begin(), cycles.end(), 0) +
         std::accumulate(paths.begin(), paths.end(), 0);
}

int CyclePathType::support_size() const { return size() + static_cast<int>(paths.size()); }

std::string CyclePathType::to_string() const {
  return "mu=" + list_to_string(cycles) + ";nu=" + list_to_string(paths);
}

CyclePathType CyclePathType::from_string(const std::string& text) {
  auto semi = text.find(';');
  if (text.rfind("mu=", 0) != 0 || semi == std::string::npos ||
      text.compare(semi + 1, 3, "nu=") != 0) {
    throw MalformedInput("expected \"mu=[..];nu=[..]\", got \"" + text + "\"");
  }
  CyclePathType t{parse_list(text.substr(3, semi - 3)), parse_list(text.substr(semi + 4))};
  std::sort(t.cycles.rbegin(), t.cycles.rend());
  std::sort(t.paths.rbegin(), t.paths.rend());
  for (int c : t.cycles) if (c <= 0) throw MalformedInput("cycle lengths must be positive");
  for (int p : t.paths) if (p <= 0) throw MalformedInput("path lengths must be positive");
  return t;
}

CyclePathType cycle_path_type(const PartialPermutation& p) {
  std::map<int, int> next;
  std::set<int> has_pred;
  for (int t = 0; t < p.size(); ++t) {
    next[p.positions()[t]] = p.values()[t];
    has_pred.insert(p.values()[t]);
  }
  CyclePathType type;
  std::set<int> seen;
  for (int start : p.support()) {
    if (has_pred.count(start)) continue;
    int length = 0;
    int v = start;
    seen.insert(v);
    for (auto it = next.find(v); it != next.end(); it = next.find(v)) {
      v = it->second;
      seen.insert(v);
      ++length;
    }
    if (length > 0) type.paths.push_back(length);
  }
  for (int start : p.support()) {
    if (seen.count(start)) continue;
    int length = 0;
    int v = start;
    do {
      seen.insert(v);
      v = next.at(v);
      ++length;
    } while (v != start);
    type.cycles.push_back(length);
  }
  std::sort(type.cycles.rbegin(), type.cycles.rend());
  std::sort(type.paths.rbegin(), type.paths.rend());
  return type;
}

PartialPermutation canonical_representative(const CyclePathType& type) {
  std::vector<int> u, v;
  int base = 1;
  for (int len : type.cycles) {
    for (int t = 0; t < len; ++t) {
      u.push_back(base + t);
      v.push_back(base + (t + 1) % len);
    }
    base += len;
  }
  for (int len : type.paths) {
    for (int t = 0; t < len; ++t) {
      u.push_back(base + t);
      v.push_back(base + t + 1);
    }
    base += len + 1;
  }
  return PartialPermutation(std::move(u), std::move(v));
}

std::vector<CyclePathType> cycle_path_types_of_size(int k) {
  std::vector<CyclePathType> out;
  for (int a = 0; a <= k; ++a) {
    for (const auto& mu : partitions_of(a)) {
      for (const auto& nu : partitions_of(k - a)) out.push_back({mu, nu});
    }
  }
  return out;
}

}  // namespace permstat
