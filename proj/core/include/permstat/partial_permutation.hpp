#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace permstat {

// An injection i_t -> j_t between two k-subsets of the positive integers,
// stored with positions strictly increasing. Reordering the aligned tuples
// simultaneously does not change the object, so construction sorts them.
class PartialPermutation {
 public:
  PartialPermutation() = default;

  // Throws MalformedInput on length mismatch, non-positive entries or
  // repeated entries within either tuple.
  PartialPermutation(std::vector<int> positions, std::vector<int> values);

  std::span<const int> positions() const { return positions_; }
  std::span<const int> values() const { return values_; }

  int size() const { return static_cast<int>(positions_.size()); }
  bool empty() const { return positions_.empty(); }

  // Sorted union of positions and values.
  std::vector<int> support() const;
  int support_size() const;

  // Support is exactly {1, ..., m}.
  bool is_packed() const;

  std::optional<int> image(int position) const;
  std::optional<int> preimage(int value) const;

  // "(1,2)(2,1)": positions then values.
  std::string to_string() const;

  friend bool operator==(const PartialPermutation&, const PartialPermutation&) = default;
  friend auto operator<=>(const PartialPermutation&, const PartialPermutation&) = default;

 private:
  std::vector<int> positions_;
  std::vector<int> values_;
};

struct CanonicalForm {
  PartialPermutation packed;
  std::vector<int> support;
};

// Order-preserving relabeling of the support onto {1, ..., m}.
CanonicalForm canonicalize(const PartialPermutation& raw);

// Substitutes support[u - 1] for every entry u of `packed`. Throws
// SizeMismatch unless support.size() equals packed's support size.
PartialPermutation relabel(std::span<const int> support, const PartialPermutation& packed);

// Cycle lengths and path lengths (in edges) of the functional digraph
// i_t -> j_t, both sorted in decreasing order.
struct CyclePathType {
  std::vector<int> cycles;
  std::vector<int> paths;

  int size() const;          // number of edges: |mu| + |nu|
  int support_size() const;  // number of vertices: |mu| + |nu| + len(nu)

  // "mu=[2,1];nu=[2]"
  std::string to_string() const;
  static CyclePathType from_string(const std::string& text);

  friend bool operator==(const CyclePathType&, const CyclePathType&) = default;
  friend auto operator<=>(const CyclePathType&, const CyclePathType&) = default;
};

CyclePathType cycle_path_type(const PartialPermutation& p);

// Cycles first, then paths, each in decreasing length, laid out over
// consecutive integers starting at 1.
PartialPermutation canonical_representative(const CyclePathType& type);

// Every cycle-path type with exactly k edges.
std::vector<CyclePathType> cycle_path_types_of_size(int k);

}  // namespace permstat
