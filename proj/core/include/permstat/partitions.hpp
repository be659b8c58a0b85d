#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permstat/rational.hpp"

namespace permstat {

// Integer partition with parts in weakly decreasing order.
using Partition = std::vector<int>;

// All partitions of n in reverse lexicographic order ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n);

int partition_size(const Partition& lambda);

// mult[i] = number of parts equal to i; mult[0] is unused and always 0.
std::vector<int> multiplicities(const Partition& lambda);

// |K_lambda| = n! / prod_i (i^{m_i} m_i!).
Integer class_size(const Partition& lambda);

// Values of (n, m_1, ..., m_K) at lambda, padded with zeros up to `num_vars`.
std::vector<Rational> class_coordinates(const Partition& lambda, int num_vars);

// Parses "4,2,1"; parts are sorted into decreasing order.
Partition parse_partition(std::string_view text);

std::string partition_to_string(const Partition& lambda);

}  // namespace permstat
