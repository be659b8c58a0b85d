#include "permstat/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "permstat/errors.hpp"

namespace permstat {

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition current;
  std::function<void(int, int)> extend = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  extend(n, n);
  return out;
}

int partition_size(const Partition& lambda) {
  return std::accumulate(lambda.begin(), lambda.end(), 0);
}

std::vector<int> multiplicities(const Partition& lambda) {
  int largest = lambda.empty() ? 0 : *std::max_element(lambda.begin(), lambda.end());
  std::vector<int> mult(largest + 1, 0);
  for (int part : lambda) ++mult[part];
  return mult;
}

Integer class_size(const Partition& lambda) {
  Integer denom = 1;
  auto mult = multiplicities(lambda);
  for (std::size_t i = 1; i < mult.size(); ++i) {
    for (int j = 0; j < mult[i]; ++j) denom *= static_cast<long>(i);
    denom *= factorial(mult[i]);
  }
  return factorial(partition_size(lambda)) / denom;
}

std::vector<Rational> class_coordinates(const Partition& lambda, int num_vars) {
  auto mult = multiplicities(lambda);
  std::vector<Rational> values(std::max<std::size_t>(num_vars, mult.size()), Rational(0));
  values[0] = partition_size(lambda);
  for (std::size_t i = 1; i < mult.size(); ++i) values[i] = mult[i];
  return values;
}

Partition parse_partition(std::string_view text) {
  Partition lambda;
  std::string token;
  std::stringstream stream{std::string(text)};
  while (std::getline(stream, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) throw MalformedInput("empty part in partition \"" + std::string(text) + "\"");
    std::size_t used = 0;
    int part = 0;
    try {
      part = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || part <= 0) {
      throw MalformedInput("invalid part \"" + token + "\" in partition");
    }
    lambda.push_back(part);
  }
  if (lambda.empty()) throw MalformedInput("empty partition");
  std::sort(lambda.rbegin(), lambda.rend());
  return lambda;
}

std::string partition_to_string(const Partition& lambda) {
  std::string out = "(";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(lambda[i]);
  }
  return out + ")";
}

}  // namespace permstat
