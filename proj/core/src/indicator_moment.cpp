#include "permstat/indicator_moment.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "permstat/contraction.hpp"
#include "permstat/errors.hpp"
#include "permstat/serialize.hpp"
#include "permstat/set_partition.hpp"

namespace permstat {

namespace {

// sum_{i <= l} i m_i
Polynomial orbit_mass(int l) {
  Polynomial out;
  for (int i = 1; i <= l; ++i) out += Polynomial(i) * Polynomial::m(i);
  return out;
}

}  // namespace

Polynomial c_poly(const CyclePathType& type) {
  Polynomial out(1);
  for (int s : type.cycles) out *= Polynomial(s) * Polynomial::m(s);
  for (int l : type.paths) out *= Polynomial::n() - orbit_mass(l);
  return out;
}

Polynomial compatible_poly(const CyclePathType& type) {
  Polynomial out(1);
  for (int s : type.cycles) {
    Polynomial divisors;
    for (int i = 1; i <= s; ++i) {
      if (s % i == 0) divisors += Polynomial(i) * Polynomial::m(i);
    }
    out *= divisors;
  }
  out *= Polynomial::n().pow(static_cast<int>(type.paths.size()));
  return out;
}

IndicatorMomentResult compute_indicator_moment(const CyclePathType& type, int bell_cap) {
  const int m = type.support_size();
  if (m > bell_cap) {
    throw ResourceLimit("support size " + std::to_string(m) + " exceeds the set-partition cap " +
                        std::to_string(bell_cap) + " (Bell(" + std::to_string(m) +
                        ") = " + to_string(bell_number(m)) + " contractions)");
  }
  const PartialPermutation packed = canonical_representative(type);

  // Injective compatible maps by Moebius inversion over set partitions of the
  // support: a map constant on the blocks of rho is the same as a compatible
  // map of the quotient by the closure of rho.
  std::map<CyclePathType, long> weights;
  for_each_set_partition(m, [&](const SetPartition& rho) {
    weights[contract(packed, rho).quotient] += mobius_lower(rho);
  });
  Polynomial poly;
  for (const auto& [quotient, weight] : weights) {
    if (weight != 0) poly += Polynomial(Rational(weight)) * compatible_poly(quotient);
  }

  IndicatorMomentResult result;
  result.type = type;
  result.support_size = m;
  result.poly = poly;
  result.expectation = RationalExpectation::over_falling(std::move(poly), m);
  return result;
}

std::shared_ptr<const IndicatorMomentResult> IndicatorMoments::get(const CyclePathType& type) {
  std::promise<std::shared_ptr<const IndicatorMomentResult>> promise;
  std::optional<Entry> pending;
  int cap = 0;
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(type);
    if (it != cache_.end()) {
      pending = it->second;
    } else {
      cache_.emplace(type, promise.get_future().share());
      cap = bell_cap_;
    }
  }
  if (pending) return pending->get();
  try {
    auto result = std::make_shared<const IndicatorMomentResult>(compute_indicator_moment(type, cap));
    {
      std::lock_guard lock(mutex_);
      ++computations_;
    }
    promise.set_value(result);
    return result;
  } catch (...) {
    promise.set_exception(std::current_exception());
    std::lock_guard lock(mutex_);
    cache_.erase(type);
    throw;
  }
}

std::size_t IndicatorMoments::computations() const {
  std::lock_guard lock(mutex_);
  return computations_;
}

std::size_t IndicatorMoments::cached_types() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

void IndicatorMoments::clear() {
  std::lock_guard lock(mutex_);
  cache_.clear();
  computations_ = 0;
}

void IndicatorMoments::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput("cache file " + path.string() + ": " + e.what());
  }
  if (!doc.is_object()) throw MalformedInput("cache file " + path.string() + " is not a JSON object");
  std::lock_guard lock(mutex_);
  for (const auto& [key, value] : doc.items()) {
    CyclePathType type = CyclePathType::from_string(key);
    if (cache_.count(type)) continue;
    IndicatorMomentResult result;
    result.type = type;
    result.support_size = type.support_size();
    result.poly = polynomial_from_json(value.dump());
    result.expectation = RationalExpectation::over_falling(result.poly, result.support_size);
    std::promise<std::shared_ptr<const IndicatorMomentResult>> ready;
    ready.set_value(std::make_shared<const IndicatorMomentResult>(std::move(result)));
    cache_.emplace(type, ready.get_future().share());
  }
}

void IndicatorMoments::save(const std::filesystem::path& path) const {
  nlohmann::json doc = nlohmann::json::object();
  {
    std::lock_guard lock(mutex_);
    for (const auto& [type, entry] : cache_) {
      if (entry.wait_for(std::chrono::seconds(0)) != std::future_status::ready) continue;
      try {
        doc[type.to_string()] = nlohmann::json::parse(polynomial_to_json(entry.get()->poly));
      } catch (const Error&) {
        continue;
      }
    }
  }
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw ResourceLimit("cannot write cache file " + tmp.string());
    out << doc.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

IndicatorMoments& shared_indicator_moments() {
  static IndicatorMoments moments;
  return moments;
}

Rational indicator_expectation(const PartialPermutation& p, const Partition& lambda,
                               IndicatorMoments& moments) {
  const int n = partition_size(lambda);
  for (int v : p.support()) {
    if (v > n) {
      throw DomainError("support of " + p.to_string() + " is not inside [" + std::to_string(n) + "]");
    }
  }
  return moments.get(cycle_path_type(p))->expectation.evaluate_at(lambda);
}

}  // namespace permstat
