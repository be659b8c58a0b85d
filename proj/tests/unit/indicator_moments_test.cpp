#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <thread>

#include "permstat/contraction.hpp"
#include "permstat/errors.hpp"
#include "permstat/indicator_moment.hpp"
#include "test_support.hpp"

namespace permstat {
namespace {

const Polynomial n = Polynomial::n();
const Polynomial m1 = Polynomial::m(1);
const Polynomial m2 = Polynomial::m(2);

Polynomial f_of(const CyclePathType& t) { return compute_indicator_moment(t).poly; }

Rational at(const Polynomial& p, const Partition& lambda) {
  return p.evaluate(class_coordinates(lambda, p.num_vars()));
}

TEST(IndicatorMoment, SmallTypes) {
  EXPECT_EQ(f_of({{1}, {}}), m1);
  EXPECT_EQ(f_of({{2}, {}}), 2 * m2);
  EXPECT_EQ(f_of({{}, {1}}), n - m1);
  EXPECT_EQ(f_of({{}, {2}}), n - m1 - 2 * m2);
  EXPECT_EQ(f_of({{}, {}}), Polynomial(1));
}

TEST(IndicatorMoment, TwoDisjointEdges) {
  // Frozen from the brute-force injection count over lambda |- n <= 7.
  Polynomial expected = n * n - 2 * n * m1 + m1 * m1 - 3 * n + 3 * m1 + 2 * m2;
  EXPECT_EQ(f_of({{}, {1, 1}}), expected);
  EXPECT_EQ(at(expected, {2, 2}), 8);
  EXPECT_EQ(oracle::injection_count(canonical_representative({{}, {1, 1}}), Partition{2, 2}), 8);
}

TEST(IndicatorMoment, CountFormulas) {
  EXPECT_EQ(c_poly({{1}, {}}), m1);
  EXPECT_EQ(c_poly({{2}, {}}), 2 * m2);
  EXPECT_EQ(c_poly({{}, {2}}), n - m1 - 2 * m2);
  EXPECT_EQ(c_poly({{}, {1, 1}}), (n - m1) * (n - m1));
  EXPECT_EQ(compatible_poly({{2}, {}}), m1 + 2 * m2);
  EXPECT_EQ(compatible_poly({{1}, {3}}), m1 * n);
}

TEST(IndicatorMoment, MatchesInjectionCountGrid) {
  for (const auto& type : testing::types_up_to(3)) {
    Polynomial f = f_of(type);
    PartialPermutation p = canonical_representative(type);
    for (const auto& lambda : testing::partitions_up_to(6)) {
      EXPECT_EQ(at(f, lambda), Rational(oracle::injection_count(p, lambda)))
          << type.to_string() << " at " << partition_to_string(lambda);
    }
  }
}

TEST(IndicatorMoment, CPolyMatchesComponentInjectiveCountGrid) {
  for (const auto& type : testing::types_up_to(3)) {
    PartialPermutation p = canonical_representative(type);
    for (const auto& lambda : testing::partitions_up_to(6)) {
      EXPECT_EQ(at(c_poly(type), lambda), Rational(oracle::compatible_function_count(p, lambda)));
      EXPECT_EQ(at(compatible_poly(type), lambda),
                Rational(oracle::all_compatible_function_count(p, lambda)));
    }
  }
}

TEST(IndicatorMoment, DegreeAndTopMonomialStructure) {
  for (const auto& type : testing::types_up_to(5)) {
    Polynomial f = f_of(type);
    const int k = type.size();
    EXPECT_EQ(f.graded_degree(), k) << type.to_string();
    int m1_mu = static_cast<int>(std::count(type.cycles.begin(), type.cycles.end(), 1));
    int m1_nu = static_cast<int>(std::count(type.paths.begin(), type.paths.end(), 1));
    Polynomial top = f.homogeneous_part(k, VariableNaming::class_ring().weight);
    for (const auto& [mono, coef] : top.terms()) {
      EXPECT_GE(mono.exponent(1), m1_mu) << type.to_string();
      EXPECT_LE(mono.exponent(0) + mono.exponent(1), m1_mu + m1_nu) << type.to_string();
    }
  }
}

TEST(IndicatorMoment, SurvivingTermsDependOnlyOnType) {
  testing::Gen gen(29);
  for (int trial = 0; trial < 30; ++trial) {
    auto p = gen.packed(gen.uniform(1, 6));
    auto q = canonical_representative(cycle_path_type(p));
    auto surviving = [](const PartialPermutation& x) {
      int count = 0;
      for_each_set_partition(x.support_size(), [&](const SetPartition& rho) {
        count += contract(x, rho).component_collision ? 0 : 1;
      });
      return count;
    };
    EXPECT_EQ(surviving(p), surviving(q)) << p.to_string();
  }
}

TEST(IndicatorMoment, ExpectationExamples) {
  IndicatorMoments moments;
  EXPECT_EQ(indicator_expectation(PartialPermutation({1}, {1}), {2, 1}, moments), ratio(1, 3));
  EXPECT_EQ(indicator_expectation(PartialPermutation({1, 2}, {2, 1}), {2, 2}, moments), ratio(1, 3));
  EXPECT_EQ(indicator_expectation(PartialPermutation({1}, {2}), {3}, moments), ratio(1, 2));
  EXPECT_THROW(indicator_expectation(PartialPermutation({1}, {4}), {3}, moments), DomainError);
}

TEST(IndicatorMoment, SizeOneIndicatorsSumToN) {
  IndicatorMoments moments;
  for (const auto& lambda : testing::partitions_up_to(7)) {
    const int size = partition_size(lambda);
    Rational total = 0;
    for (int i = 1; i <= size; ++i) {
      for (int j = 1; j <= size; ++j) {
        total += indicator_expectation(PartialPermutation({i}, {j}), lambda, moments);
      }
    }
    EXPECT_EQ(total, size);
  }
}

TEST(IndicatorMoment, BellCap) {
  EXPECT_THROW(compute_indicator_moment({{}, {2, 2}}, 5), ResourceLimit);
  IndicatorMoments moments(3);
  EXPECT_THROW(moments.get({{}, {3}}), ResourceLimit);
  EXPECT_EQ(moments.cached_types(), 0u);
  moments.set_bell_cap(4);
  EXPECT_EQ(moments.get({{}, {3}})->poly.graded_degree(), 3);
}

TEST(IndicatorMoments, SingleFlightAcrossThreads) {
  IndicatorMoments moments;
  CyclePathType type{{2}, {2, 1}};
  std::vector<std::thread> workers;
  std::vector<std::shared_ptr<const IndicatorMomentResult>> results(8);
  for (int i = 0; i < 8; ++i) {
    workers.emplace_back([&, i] { results[i] = moments.get(type); });
  }
  for (auto& w : workers) w.join();
  EXPECT_EQ(moments.computations(), 1u);
  for (const auto& r : results) EXPECT_EQ(r.get(), results.front().get());
}

TEST(IndicatorMoments, DiskCacheRoundTrip) {
  auto path = std::filesystem::temp_directory_path() / "permstat_cache_test.json";
  std::filesystem::remove(path);
  {
    IndicatorMoments moments;
    moments.get({{1}, {2}});
    moments.get({{}, {1, 1}});
    moments.save(path);
  }
  IndicatorMoments reloaded;
  reloaded.load(path);
  EXPECT_EQ(reloaded.cached_types(), 2u);
  EXPECT_EQ(reloaded.get({{}, {1, 1}})->poly, f_of({{}, {1, 1}}));
  EXPECT_EQ(reloaded.computations(), 0u);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace permstat
