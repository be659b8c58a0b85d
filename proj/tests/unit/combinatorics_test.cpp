#include <gtest/gtest.h>

#include <set>

#include "permstat/contraction.hpp"
#include "permstat/errors.hpp"
#include "permstat/partial_permutation.hpp"
#include "permstat/partitions.hpp"
#include "permstat/set_partition.hpp"
#include "test_support.hpp"

namespace permstat {
namespace {

using testing::Gen;

TEST(Partitions, EnumerationOrderAndCount) {
  auto parts = partitions_of(5);
  ASSERT_EQ(parts.size(), 7u);
  EXPECT_EQ(parts.front(), (Partition{5}));
  EXPECT_EQ(parts.back(), (Partition{1, 1, 1, 1, 1}));
  EXPECT_EQ(partitions_of(0).size(), 1u);
}

TEST(Partitions, ClassSizesSumToFactorial) {
  for (int n = 1; n <= 8; ++n) {
    Integer total = 0;
    for (const auto& lambda : partitions_of(n)) total += class_size(lambda);
    EXPECT_EQ(total, factorial(n)) << "n=" << n;
  }
  EXPECT_EQ(class_size({2, 2}), 3);
  EXPECT_EQ(class_size({3}), 2);
}

TEST(Partitions, ParseAndPrint) {
  EXPECT_EQ(parse_partition("1,2,4"), (Partition{4, 2, 1}));
  EXPECT_EQ(parse_partition(" 3 , 3 "), (Partition{3, 3}));
  EXPECT_EQ(partition_to_string({4, 2, 1}), "(4,2,1)");
  EXPECT_THROW(parse_partition(""), MalformedInput);
  EXPECT_THROW(parse_partition("2,,1"), MalformedInput);
  EXPECT_THROW(parse_partition("0"), MalformedInput);
  EXPECT_THROW(parse_partition("2,x"), MalformedInput);
}

TEST(Partitions, Coordinates) {
  auto c = class_coordinates({3, 1, 1}, 4);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0], 5);
  EXPECT_EQ(c[1], 2);
  EXPECT_EQ(c[2], 0);
  EXPECT_EQ(c[3], 1);
}

TEST(PartialPermutation, ConstructionSortsByPosition) {
  PartialPermutation p({7, 3}, {9, 7});
  EXPECT_EQ(std::vector<int>(p.positions().begin(), p.positions().end()), (std::vector<int>{3, 7}));
  EXPECT_EQ(std::vector<int>(p.values().begin(), p.values().end()), (std::vector<int>{7, 9}));
  EXPECT_EQ(p, PartialPermutation({3, 7}, {7, 9}));
  EXPECT_EQ(p.image(3), 7);
  EXPECT_EQ(p.preimage(9), 7);
  EXPECT_FALSE(p.image(9).has_value());
}

TEST(PartialPermutation, RejectsMalformedTuples) {
  EXPECT_THROW(PartialPermutation({1, 1}, {2, 3}), MalformedInput);
  EXPECT_THROW(PartialPermutation({1, 2}, {3, 3}), MalformedInput);
  EXPECT_THROW(PartialPermutation({1}, {2, 3}), MalformedInput);
  EXPECT_THROW(PartialPermutation({0}, {1}), MalformedInput);
}

TEST(PartialPermutation, Canonicalize) {
  auto c = canonicalize(PartialPermutation({3, 7}, {7, 9}));
  EXPECT_EQ(c.packed, PartialPermutation({1, 2}, {2, 3}));
  EXPECT_EQ(c.support, (std::vector<int>{3, 7, 9}));

  auto fixed = canonicalize(PartialPermutation({5}, {5}));
  EXPECT_EQ(fixed.packed, PartialPermutation({1}, {1}));
  EXPECT_EQ(fixed.support, (std::vector<int>{5}));
}

TEST(PartialPermutation, NineEdgeInstanceOnFifteenPoints) {
  PartialPermutation p({2, 3, 5, 7, 9, 10, 11, 13, 15}, {7, 9, 5, 14, 3, 6, 10, 1, 15});
  auto c = canonicalize(p);
  EXPECT_EQ(c.support, (std::vector<int>{1, 2, 3, 5, 6, 7, 9, 10, 11, 13, 14, 15}));
  EXPECT_TRUE(c.packed.is_packed());
  EXPECT_EQ(relabel(c.support, c.packed), p);
  auto type = cycle_path_type(p);
  EXPECT_EQ(type.cycles, (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(type.paths, (std::vector<int>{2, 2, 1}));
  EXPECT_EQ(type.support_size(), 12);
  EXPECT_EQ(cycle_path_type(c.packed), type);
}

TEST(PartialPermutation, Relabel) {
  std::vector<int> s{4, 8};
  EXPECT_EQ(relabel(s, PartialPermutation({1}, {2})), PartialPermutation({4}, {8}));
  std::vector<int> s3{2, 5, 9};
  EXPECT_EQ(relabel(s3, PartialPermutation({1, 2}, {2, 3})), PartialPermutation({2, 5}, {5, 9}));
  std::vector<int> id{1, 2, 3};
  PartialPermutation q({1, 3}, {3, 2});
  EXPECT_EQ(relabel(id, q), q);
  EXPECT_THROW(relabel(s, PartialPermutation({1, 2}, {2, 3})), SizeMismatch);
}

TEST(CyclePathType, SmallExamples) {
  EXPECT_EQ(cycle_path_type(PartialPermutation({1}, {1})), (CyclePathType{{1}, {}}));
  EXPECT_EQ(cycle_path_type(PartialPermutation({1, 2}, {2, 1})), (CyclePathType{{2}, {}}));
  EXPECT_EQ(cycle_path_type(PartialPermutation({1, 2}, {2, 3})), (CyclePathType{{}, {2}}));
  EXPECT_EQ(cycle_path_type(PartialPermutation()), (CyclePathType{}));
}

TEST(CyclePathType, StringRoundTrip) {
  CyclePathType t{{2, 1}, {2}};
  EXPECT_EQ(t.to_string(), "mu=[2,1];nu=[2]");
  EXPECT_EQ(CyclePathType::from_string("mu=[2,1];nu=[2]"), t);
  EXPECT_EQ(CyclePathType::from_string("mu=[];nu=[]"), CyclePathType{});
  EXPECT_THROW(CyclePathType::from_string("mu=[2,1]"), MalformedInput);
}

TEST(CyclePathType, TypeCountsBySize) {
  std::vector<std::size_t> expected{1, 2, 5, 10, 20};
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(cycle_path_types_of_size(k).size(), expected[k]);
  EXPECT_EQ(testing::types_up_to(4, 1).size(), 37u);
}

TEST(CyclePathType, CanonicalRepresentativeHasItsType) {
  for (const auto& t : testing::types_up_to(6)) {
    PartialPermutation p = canonical_representative(t);
    EXPECT_TRUE(p.is_packed());
    EXPECT_EQ(cycle_path_type(p), t) << t.to_string();
    EXPECT_EQ(p.support_size(), t.support_size());
    EXPECT_EQ(p.size(), t.size());
  }
  EXPECT_EQ(canonical_representative({{2}, {1}}), PartialPermutation({1, 2, 3}, {2, 1, 4}));
}

TEST(CyclePathType, InvariantUnderRelabelingProperty) {
  Gen gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    int m = gen.uniform(1, 8);
    PartialPermutation p = gen.packed(m);
    auto type = cycle_path_type(p);
    EXPECT_EQ(type.support_size(), m);
    // Push the support through a random injection into [3m].
    std::vector<int> target = gen.subset(3 * m, m);
    gen.shuffle(target);
    std::vector<int> u, v;
    for (int t = 0; t < p.size(); ++t) {
      u.push_back(target[p.positions()[t] - 1]);
      v.push_back(target[p.values()[t] - 1]);
    }
    EXPECT_EQ(cycle_path_type(PartialPermutation(u, v)), type);
  }
}

TEST(SetPartition, BellNumbers) {
  std::vector<int> bell{1, 1, 2, 5, 15, 52, 203, 877};
  for (int m = 0; m < static_cast<int>(bell.size()); ++m) {
    EXPECT_EQ(bell_number(m), bell[m]);
    EXPECT_EQ(set_partitions(m).size(), static_cast<std::size_t>(bell[m]));
  }
}

TEST(SetPartition, EnumerationIsLexicographicAndDistinct) {
  auto all = set_partitions(5);
  std::set<SetPartition> seen(all.begin(), all.end());
  EXPECT_EQ(seen.size(), all.size());
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1].labels(), all[i].labels());
  EXPECT_EQ(all.front(), SetPartition::coarsest(5));
  EXPECT_EQ(all.back(), SetPartition::finest(5));
}

TEST(SetPartition, BlocksAndRefinement) {
  auto rho = SetPartition::from_blocks(4, {{3, 1}, {2}, {4}});
  EXPECT_EQ(rho.labels(), (std::vector<int>{0, 1, 0, 2}));
  EXPECT_EQ(rho.to_string(), "{{1,3},{2},{4}}");
  EXPECT_TRUE(SetPartition::finest(4).refines(rho));
  EXPECT_TRUE(rho.refines(SetPartition::coarsest(4)));
  EXPECT_FALSE(rho.refines(SetPartition::finest(4)));
  EXPECT_THROW(SetPartition::from_blocks(3, {{1, 2}}), MalformedInput);
  EXPECT_THROW(SetPartition::from_blocks(3, {{1, 2}, {2, 3}}), MalformedInput);
}

TEST(SetPartition, Mobius) {
  EXPECT_EQ(mobius_lower(SetPartition::finest(4)), 1);
  EXPECT_EQ(mobius_lower(SetPartition::from_blocks(4, {{1, 2}, {3}, {4}})), -1);
  EXPECT_EQ(mobius_lower(SetPartition::coarsest(4)), -6);
}

TEST(SetPartition, MobiusGeneratesFallingFactorial) {
  // sum_rho mu(0, rho) x^{|rho|} = (x)_m, so at x = 1 the sum vanishes for m >= 2.
  for (int m = 0; m <= 7; ++m) {
    for (int x = 0; x <= 6; ++x) {
      Integer total = 0;
      for_each_set_partition(m, [&](const SetPartition& rho) {
        Integer power = 1;
        for (int b = 0; b < rho.num_blocks(); ++b) power *= x;
        total += power * mobius_lower(rho);
      });
      EXPECT_EQ(Rational(total), falling_factorial(Rational(x), m)) << "m=" << m << " x=" << x;
    }
  }
}

TEST(SetPartition, MobiusMatchesRecursiveDefinition) {
  // mu(0, rho) = -sum_{sigma < rho} mu(0, sigma) over Pi_4.
  auto all = set_partitions(4);
  for (const auto& rho : all) {
    if (rho == SetPartition::finest(4)) continue;
    long sum = 0;
    for (const auto& sigma : all) {
      if (sigma != rho && sigma.refines(rho)) sum += mobius_lower(sigma);
    }
    EXPECT_EQ(mobius_lower(rho), -sum) << rho.to_string();
  }
}

TEST(SetPartition, JoinWorkedExample) {
  auto rho = SetPartition::from_blocks(
      13, {{1, 12}, {2}, {3, 11}, {4, 7, 10}, {5}, {6, 13}, {8}, {9}});
  auto tau = SetPartition::from_blocks(
      13, {{1}, {2}, {3, 6}, {4, 7}, {5, 8}, {9}, {10}, {11}, {12}, {13}});
  auto expected = SetPartition::from_blocks(
      13, {{1, 12}, {2}, {3, 6, 11, 13}, {4, 7, 10}, {5, 8}, {9}});
  EXPECT_EQ(join(tau, rho), expected);
  EXPECT_THROW(join(rho, SetPartition::finest(4)), SizeMismatch);
}

TEST(SetPartition, JoinLatticeLawsProperty) {
  Gen gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    int m = gen.uniform(1, 9);
    auto a = gen.set_partition(m), b = gen.set_partition(m), c = gen.set_partition(m);
    EXPECT_EQ(join(a, b), join(b, a));
    EXPECT_EQ(join(join(a, b), c), join(a, join(b, c)));
    EXPECT_EQ(join(a, a), a);
    EXPECT_EQ(join(a, SetPartition::finest(m)), a);
    EXPECT_TRUE(a.refines(join(a, b)));
  }
}

TEST(Contraction, FinestPartitionKeepsType) {
  Gen gen(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = gen.packed(gen.uniform(1, 7));
    auto c = contract(p, SetPartition::finest(p.support_size()));
    EXPECT_EQ(c.quotient, cycle_path_type(p));
    EXPECT_FALSE(c.component_collision);
    EXPECT_EQ(c.closure, SetPartition::finest(p.support_size()));
  }
}

TEST(Contraction, PathEndpointsMergeIntoTwoCycle) {
  PartialPermutation path({1, 2}, {2, 3});
  auto c = contract(path, SetPartition::from_blocks(3, {{1, 3}, {2}}));
  EXPECT_EQ(c.quotient, (CyclePathType{{2}, {}}));
  EXPECT_TRUE(c.component_collision);
}

TEST(Contraction, WorkedExampleClosure) {
  // Paths 1->2->3->4->5, 6->7->8->9, 10->11, 12->13.
  PartialPermutation p({1, 2, 3, 4, 6, 7, 8, 10, 12}, {2, 3, 4, 5, 7, 8, 9, 11, 13});
  auto rho = SetPartition::from_blocks(
      13, {{1, 12}, {2}, {3, 11}, {4, 7, 10}, {5}, {6, 13}, {8}, {9}});
  auto tau_join_rho = SetPartition::from_blocks(
      13, {{1, 12}, {2}, {3, 6, 11, 13}, {4, 7, 10}, {5, 8}, {9}});
  auto c = contract(p, rho);
  EXPECT_TRUE(rho.refines(c.closure));
  EXPECT_TRUE(tau_join_rho.refines(c.closure));
  // 4 ~ 10 pushes 5 ~ 11 and 3 ~ 11 then puts 3 and 5 of one path together.
  EXPECT_TRUE(c.component_collision);
  // The single Case 3 reduction of the example merges the two long paths.
  PartialPermutation reduced({1, 2, 3, 4, 5, 10, 12}, {2, 3, 4, 5, 9, 11, 13});
  EXPECT_EQ(cycle_path_type(reduced), (CyclePathType{{}, {5, 1, 1}}));
}

TEST(Contraction, CollisionIsMonotoneProperty) {
  Gen gen(17);
  for (int m = 2; m <= 6; ++m) {
    auto p = gen.packed(m);
    auto all = set_partitions(m);
    std::vector<bool> zero;
    for (const auto& rho : all) zero.push_back(contract(p, rho).component_collision);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!zero[i]) continue;
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (all[i].refines(all[j])) {
          EXPECT_TRUE(zero[j]) << p.to_string() << " " << all[j].to_string();
        }
      }
    }
  }
}

TEST(Contraction, QuotientCountsBlockConstantMapsProperty) {
  Gen gen(23);
  for (int trial = 0; trial < 40; ++trial) {
    int m = gen.uniform(1, 5);
    auto p = gen.packed(m);
    auto rho = gen.set_partition(m);
    auto c = contract(p, rho);
    auto q = canonical_representative(c.quotient);
    for (const auto& lambda : testing::partitions_up_to(5)) {
      auto pi = oracle::class_representative(lambda);
      long direct = testing::brute_block_maps(p, rho, pi, false);
      long via_quotient = testing::brute_block_maps(q, SetPartition::finest(q.support_size()), pi, false);
      EXPECT_EQ(direct, via_quotient) << p.to_string() << " rho=" << rho.to_string();
      if (c.component_collision) {
        EXPECT_EQ(testing::brute_block_maps(p, rho, pi, true), 0);
      }
    }
  }
}

TEST(Contraction, RejectsBadInput) {
  EXPECT_THROW(contract(PartialPermutation({1}, {3}), SetPartition::finest(2)), MalformedInput);
  EXPECT_THROW(contract(PartialPermutation({1}, {2}), SetPartition::finest(3)), SizeMismatch);
}

}  // namespace
}  // namespace permstat
