#include <gtest/gtest.h>

#include <mscomb/counting.hpp>

#include "oracles.hpp"

using namespace mscomb;

namespace {

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(8, 4), 70);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(5, -1), 0);
}

TEST(Binomial, ExactBeyondWordSize) {
  // C(100, 50) = 100891344545564193334812497256
  EXPECT_EQ(binomial(100, 50), Count("100891344545564193334812497256"));
  EXPECT_EQ(binomial(200, 100) * binomial(100, 0), binomial(200, 100));
  // Pascal's rule as an independent identity at a size that overflows 128 bits.
  EXPECT_EQ(binomial(300, 150), binomial(299, 149) + binomial(299, 150));
}

TEST(CountClosure, WorkedInstance) { EXPECT_EQ(count_closure(5, 4), 70); }

TEST(CountClosure, EmptyCombination) { EXPECT_EQ(count_closure(1, 0), 1); }

TEST(CountClosure, ThreeComponentsSizeFour) {
  ASSERT_EQ(oracle::count_by_enumeration({4, 4, 4}, 4), 15u);
  EXPECT_EQ(count_closure(3, 4), 15);
}

TEST(CountClosure, RejectsBadArguments) {
  EXPECT_THROW(count_closure(0, 1), std::invalid_argument);
  EXPECT_THROW(count_closure(1, -1), std::invalid_argument);
}

TEST(InclusionExclusion, WorkedTotalsAndTerms) {
  const MultisetSpec spec{{1, 2, 2, 1, 1}, 4};
  auto bd = inclusion_exclusion_breakdown(spec);
  EXPECT_EQ(bd.total, 18);
  ASSERT_GE(bd.by_order.size(), 3u);
  EXPECT_EQ(bd.by_order[0], 70);
  EXPECT_EQ(bd.by_order[1], 15 + 15 + 15 + 5 + 5);
  EXPECT_EQ(bd.by_order[2], 1 + 1 + 1);
  for (std::size_t r = 3; r < bd.by_order.size(); ++r) EXPECT_EQ(bd.by_order[r], 0);
  for (const auto& t : bd.terms) {
    if (t.subset.size() != 1) continue;
    const int i = t.subset.front();
    EXPECT_EQ(t.magnitude, (spec.m(i) == 1 ? 15 : 5)) << "A" << i;
  }
  int pairs = 0;
  for (const auto& t : bd.terms) {
    if (t.subset.size() == 2) {
      ++pairs;
      EXPECT_EQ(t.magnitude, 1);
      EXPECT_EQ(spec.m(t.subset[0]) + spec.m(t.subset[1]), 2);
    }
  }
  EXPECT_EQ(pairs, 3);
}

TEST(InclusionExclusion, OrdinaryCombinations) { EXPECT_EQ(count_inclusion_exclusion({{1, 1, 1}, 2}), 3); }

TEST(InclusionExclusion, MixedBounds) {
  ASSERT_EQ(oracle::count_by_enumeration({3, 1, 2}, 3), 6u);
  EXPECT_EQ(count_inclusion_exclusion({{3, 1, 2}, 3}), 6);
}

TEST(InclusionExclusion, SubsetLimit) {
  EXPECT_THROW(count_inclusion_exclusion(uniform_spec(30, 2, 5)), subset_limit_error);
  EXPECT_NO_THROW(count_inclusion_exclusion(uniform_spec(30, 2, 5), 30));
}

TEST(CountDp, Examples) {
  EXPECT_EQ(count_dp({{1, 2, 2, 1, 1}, 4}), 18);
  EXPECT_EQ(count_dp({{3, 1, 4}, 0}), 1);
  EXPECT_EQ(count_dp({{2, 2}, 2}), 3);
}

TEST(Counting, AllMethodsAgreeWithEnumeration) {
  oracle::SpecGenerator gen(99, 6, 4);
  for (int t = 0; t < 200; ++t) {
    auto m = gen.multiplicities();
    MultisetSpec spec{m, 0};
    for (spec.k = 0; spec.k <= spec.total(); ++spec.k) {
      const Count expected = oracle::count_by_enumeration(m, spec.k);
      ASSERT_EQ(count_dp(spec), expected) << describe(spec);
      ASSERT_EQ(count_inclusion_exclusion(spec), expected) << describe(spec);
    }
  }
}

TEST(Counting, UnitMultiplicitiesGiveBinomial) {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto spec = uniform_spec(n, 1, k);
      EXPECT_EQ(count_dp(spec), binomial(n, k));
      EXPECT_EQ(count_inclusion_exclusion(spec), binomial(n, k));
    }
  }
}

TEST(Counting, MultiplicityKGivesClosure) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= 8; ++k) {
      auto spec = uniform_spec(n, k, k);
      EXPECT_EQ(count_dp(spec), count_closure(n, k));
      EXPECT_EQ(count_inclusion_exclusion(spec), count_closure(n, k));
    }
  }
}

TEST(Counting, LargeInstanceStaysExact) {
  // 1000 components of multiplicity 3, k = 1500: far beyond 64 bits.
  auto spec = uniform_spec(1000, 3, 1500);
  Count c = count_dp(spec);
  EXPECT_GT(c, Count(1) << 128);
  // Symmetry a -> m - a maps size k onto size total - k.
  auto mirrored = spec;
  mirrored.k = static_cast<int>(spec.total()) - 1499;
  auto below = spec;
  below.k = 1499;
  EXPECT_EQ(count_dp(below), count_dp(mirrored));
}

}  // namespace
