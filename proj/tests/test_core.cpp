#include <gtest/gtest.h>

#include <mscomb/core.hpp>
#include <mscomb/reference.hpp>

#include "oracles.hpp"

using namespace mscomb;

namespace {

const MultisetSpec kWorked{{1, 2, 2, 1, 1}, 4};

TEST(Validate, AcceptsWorkedInstance) { EXPECT_FALSE(validate(kWorked).has_value()); }

TEST(Validate, AcceptsEmptyCombination) { EXPECT_FALSE(validate({{1}, 0}).has_value()); }

TEST(Validate, RejectsKAboveTotal) {
  auto err = validate({{2, 2}, 5});
  ASSERT_TRUE(err.has_value());
  EXPECT_NE(err->find("k = 5 out of range"), std::string::npos) << *err;
}

TEST(Validate, RejectsNegativeK) { EXPECT_TRUE(validate({{2, 2}, -1}).has_value()); }

TEST(Validate, RejectsZeroMultiplicityWithOneBasedPosition) {
  auto err = validate({{1, 0, 3}, 1});
  ASSERT_TRUE(err.has_value());
  EXPECT_NE(err->find("m[2]"), std::string::npos) << *err;
}

TEST(Validate, RejectsEmptySpec) {
  auto err = validate({{}, 0});
  ASSERT_TRUE(err.has_value());
  EXPECT_NE(err->find("n = 0"), std::string::npos);
}

TEST(Validate, RequireValidThrowsSpecError) { EXPECT_THROW(require_valid({{2, 2}, 5}), spec_error); }

TEST(FirstCombination, Worked) {
  auto f = first_combination(kWorked);
  EXPECT_EQ(f.a, (CombinationVector{0, 0, 2, 1, 1}));
  EXPECT_EQ(f.i0, 2);
}

TEST(FirstCombination, NothingToPlace) {
  auto f = first_combination({{3}, 0});
  EXPECT_EQ(f.a, (CombinationVector{0}));
  EXPECT_EQ(f.i0, 1);
}

TEST(FirstCombination, SaturatedReportsNoFreeLevel) {
  auto f = first_combination({{2, 2}, 4});
  EXPECT_EQ(f.a, (CombinationVector{2, 2}));
  EXPECT_EQ(f.i0, 0);
}

TEST(FirstCombination, MultiplicityLargerThanK) {
  auto f = first_combination({{5, 5}, 3});
  EXPECT_EQ(f.a, (CombinationVector{0, 3}));
  EXPECT_EQ(f.i0, 2);
}

TEST(FirstCombination, IsLexicographicMinimumOfBruteForce) {
  oracle::SpecGenerator gen(11, 6, 4);
  for (int t = 0; t < 300; ++t) {
    auto spec = gen.spec();
    auto all = brute_force(spec);
    ASSERT_FALSE(all.empty());
    EXPECT_EQ(first_combination(spec).a, *std::min_element(all.begin(), all.end())) << describe(spec);
  }
}

TEST(IsAdjacent, GrayStep) { EXPECT_TRUE(is_adjacent({0, 0, 2, 1, 1}, {0, 1, 2, 1, 0})); }

TEST(IsAdjacent, IdenticalVectors) { EXPECT_FALSE(is_adjacent({0, 0, 2, 1, 1}, {0, 0, 2, 1, 1})); }

TEST(IsAdjacent, ThreePositionsDiffer) {
  const CombinationVector x{0, 0, 2, 1, 1};
  const CombinationVector y{1, 1, 1, 1, 0};
  ASSERT_EQ(oracle::hamming(x, y), 4);  // positions 1, 2, 3 and 5
  EXPECT_FALSE(is_adjacent(x, y));
}

TEST(IsAdjacent, TwoStepChangeIsNotAdjacent) { EXPECT_FALSE(is_adjacent({2, 0}, {0, 2})); }

TEST(IsAdjacent, LengthMismatchThrows) { EXPECT_THROW(is_adjacent({1, 0}, {1, 0, 0}), std::invalid_argument); }

TEST(ToInplace, WorkedRows) {
  EXPECT_EQ(to_inplace(kWorked, {0, 0, 2, 1, 1}), (InPlaceForm{{3, 3, 4, 5}}));
  EXPECT_EQ(to_inplace(kWorked, {1, 2, 1, 0, 0}), (InPlaceForm{{1, 2, 2, 3}}));
}

TEST(ToInplace, Empty) { EXPECT_TRUE(to_inplace({{1, 1, 1, 1, 1}, 0}, {0, 0, 0, 0, 0}).elems.empty()); }

TEST(ToInplace, RejectsNonMember) { EXPECT_THROW(to_inplace(kWorked, {2, 0, 2, 0, 0}), std::invalid_argument); }

TEST(ToInplace, LengthIsKAndSortedForEveryMember) {
  oracle::SpecGenerator gen(5, 6, 4);
  for (int t = 0; t < 100; ++t) {
    auto spec = gen.spec();
    for (const auto& a : brute_force(spec)) {
      auto f = to_inplace(spec, a);
      ASSERT_EQ(static_cast<int>(f.elems.size()), spec.k);
      ASSERT_TRUE(std::is_sorted(f.elems.begin(), f.elems.end()));
      ASSERT_EQ(from_inplace(spec.n(), f.elems), a);
    }
  }
}

TEST(ApplyDelta, WorkedStep) {
  EXPECT_EQ(apply_delta(kWorked, {0, 0, 2, 1, 1}, {2, 5}), (CombinationVector{0, 1, 2, 1, 0}));
}

TEST(ApplyDelta, TwoComponentFlips) {
  const MultisetSpec spec{{2, 2}, 2};
  EXPECT_EQ(apply_delta(spec, {1, 1}, {1, 2}), (CombinationVector{2, 0}));
  EXPECT_EQ(apply_delta(spec, {2, 0}, {2, 1}), (CombinationVector{1, 1}));
}

TEST(ApplyDelta, OverflowAndUnderflowAreLogicErrors) {
  const MultisetSpec spec{{2, 2}, 2};
  EXPECT_THROW(apply_delta(spec, {2, 0}, {1, 2}), std::logic_error);  // a[1] already at m[1]
  EXPECT_THROW(apply_delta(spec, {0, 2}, {2, 1}), std::logic_error);  // a[1] is empty
  EXPECT_THROW(apply_delta(spec, {1, 1}, {1, 1}), std::logic_error);
  EXPECT_THROW(apply_delta(spec, {1, 1}, {0, 2}), std::logic_error);
}

TEST(ApplyDelta, InverseRestores) {
  oracle::SpecGenerator gen(3, 6, 4);
  for (int t = 0; t < 200; ++t) {
    auto spec = gen.spec(2);
    for (const auto& a : brute_force(spec)) {
      for (int i = 1; i <= spec.n(); ++i) {
        for (int j = 1; j <= spec.n(); ++j) {
          if (i == j || a.at(i) >= spec.m(i) || a.at(j) == 0) continue;
          const TransitionDelta d{i, j};
          auto b = apply_delta(spec, a, d);
          ASSERT_TRUE(is_member(spec, b));
          ASSERT_TRUE(is_adjacent(a, b));
          ASSERT_EQ(apply_delta(spec, b, d.inverse()), a);
        }
      }
    }
  }
}

TEST(DeltaBetween, RecoversPositions) {
  auto d = delta_between({0, 0, 2, 1, 1}, {0, 1, 2, 1, 0});
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(*d, (TransitionDelta{2, 5}));
  EXPECT_FALSE(delta_between({0, 0, 2, 1, 1}, {1, 1, 1, 1, 0}).has_value());
}

}  // namespace
