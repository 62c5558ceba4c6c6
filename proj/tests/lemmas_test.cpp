#include <gtest/gtest.h>

#include "mms/counting.hpp"
#include "mms/lemmas.hpp"
#include "support.hpp"

using namespace mms;
using mms::testing::find_claim;
using mms::testing::weights_of;

TEST(Sets, TopAndPacking) {
  EXPECT_EQ(top_set(3), (std::vector<unsigned>{0, 1, 2}));
  EXPECT_EQ(packing_set(3), (std::vector<unsigned>{0, 3, 4}));
  EXPECT_EQ(packing_set(1), (std::vector<unsigned>{0}));
}

TEST(Lemma2, DisjointIdentitySmall) {
  const auto r = verify_lemma2(weights_of({1, 1, -1, -1}), 2);
  const auto& c = find_claim(r, "sum_{S n A = 0} b_S");
  EXPECT_EQ(c.lhs, -2);
  EXPECT_EQ(c.rhs, -2);
  EXPECT_TRUE(c.satisfied);
}

TEST(Lemma2, StarEight) {
  const auto r = verify_lemma2(gen_star(8), 2);
  const auto& c = find_claim(r, "#nonnegative S meeting A");
  EXPECT_EQ(c.lhs, 7);
  EXPECT_EQ(c.rhs, 5);
  EXPECT_EQ(r.verdict, Verdict::verified);
}

TEST(Lemma2, SeededSweep) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto r = verify_lemma2(gen_random_zero_sum(10, 20, seed), 3);
    EXPECT_EQ(r.verdict, Verdict::verified) << seed;
  }
}

TEST(Lemma2, Preconditions) {
  EXPECT_EQ(verify_lemma2(mms::testing::zero_vector(6), 2).verdict, Verdict::preconditions_not_met);
  EXPECT_EQ(verify_lemma2(gen_star(5), 3).verdict, Verdict::preconditions_not_met);
}

TEST(Lemma3, SingleOverlapIdentity) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = verify_lemma3(gen_random_zero_sum(6, 12, seed), 2);
    EXPECT_TRUE(find_claim(r, "sum_{|S n A| = 1} b_S").satisfied);
    EXPECT_TRUE(find_claim(r, "k sum_{S n A = 0}").satisfied);
  }
}

TEST(Lemma3, StarForty) {
  const auto r = verify_lemma3(gen_star(40), 2);
  const auto& c = find_claim(r, "b_C >= (1 - (2k-1)(k-1)/(n-2k+1)) b_A");
  EXPECT_FALSE(c.vacuous);
  EXPECT_EQ(c.lhs, 38);
  EXPECT_EQ(c.rhs, Rational(34, 37) * 38);
  EXPECT_EQ(r.verdict, Verdict::verified);
}

TEST(Lemma3, CoefficientSignFlip) {
  EXPECT_GE(a1_coefficient(9, 3), 0);
  EXPECT_LT(a1_coefficient(8, 3), 0);
  EXPECT_GE(a1_coefficient(16, 4), 0);
  EXPECT_LT(a1_coefficient(15, 4), 0);
}

TEST(LotsOn1, StarThirtySix) {
  const auto r = verify_lemma_lotson1(gen_star(36), 2);
  const auto& c = find_claim(r, "#nonnegative S through x_1");
  EXPECT_FALSE(c.vacuous);
  EXPECT_EQ(c.lhs, 35);
  EXPECT_EQ(c.rhs, Rational(24, 33) * 35);
  EXPECT_EQ(r.verdict, Verdict::verified);
}

TEST(LotsOn1, SeededSweep) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto r = verify_lemma_lotson1(gen_random_zero_sum(40, 30, seed), 2);
    EXPECT_EQ(r.verdict, Verdict::verified) << seed;
  }
}

TEST(LotsOn1, VacuousWhenCountExceedsBound) {
  // Two large entries give far more than C(n-1,k-1) nonnegative pairs.
  std::vector<Rational> raw(40, Rational(-1));
  raw[0] = 19;
  raw[1] = 19;
  const auto w = weights_of(raw);
  ASSERT_GT(count_nonnegative_raw(w, 2), binomial(39, 1));
  const auto r = verify_lemma_lotson1(w, 2);
  EXPECT_TRUE(find_claim(r, "#nonnegative S through x_1").vacuous);
  EXPECT_EQ(r.verdict, Verdict::verified);
}

TEST(LotsOn1, FamilyIdentityIsUnconditional) {
  for (unsigned k = 2; k <= 4; ++k) {
    const auto r = verify_lemma_lotson1(gen_random_zero_sum(k * k + 1, 9, k), k);
    EXPECT_TRUE(find_claim(r, "|F_2| - |F_2k|").satisfied);
    EXPECT_TRUE(find_claim(r, "sum_{S meets A and C, x_1 not in S}").satisfied);
  }
}

TEST(Lemma4, StarNine) {
  const auto r = verify_lemma4(gen_star(9), 2, KSubset(9, {1, 2}));
  const auto& c = find_claim(r, "#nonnegative S disjoint from T");
  EXPECT_EQ(c.lhs, 6);
  EXPECT_EQ(c.rhs, 5);
  EXPECT_EQ(r.verdict, Verdict::verified);
}

TEST(Lemma4, BottomSetSweep) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto w = gen_random_zero_sum(12, 15, seed);
    const auto r = verify_lemma4(w, 3, KSubset(12, {9, 10, 11}));
    if (!r.preconditions_met()) continue;
    EXPECT_EQ(r.verdict, Verdict::verified) << seed;
  }
}

TEST(Lemma4, ZeroSumTargetIsNotNegative) {
  const auto r = verify_lemma4(weights_of({2, 1, 0, -1, -2}), 2, KSubset(5, {1, 3}));
  EXPECT_EQ(r.verdict, Verdict::preconditions_not_met);
}

TEST(Partition, StarNineNeverEmpty) {
  const auto r = simulate_partition(gen_star(9), 2, KSubset(9, {1, 2}), 10000, 0);
  EXPECT_EQ(r.m, 4U);
  EXPECT_EQ(r.r, 1U);
  EXPECT_EQ(r.zero_trials, 0U);
  EXPECT_GE(r.min_z, 1U);
  EXPECT_TRUE(r.mean_within_tolerance);
  EXPECT_EQ(r.verdict, Verdict::verified);
  EXPECT_EQ(r.expected_z, Rational(3) * Rational(r.family_size) / Rational(binomial(6, 2)));
}

TEST(Partition, NoRemainder) {
  const auto r = simulate_partition(gen_star(8), 2, KSubset(8, {6, 7}), 500, 9);
  EXPECT_EQ(r.r, 0U);
  EXPECT_EQ(r.u_indices, (std::vector<unsigned>{6, 7}));
  EXPECT_EQ(r.m, 4U);
  EXPECT_EQ(r.max_z, 1U);  // only the block holding index 0 is nonnegative
}

TEST(Partition, SeedIsTheOnlySource) {
  const auto w = gen_random_zero_sum(11, 10, 4);
  const KSubset t(11, {8, 9, 10});
  const auto a = simulate_partition(w, 3, t, 2000, 77, {1});
  const auto b = simulate_partition(w, 3, t, 2000, 77, {4});
  EXPECT_EQ(a.empirical_mean, b.empirical_mean);
  EXPECT_EQ(a.min_z, b.min_z);
  EXPECT_THROW(simulate_partition(w, 3, KSubset(11, {0, 1, 2}), 10, 0), std::invalid_argument);
}

TEST(Scalar, GrandFinale) {
  const auto r = verify_scalar_inequalities(72, 3);
  const auto& c = find_claim(r, "2 - (8k-4)(k-1)/(n-2k+1) > 1");
  EXPECT_EQ(c.lhs, Rational(2) - Rational(40, 67));
  EXPECT_TRUE(c.satisfied);
}

TEST(Scalar, A1IdentityAtTwentyFour) {
  const auto r = verify_scalar_inequalities(20, 4);
  const auto& c = find_claim(r, "C(n-k-1,k-1) - (k-1) C(n-k-1,k-2)");
  EXPECT_EQ(c.lhs, 140);
  EXPECT_EQ(c.rhs, 140);
}

TEST(Scalar, TwoSidesCoincideAtKTwo) {
  // At k = 2 the power has exponent 1, so both sides of each strict step
  // are the same number; the checker records the failure.
  const auto r = verify_scalar_inequalities(32, 2);
  const auto& first = find_claim(r, "C(n-k-1,k-1)/C(n-1,k-1) >");
  const auto& second = find_claim(r, "(1 - k/(n-k+1))^{k-1} >");
  EXPECT_EQ(first.lhs, Rational(29, 31));
  EXPECT_EQ(first.rhs, Rational(29, 31));
  EXPECT_EQ(second.lhs, second.rhs);
  EXPECT_FALSE(first.satisfied);
  EXPECT_FALSE(second.satisfied);
  EXPECT_EQ(r.verdict, Verdict::violated);
}

TEST(Scalar, StrictForLargerK) {
  for (auto [n, k] : {std::pair{72U, 3U}, std::pair{128U, 4U}, std::pair{200U, 5U}}) {
    EXPECT_EQ(verify_scalar_inequalities(n, k).verdict, Verdict::verified) << n << "," << k;
  }
  EXPECT_THROW(verify_scalar_inequalities(4, 2), std::domain_error);
}

TEST(Theorem, StarThirtyTwo) {
  const auto r = verify_theorem(gen_star(32), 2);
  EXPECT_EQ(find_claim(r, "#nonnegative k-subsets").lhs, 31);
  EXPECT_TRUE(find_claim(r, "equality").satisfied);
  EXPECT_EQ(r.verdict, Verdict::verified);
}

TEST(Theorem, RandomAndZero) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(verify_theorem(gen_random_zero_sum(32, 40, seed), 2).verdict, Verdict::verified);
  }
  const auto zero = verify_theorem(mms::testing::zero_vector(32), 2);
  EXPECT_EQ(find_claim(zero, "#nonnegative k-subsets").lhs, 496);
  EXPECT_EQ(zero.verdict, Verdict::verified);
}

TEST(Theorem, OutsideHypothesis) {
  EXPECT_EQ(verify_theorem(gen_star(10), 2).verdict, Verdict::preconditions_not_met);
}
