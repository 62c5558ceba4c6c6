#include <gtest/gtest.h>

#include "mms/scheme.hpp"
#include "support.hpp"

using namespace mms;
using mms::testing::weights_of;

TEST(StructureMatrix, InclusionColumns) {
  const auto m = build_structure_matrix(StructureKind::inclusion, 3, 1, 2);
  ASSERT_EQ(m.rows(), 3U);
  ASSERT_EQ(m.cols(), 3U);
  for (auto s : m.col_sums()) EXPECT_EQ(s, 2U);
}

TEST(StructureMatrix, KneserPairsComplements) {
  const auto m = build_structure_matrix(StructureKind::kneser, 4, 2, 2);
  ASSERT_EQ(m.rows(), 6U);
  for (auto s : m.row_sums()) EXPECT_EQ(s, 1U);
  for (auto s : m.col_sums()) EXPECT_EQ(s, 1U);
  const auto masks = subset_masks(4, 2);
  for (std::uint64_t r = 0; r < 6; ++r)
    for (std::uint64_t c = 0; c < 6; ++c) EXPECT_EQ(m(r, c) == 1, (masks[r] ^ masks[c]) == 0xF);
}

TEST(StructureMatrix, InclusionRowSums) {
  const auto m = build_structure_matrix(StructureKind::inclusion, 7, 2, 3);
  for (auto s : m.row_sums()) EXPECT_EQ(s, 5U);
}

TEST(StructureMatrix, Limits) {
  EXPECT_THROW(build_structure_matrix(StructureKind::inclusion, 4, 3, 2), std::invalid_argument);
  EXPECT_THROW(build_structure_matrix(StructureKind::inclusion, 30, 7, 15, DenseBudget{1000}), BudgetExceeded);
}

TEST(BoseMesner, Entries) {
  const KSubset s(6, {0, 1, 2});
  EXPECT_EQ(bose_mesner_entry(s, s, 3), 0);
  EXPECT_EQ(bose_mesner_entry(s, KSubset(6, {3, 4, 5}), 3), 1);
  EXPECT_EQ(bose_mesner_entry(KSubset(4, {0, 1}), KSubset(4, {1, 2}), 1), 1);
  EXPECT_THROW(bose_mesner_entry(s, KSubset(6, {0, 1}), 1), std::invalid_argument);
}

TEST(BoseMesner, FactorizationExamples) {
  EXPECT_TRUE(verify_factorization(5, 1, 2).ok());
  EXPECT_TRUE(verify_factorization(6, 2, 3).ok());
  const BoseMesnerOperator b0(4, 0, 2);
  for (const auto& e : b0.dense()) EXPECT_EQ(e, 1);
}

TEST(Eigenvector, WorkedExample) {
  const auto w = weights_of({1, 1, -1, -1});
  EXPECT_EQ(wilson_eigenvalue(4, 1, 2), -2);
  const BoseMesnerOperator op(4, 1, 2);
  const auto b = scaled_subset_sums(w, 2);
  EXPECT_EQ(op.row_dot(0b0011, b), -4);
  EXPECT_TRUE(verify_eigenvector(w, 1, 2).ok());
}

TEST(Eigenvector, LevelZeroAnnihilates) {
  EXPECT_EQ(wilson_eigenvalue(9, 0, 3), 0);
  const auto r = verify_eigenvector(gen_random_zero_sum(9, 20, 5), 0, 3);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.eigenvalue, 0);
}

TEST(Eigenvector, TopLevel) {
  const auto r = verify_eigenvector(gen_random_zero_sum(8, 10, 1), 3, 3);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.eigenvalue, -binomial(4, 2));
}

TEST(Eigenvector, RationalWeights) {
  const auto w = weights_of(std::vector<Rational>{Rational(5, 2), Rational(1, 3), Rational(-1, 7), -1,
                                                  Rational(-1, 2) - Rational(1, 3) + Rational(1, 7) - 1});
  for (unsigned j = 0; j <= 2; ++j) EXPECT_TRUE(verify_eigenvector(w, j, 2).ok()) << j;
}

TEST(Eigenvector, ShiftedInputAndBadArguments) {
  const std::vector<Rational> raw{3, 1, 0, 0, 0};
  const auto w = normalize(raw, NormalizationMode::shift_to_zero);
  EXPECT_TRUE(verify_eigenvector(w, 1, 2).ok());
  EXPECT_THROW(verify_eigenvector(mms::testing::zero_vector(6), 1, 2), std::invalid_argument);
  EXPECT_THROW(verify_eigenvector(gen_star(6), 3, 2), std::invalid_argument);
}

TEST(Wilson, IdentityExamples) {
  EXPECT_TRUE(verify_wilson_identities(gen_random_zero_sum(5, 9, 2), 1, 2).ok());
  EXPECT_TRUE(verify_wilson_identities(gen_random_zero_sum(6, 9, 3), 2, 3).ok());
  EXPECT_TRUE(verify_wilson_identities(gen_random_zero_sum(6, 9, 4), 1, 2).ok());
}

TEST(Wilson, SupersetEntry) {
  // (W_12 W_12^T)[Y, Y'] counts 2-sets containing both singletons.
  const auto w = build_structure_matrix(StructureKind::inclusion, 5, 1, 2);
  for (std::uint64_t a = 0; a < w.rows(); ++a) {
    for (std::uint64_t b = 0; b < w.rows(); ++b) {
      unsigned dot = 0;
      for (std::uint64_t c = 0; c < w.cols(); ++c) dot += w(a, c) * w(b, c);
      EXPECT_EQ(dot, a == b ? 4U : 1U);
    }
  }
  const auto r = verify_wilson_identities(gen_star(5), 1, 2);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checks.size(), 5U);
}
