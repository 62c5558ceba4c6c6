#include <gtest/gtest.h>

#include <algorithm>

#include "mms/combinatorics.hpp"
#include "mms/weights.hpp"
#include "support.hpp"

using namespace mms;
using mms::testing::naive_sum;
using mms::testing::weights_of;

namespace {

std::vector<std::string> strings(const WeightVector& w) { return w.to_strings(); }

}  // namespace

TEST(ParseRational, Forms) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("+3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4/8"), Rational(-1, 2));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1/-2"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
}

TEST(LoadWeights, StarDocument) {
  const auto w = load_weights(R"({"weights": ["5","-1","-1","-1","-1","-1"]})");
  EXPECT_EQ(strings(w), (std::vector<std::string>{"5", "-1", "-1", "-1", "-1", "-1"}));
}

TEST(LoadWeights, Rationals) {
  const auto w = load_weights(R"({"weights": ["1/2","1/2","-1"]})");
  EXPECT_EQ(w[0], Rational(1, 2));
  EXPECT_EQ(w[1], Rational(1, 2));
  EXPECT_EQ(w[2], Rational(-1));
  EXPECT_EQ(w.scale(), 2);
  EXPECT_EQ(w.scaled()[2], -2);
}

TEST(LoadWeights, JsonIntegersAndMode) {
  const auto w = load_weights(R"({"weights": [2, 1, 0], "mode": "shift-to-zero"})");
  EXPECT_EQ(strings(w), (std::vector<std::string>{"1", "0", "-1"}));
  EXPECT_EQ(w.provenance().shift, Rational(1));
}

TEST(LoadWeights, ReportsBadEntryPosition) {
  try {
    load_weights(R"({"weights": ["1","x"]})");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2U);
    EXPECT_NE(std::string(e.what()).find("entry 2"), std::string::npos);
  }
  EXPECT_THROW(load_weights("not json"), ParseError);
  EXPECT_THROW(load_weights(R"({"values": [1]})"), ParseError);
  EXPECT_THROW(load_weights(R"({"weights": []})"), std::invalid_argument);
  EXPECT_THROW(load_weights(R"({"weights": [1.5, -1.5]})"), ParseError);
  EXPECT_THROW(load_weights(R"({"weights": [1, -1], "mode": "other"})"), ParseError);
}

TEST(LoadWeights, MissingFile) { EXPECT_THROW(load_weights_file("/nonexistent/w.json"), std::runtime_error); }

TEST(Normalize, SortsOnly) {
  const auto w = weights_of({-1, 5, -1, -1, -1, -1});
  EXPECT_EQ(strings(w), (std::vector<std::string>{"5", "-1", "-1", "-1", "-1", "-1"}));
  EXPECT_EQ(w.provenance().order[0], 1U);
}

TEST(Normalize, ShiftToZero) {
  const std::vector<Rational> raw{2, 1, 0};
  const auto w = normalize(raw, NormalizationMode::shift_to_zero);
  EXPECT_EQ(strings(w), (std::vector<std::string>{"1", "0", "-1"}));
  EXPECT_EQ(w.provenance().shift, Rational(1));
}

TEST(Normalize, ShiftKeepsRationals) {
  const std::vector<Rational> raw{1, 0, 0};
  const auto w = normalize(raw, NormalizationMode::shift_to_zero);
  EXPECT_EQ(strings(w), (std::vector<std::string>{"2/3", "-1/3", "-1/3"}));
  EXPECT_EQ(w.scale(), 3);
}

TEST(Normalize, RejectsNonzeroSum) {
  const std::vector<Rational> raw{1, 1, -3};
  try {
    normalize(raw, NormalizationMode::require_zero_sum);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.residual(), Rational(-1));
  }
}

TEST(Normalize, ShiftRejectsNegativeSum) {
  const std::vector<Rational> raw{1, 1, -3};
  EXPECT_THROW(normalize(raw, NormalizationMode::shift_to_zero), ValidationError);
}

TEST(Generators, Star) {
  EXPECT_EQ(strings(gen_star(6)), (std::vector<std::string>{"5", "-1", "-1", "-1", "-1", "-1"}));
  EXPECT_EQ(strings(gen_star(2)), (std::vector<std::string>{"1", "-1"}));
  const auto w = gen_star(13);
  Rational s = 0;
  for (const auto& v : w.values()) s += v;
  EXPECT_EQ(s, 0);
  EXPECT_THROW(gen_star(1), std::invalid_argument);
}

TEST(Generators, RandomIsZeroSumAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto a = gen_random_zero_sum(11, 25, seed);
    const auto b = gen_random_zero_sum(11, 25, seed);
    EXPECT_EQ(strings(a), strings(b));
    Rational s = 0;
    for (const auto& v : a.values()) s += v;
    EXPECT_EQ(s, 0);
    EXPECT_TRUE(std::is_sorted(a.values().begin(), a.values().end(), std::greater<>()));
  }
}

TEST(Generators, RandomRegressionFixture) {
  const auto w = gen_random_zero_sum(8, 10, 42);
  EXPECT_EQ(strings(w), (std::vector<std::string>{"8", "5", "5", "3", "2", "-6", "-8", "-9"}));
  EXPECT_EQ(w.provenance().echo, (std::vector<std::string>{"5", "3", "5", "-8", "8", "-9", "2", "-6"}));
  EXPECT_EQ(w.provenance().seed, 42U);
}

TEST(WeightDocument, RoundTrip) {
  const auto w = weights_of(std::vector<Rational>{Rational(7, 3), Rational(-1, 6), Rational(-13, 6)});
  const auto back = load_weights(to_weight_document(w));
  EXPECT_EQ(strings(back), strings(w));
}

TEST(SubsetSums, StarSixPairs) {
  const auto b = subset_sums(gen_star(6), 2);
  ASSERT_EQ(b.entries.size(), 15U);
  EXPECT_EQ(std::count(b.entries.begin(), b.entries.end(), Rational(4)), 5);
  EXPECT_EQ(std::count(b.entries.begin(), b.entries.end(), Rational(-2)), 10);
}

TEST(SubsetSums, WholeSet) {
  const auto b = subset_sums(weights_of({1, -1}), 2);
  ASSERT_EQ(b.entries.size(), 1U);
  EXPECT_EQ(b.entries[0], 0);
}

TEST(SubsetSums, TotalIsZero) {
  const auto b = subset_sums(gen_random_zero_sum(9, 30, 7), 3);
  Rational total = 0;
  for (const auto& e : b.entries) total += e;
  EXPECT_EQ(total, 0);
}

TEST(SubsetSums, MatchDefinitionByRank) {
  const auto w = weights_of(std::vector<Rational>{Rational(9, 2), Rational(1, 3), 0, Rational(-5, 6), -4});
  for (unsigned k = 1; k <= 5; ++k) {
    const auto b = subset_sums(w, k);
    const auto scaled = scaled_subset_sums(w, k);
    for (std::uint64_t r = 0; r < b.entries.size(); ++r) {
      const auto s = unrank_colex(r, k, 5);
      EXPECT_EQ(b.entries[r], naive_sum(w, s.mask()));
      EXPECT_EQ(Rational(scaled[r]), b.entries[r] * Rational(w.scale()));
    }
  }
}
