#include <gtest/gtest.h>

#include <random>

#include "mms/counting.hpp"
#include "mms/random.hpp"
#include "support.hpp"

using namespace mms;
using mms::testing::naive_sum;
using mms::testing::popcount;
using mms::testing::weights_of;

namespace {

// Plain loop over all masks; independent of both engines.
Integer brute_count(const WeightVector& w, unsigned k, const Restriction& r = {}) {
  Integer count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w.n()); ++mask) {
    if (popcount(mask) != k || !r.admits(mask)) continue;
    if (naive_sum(w, mask) >= 0) ++count;
  }
  return count;
}

MultiplicityPattern pattern(std::initializer_list<std::pair<long long, unsigned>> parts) {
  std::vector<MultiplicityPattern::Part> out;
  for (auto [v, m] : parts) out.push_back({Rational(v), m});
  return MultiplicityPattern::from_parts(std::move(out));
}

}  // namespace

TEST(Count, StarSix) {
  const auto report = count_nonnegative(gen_star(6), 2);
  EXPECT_EQ(report.nonnegative_count, 5);
  EXPECT_EQ(report.total_checked, 15);
  ASSERT_EQ(report.bound_comparisons.size(), 1U);
  EXPECT_EQ(report.bound_comparisons[0].value, 5);
  EXPECT_TRUE(report.bound_comparisons[0].satisfied);
  ASSERT_TRUE(report.star_equality.has_value());
  EXPECT_TRUE(report.star_equality->is_star);
}

TEST(Count, WholeSetIsNonnegative) { EXPECT_EQ(count_nonnegative(weights_of({1, -1}), 2).nonnegative_count, 1); }

TEST(Count, ContainsRestriction) {
  Restriction r;
  r.contains(0);
  const auto report = count_nonnegative(weights_of({3, 1, -1, -3}), 2, r);
  EXPECT_EQ(report.nonnegative_count, 3);
  EXPECT_EQ(report.total_checked, 3);
  EXPECT_TRUE(report.bound_comparisons.empty());
  EXPECT_FALSE(report.star_equality.has_value());
}

TEST(Count, ZeroVectorCountsEverything) {
  const auto report = count_nonnegative(mms::testing::zero_vector(32), 2);
  EXPECT_EQ(report.nonnegative_count, 496);
  EXPECT_FALSE(report.star_equality.has_value());
}

TEST(Count, RestrictionsAgainstBruteForce) {
  const std::vector<std::string> atoms{"contains:1", "intersects:0,4", "disjoint:2,3", "intersects:5"};
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto w = gen_random_zero_sum(10, 9, seed);
    for (unsigned k = 1; k <= 6; ++k) {
      for (std::size_t a = 0; a < atoms.size(); ++a) {
        Restriction r;
        r.add(Restriction::parse_atom(atoms[a]));
        if (a + 1 < atoms.size()) r.add(Restriction::parse_atom(atoms[a + 1]));
        EXPECT_EQ(count_nonnegative_raw(w, k, r), brute_count(w, k, r)) << seed << " " << k << " " << a;
      }
    }
  }
}

TEST(Count, ThreadCountDoesNotMatter) {
  const auto w = gen_random_zero_sum(18, 50, 3);
  Restriction r;
  r.intersects({0, 1, 2});
  for (unsigned k : {3U, 6U}) {
    EXPECT_EQ(count_nonnegative_raw(w, k, {}, {1}), count_nonnegative_raw(w, k, {}, {4}));
    EXPECT_EQ(count_nonnegative_raw(w, k, r, {1}), count_nonnegative_raw(w, k, r, {3}));
  }
}

TEST(Count, HugeValuesUseExactPath) {
  // Entries near 2^62 overflow the 64-bit fast path.
  const std::vector<Rational> raw{Rational(Integer("4000000000000000001")), Rational(Integer("3000000000000000000")),
                                  Rational(-1, 3), Rational(Integer("-3500000000000000000")),
                                  Rational(Integer("-3500000000000000000")) + Rational(-2, 3)};
  const auto w = weights_of(raw);
  for (unsigned k = 1; k <= 5; ++k) EXPECT_EQ(count_nonnegative_raw(w, k), brute_count(w, k)) << k;
}

TEST(Restriction, ParseAndValidate) {
  EXPECT_EQ(Restriction::parse_atom("intersects:1,2").indices, (std::vector<unsigned>{1, 2}));
  EXPECT_THROW(Restriction::parse_atom("contains:1,2"), std::invalid_argument);
  EXPECT_THROW(Restriction::parse_atom("touches:1"), std::invalid_argument);
  EXPECT_THROW(Restriction::parse_atom("disjoint:"), std::invalid_argument);
  EXPECT_THROW(Restriction::parse_atom("disjoint:a"), std::invalid_argument);
  Restriction r;
  r.contains(7);
  EXPECT_THROW(r.validate(5), std::invalid_argument);
  EXPECT_THROW(count_nonnegative(gen_star(5), 2, r), std::invalid_argument);
}

TEST(Pattern, Validation) {
  EXPECT_THROW(pattern({{1, 1}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(pattern({{-1, 1}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(pattern({{1, 0}, {-1, 1}}), std::invalid_argument);
  EXPECT_THROW(pattern({{2, 1}, {-1, 1}}), ValidationError);
  const auto p = pattern({{5, 1}, {-1, 5}});
  EXPECT_EQ(p.n(), 6U);
  EXPECT_EQ(p.to_string(), "((5,1),(-1,5))");
  EXPECT_EQ(MultiplicityPattern::from_weights(gen_star(6)).to_string(), p.to_string());
}

TEST(Dp, Examples) {
  EXPECT_EQ(count_nonnegative_dp(pattern({{5, 1}, {-1, 5}}), 2), 5);
  for (unsigned k = 0; k <= 7; ++k) EXPECT_EQ(count_nonnegative_dp(pattern({{0, 7}}), k), binomial(7, k));
  EXPECT_EQ(count_nonnegative_dp(pattern({{1, 3}, {-1, 3}}), 2), 12);
  EXPECT_THROW(count_nonnegative_dp(pattern({{1, 3}, {-1, 3}}), 7), std::invalid_argument);
}

TEST(Dp, OrdersAgreeWithEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned d = 1 + static_cast<unsigned>(uniform_below(rng, 4));
    // Few distinct levels, so the pattern is genuinely compressed.
    std::vector<Rational> raw;
    for (unsigned i = 0; i < 9; ++i) raw.emplace_back(3 * uniform_below(rng, d) + uniform_below(rng, 2));
    Rational mean = 0;
    for (const auto& v : raw) mean += v;
    mean /= 9;
    for (auto& v : raw) v -= mean;
    const auto w = weights_of(raw);
    const auto p = MultiplicityPattern::from_weights(w);
    for (unsigned k = 0; k <= 9; ++k) {
      const Integer lex = count_nonnegative_dp(p, k, CompositionOrder::lexicographic);
      EXPECT_EQ(lex, count_nonnegative_dp(p, k, CompositionOrder::reverse_lexicographic));
      if (k >= 1) {
        EXPECT_EQ(lex, count_nonnegative_raw(w, k));
      }
    }
  }
}

TEST(Dp, ExpandRoundTrip) {
  const auto p = pattern({{6, 1}, {5, 18}, {-32, 3}});
  const auto w = p.expand();
  EXPECT_EQ(w.n(), 22U);
  EXPECT_EQ(MultiplicityPattern::from_weights(w).to_string(), p.to_string());
}

TEST(FamilySize, Examples) {
  EXPECT_EQ(family_size_Fi(8, 2, 2), 1);
  EXPECT_EQ(family_size_Fi(8, 2, 4), 0);
  EXPECT_THROW(family_size_Fi(5, 3, 2), std::domain_error);
  EXPECT_THROW(family_size_Fi(8, 2, 1), std::domain_error);
  EXPECT_THROW(family_size_Fi(8, 2, 9), std::domain_error);
}

TEST(FamilySize, MatchesBruteForce) {
  for (unsigned k = 1; k <= 3; ++k) {
    for (unsigned n = 2 * k; n <= 10; ++n) {
      std::uint64_t a = 0, c = 1;  // index 0 is x_1
      for (unsigned t = 0; t < k; ++t) a |= std::uint64_t{1} << t;
      for (unsigned t = k; t + 1 < 2 * k; ++t) c |= std::uint64_t{1} << t;
      for (unsigned i = 2; i <= n; ++i) {
        Integer brute = 0;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
          if (popcount(s) != k || (s & 1U) || !((s >> (i - 1)) & 1U)) continue;
          if ((s & a) && (s & c)) ++brute;
        }
        EXPECT_EQ(family_size_Fi(n, k, i), brute) << "n=" << n << " k=" << k << " i=" << i;
      }
    }
  }
}
