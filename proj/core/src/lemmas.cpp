#include "mms/lemmas.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "mms/counting.hpp"

namespace mms {

std::string to_string(Relation relation) {
  switch (relation) {
    case Relation::eq:
      return "==";
    case Relation::ge:
      return ">=";
    case Relation::gt:
      return ">";
    case Relation::le:
      return "<=";
    case Relation::lt:
      return "<";
  }
  return "?";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::verified:
      return "verified";
    case Verdict::violated:
      return "violated";
    case Verdict::preconditions_not_met:
      return "preconditions-not-met";
  }
  return "?";
}

bool holds(const Rational& lhs, Relation relation, const Rational& rhs) {
  switch (relation) {
    case Relation::eq:
      return lhs == rhs;
    case Relation::ge:
      return lhs >= rhs;
    case Relation::gt:
      return lhs > rhs;
    case Relation::le:
      return lhs <= rhs;
    case Relation::lt:
      return lhs < rhs;
  }
  return false;
}

void LemmaReport::require(std::string name, std::string value, bool satisfied) {
  preconditions.push_back({std::move(name), std::move(value), satisfied});
}

Claim& LemmaReport::check(std::string description, Rational lhs, Relation relation, Rational rhs) {
  Claim c;
  c.description = std::move(description);
  c.satisfied = holds(lhs, relation, rhs);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.relation = relation;
  claims.push_back(std::move(c));
  return claims.back();
}

Claim& LemmaReport::vacuous(std::string description, std::string note) {
  Claim c;
  c.description = std::move(description);
  c.satisfied = true;
  c.vacuous = true;
  c.note = std::move(note);
  claims.push_back(std::move(c));
  return claims.back();
}

bool LemmaReport::preconditions_met() const {
  return std::all_of(preconditions.begin(), preconditions.end(), [](const Precondition& p) { return p.satisfied; });
}

void LemmaReport::finalize() {
  if (!preconditions_met()) {
    verdict = Verdict::preconditions_not_met;
  } else if (std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.satisfied; })) {
    verdict = Verdict::verified;
  } else {
    verdict = Verdict::violated;
  }
}

std::vector<unsigned> top_set(unsigned k) {
  std::vector<unsigned> a(k);
  for (unsigned i = 0; i < k; ++i) a[i] = i;
  return a;
}

std::vector<unsigned> packing_set(unsigned k) {
  std::vector<unsigned> c{0};
  for (unsigned i = k; i + 1 < 2 * k; ++i) c.push_back(i);
  return c;
}

Integer a1_coefficient(unsigned n, unsigned k) {
  const long long nn = n, kk = k;
  return binomial(nn - kk - 1, kk - 1) - (kk - 1) * binomial(nn - kk - 1, kk - 2);
}

namespace {

std::uint64_t mask_of(const std::vector<unsigned>& indices) {
  std::uint64_t m = 0;
  for (unsigned i : indices) m |= std::uint64_t{1} << i;
  return m;
}

// Every k-subset of [0, n) as a mask, with its subset sum scaled by D.
struct SubsetTable {
  std::vector<std::uint64_t> masks;
  std::vector<Integer> sums;
  Integer scale;

  SubsetTable(const WeightVector& weights, unsigned k) : scale(weights.scale()) {
    sums = scaled_subset_sums(weights, k);
    masks.reserve(sums.size());
    std::vector<unsigned> s(k);
    for (unsigned i = 0; i < k; ++i) s[i] = i;
    do {
      masks.push_back(mask_of(s));
    } while (next_colex(s, weights.n()));
  }

  template <typename Pred>
  Rational sum_where(Pred pred) const {
    Integer total = 0;
    for (std::size_t i = 0; i < masks.size(); ++i)
      if (pred(masks[i])) total += sums[i];
    return Rational(total, scale);
  }

  Rational sum_of(std::uint64_t mask) const {
    const auto it = std::find(masks.begin(), masks.end(), mask);
    return Rational(sums[static_cast<std::size_t>(it - masks.begin())], scale);
  }

  Rational max_entry() const { return Rational(*std::max_element(sums.begin(), sums.end()), scale); }
};

Rational weights_sum(const WeightVector& weights, std::uint64_t mask) {
  Rational total = 0;
  for (unsigned i = 0; i < weights.n(); ++i)
    if ((mask >> i) & 1U) total += weights[i];
  return total;
}

std::string str(long long v) { return std::to_string(v); }

// 1 - num / (n - 2k + 1)
Rational one_minus(long long num, unsigned n, unsigned k) {
  return Rational(1) - Rational(num, static_cast<long long>(n) - 2 * static_cast<long long>(k) + 1);
}

void require_small(LemmaReport& report, unsigned n) {
  report.require("n <= 64 (enumeration engine)", str(n), n <= 64);
}

}  // namespace

LemmaReport verify_lemma2(const WeightVector& weights, unsigned k, const ExecutionOptions& exec) {
  const unsigned n = weights.n();
  LemmaReport report;
  report.lemma = "2";
  report.n = n;
  report.k = k;
  report.require("k >= 1", str(k), k >= 1);
  report.require("n >= 2k", str(n) + " vs " + str(2LL * k), n >= 2 * k);
  report.require("x != 0", weights.is_zero() ? "zero vector" : "nonzero", !weights.is_zero());
  require_small(report, n);
  if (!report.preconditions_met()) {
    report.finalize();
    return report;
  }
  const long long nn = n, kk = k;
  const SubsetTable table(weights, k);
  const std::uint64_t a = mask_of(top_set(k));
  const Rational b_a = table.sum_of(a);
  const Integer c = binomial(nn - kk - 1, kk - 1);

  report.check("b_A is a largest entry of b", b_a, Relation::eq, table.max_entry());
  report.check("b_A > 0", b_a, Relation::gt, 0);
  report.check("sum_{S n A = 0} b_S = -C(n-k-1,k-1) b_A",
               table.sum_where([&](std::uint64_t m) { return (m & a) == 0; }), Relation::eq, -c * b_a);
  report.check("sum_{S n A != 0} b_S = C(n-k-1,k-1) b_A",
               table.sum_where([&](std::uint64_t m) { return (m & a) != 0; }), Relation::eq, c * b_a);
  const Integer meeting = count_nonnegative_raw(weights, k, Restriction{}.intersects(top_set(k)), exec);
  report.check("#nonnegative S meeting A > C(n-k-1,k-1)", meeting, Relation::gt, c);
  report.finalize();
  return report;
}

LemmaReport verify_lemma3(const WeightVector& weights, unsigned k, const ExecutionOptions& exec) {
  const unsigned n = weights.n();
  LemmaReport report;
  report.lemma = "3";
  report.n = n;
  report.k = k;
  report.require("k >= 1", str(k), k >= 1);
  report.require("n >= 2k", str(n) + " vs " + str(2LL * k), n >= 2 * k);
  report.require("x != 0", weights.is_zero() ? "zero vector" : "nonzero", !weights.is_zero());
  require_small(report, n);
  if (!report.preconditions_met()) {
    report.finalize();
    return report;
  }
  const long long nn = n, kk = k;
  const SubsetTable table(weights, k);
  const std::uint64_t a = mask_of(top_set(k));
  const std::uint64_t c = mask_of(packing_set(k));
  const Rational b_a = table.sum_of(a);
  const Rational b_c = table.sum_of(c);
  const Integer coeff = a1_coefficient(n, k);

  const Rational empty = table.sum_where([&](std::uint64_t m) { return (m & a) == 0; });
  const Rational single = table.sum_where([&](std::uint64_t m) { return std::popcount(m & a) == 1; });
  report.check("k sum_{S n A = 0} b_S + sum_{|S n A| = 1} b_S = -(k-1) C(n-k,k-1) b_A", kk * empty + single,
               Relation::eq, -(kk - 1) * binomial(nn - kk, kk - 1) * b_a);
  report.check("sum_{|S n A| = 1} b_S = (C(n-k-1,k-1) - (k-1) C(n-k-1,k-2)) b_A", single, Relation::eq,
               coeff * b_a);

  const Integer bound = binomial(nn - 1, kk - 1);
  const Integer total = count_nonnegative_raw(weights, k, {}, exec);
  const bool square = nn >= kk * kk;
  const bool at_most = total <= bound;
  if (square && at_most) {
    report.check("b_C >= (a1 coefficient / C(n-1,k-1)) b_A", b_c, Relation::ge, Rational(coeff, bound) * b_a);
    report.check("b_C >= (1 - (2k-1)(k-1)/(n-2k+1)) b_A", b_c, Relation::ge,
                 one_minus((2 * kk - 1) * (kk - 1), n, k) * b_a);
  } else {
    std::string why = !square ? "n < k^2" : "more than C(n-1,k-1) nonnegative subsets (" + to_string(total) + ")";
    report.vacuous("b_C >= (1 - (2k-1)(k-1)/(n-2k+1)) b_A", "hypothesis fails: " + why);
  }
  report.finalize();
  return report;
}

LemmaReport verify_lemma_lotson1(const WeightVector& weights, unsigned k, const ExecutionOptions& exec) {
  const unsigned n = weights.n();
  const long long nn = n, kk = k;
  LemmaReport report;
  report.lemma = "lotson1";
  report.n = n;
  report.k = k;
  report.require("k >= 1", str(k), k >= 1);
  report.require("n >= k^2", str(n) + " vs " + str(kk * kk), nn >= kk * kk);
  report.require("n >= 2k", str(n) + " vs " + str(2LL * k), n >= 2 * k);
  report.require("x != 0", weights.is_zero() ? "zero vector" : "nonzero", !weights.is_zero());
  require_small(report, n);
  if (!report.preconditions_met()) {
    report.finalize();
    return report;
  }
  const SubsetTable table(weights, k);
  const std::uint64_t a = mask_of(top_set(k));
  const std::uint64_t c = mask_of(packing_set(k));
  const Rational b_a = table.sum_of(a);
  const Rational b_c = table.sum_of(c);
  const Integer bound = binomial(nn - 1, kk - 1);
  const Integer disjoint_c = binomial(nn - kk - 1, kk - 1);

  // Exact identities, unconditional.
  report.check("sum_{S n C != 0} b_S = C(n-k-1,k-1) b_C",
               table.sum_where([&](std::uint64_t m) { return (m & c) != 0; }), Relation::eq, disjoint_c * b_c);
  const Rational both = table.sum_where([&](std::uint64_t m) { return (m & a) != 0 && (m & c) != 0; });
  const Rational both_without_top =
      table.sum_where([&](std::uint64_t m) { return (m & a) != 0 && (m & c) != 0 && (m & 1U) == 0; });
  Rational via_families = 0;
  for (unsigned i = 2; i <= n; ++i) via_families += Rational(family_size_Fi(n, k, i)) * weights[i - 1];
  report.check("sum_{S meets A and C, x_1 not in S} b_S = sum_{i>=2} |F_i| x_i", both_without_top, Relation::eq,
               via_families);
  report.check("sum_{x_1 in S} b_S = sum_{S meets A and C} b_S - sum_{i>=2} |F_i| x_i",
               table.sum_where([](std::uint64_t m) { return (m & 1U) != 0; }), Relation::eq,
               both - via_families);
  Integer tail = 0;
  for (long long j = kk + 2; j <= 2 * kk; ++j) tail += binomial(nn - j, kk - 2);
  report.check("|F_2| - |F_2k| = sum_{j=k+2}^{2k} C(n-j,k-2)",
               family_size_Fi(n, k, 2) - family_size_Fi(n, k, 2 * k), Relation::eq, tail);

  const Integer total = count_nonnegative_raw(weights, k, {}, exec);
  const Rational factor = one_minus((6 * kk - 3) * (kk - 1), n, k);
  if (total <= bound) {
    report.check("sum_{S meets C, misses A} b_S <= (C(n-1,k-1) - C(n-k-1,k-1)) b_A",
                 table.sum_where([&](std::uint64_t m) { return (m & a) == 0 && (m & c) != 0; }), Relation::le,
                 (bound - disjoint_c) * b_a);
    report.check("sum_{S meets A and C} b_S >= (1 - (4k-1)(k-1)/(n-2k+1)) C(n-1,k-1) b_A", both, Relation::ge,
                 one_minus((4 * kk - 1) * (kk - 1), n, k) * bound * b_a);
    report.check("sum_{x_1 in S} b_S >= (1 - (6k-3)(k-1)/(n-2k+1)) C(n-1,k-1) b_A",
                 table.sum_where([](std::uint64_t m) { return (m & 1U) != 0; }), Relation::ge,
                 factor * bound * b_a);
    const Integer on_top = count_nonnegative_raw(weights, k, Restriction{}.contains(0), exec);
    report.check("#nonnegative S through x_1 >= (1 - (6k-3)(k-1)/(n-2k+1)) C(n-1,k-1)", on_top, Relation::ge,
                 factor * bound);
  } else {
    report.vacuous("#nonnegative S through x_1 >= (1 - (6k-3)(k-1)/(n-2k+1)) C(n-1,k-1)",
                   "hypothesis fails: " + to_string(total) + " > C(n-1,k-1) = " + to_string(bound) +
                       " nonnegative subsets");
  }
  report.finalize();
  return report;
}

LemmaReport verify_lemma4(const WeightVector& weights, unsigned k, const KSubset& negative,
                          const ExecutionOptions& exec) {
  const unsigned n = weights.n();
  const long long nn = n, kk = k;
  LemmaReport report;
  report.lemma = "4";
  report.n = n;
  report.k = k;
  report.require("T is a k-subset of [0,n)", negative.to_string(), negative.k() == k && negative.n() == n);
  report.require("n >= 3k - 1", str(n) + " vs " + str(3 * kk - 1), nn >= 3 * kk - 1);
  require_small(report, n);
  if (!report.preconditions_met()) {
    report.finalize();
    return report;
  }
  const Rational b_t = weights_sum(weights, negative.mask());
  report.require("b_T < 0", to_string(b_t), b_t < 0);
  if (!report.preconditions_met()) {
    report.finalize();
    return report;
  }
  const std::vector<unsigned> t_idx(negative.indices().begin(), negative.indices().end());
  const Integer floor_bound = binomial(nn - 2 * kk, kk - 1);
  const Integer avoiding = count_nonnegative_raw(weights, k, Restriction{}.disjoint(t_idx), exec);
  report.check("#nonnegative S disjoint from T >= C(n-2k,k-1)", avoiding, Relation::ge, floor_bound);

  const std::vector<unsigned> u = partition_residual_set(weights, negative);
  const long long r = static_cast<long long>(u.size()) - kk;
  const Integer family = count_nonnegative_raw(weights, k, Restriction{}.disjoint(u), exec);
  report.check("|F| (nonnegative S disjoint from U) >= C(n-k-r-1,k-1)", family, Relation::ge,
               binomial(nn - kk - r - 1, kk - 1));
  report.check("C(n-k-r-1,k-1) >= C(n-2k,k-1)", binomial(nn - kk - r - 1, kk - 1), Relation::ge, floor_bound);
  report.check("C(n-2k,k-1) >= (1 - (2k-1)(k-1)/(n-2k+1)) C(n-1,k-1)", floor_bound, Relation::ge,
               one_minus((2 * kk - 1) * (kk - 1), n, k) * binomial(nn - 1, kk - 1));
  report.finalize();
  return report;
}

LemmaReport verify_scalar_inequalities(unsigned n, unsigned k) {
  if (k < 1 || n <= 2 * k) {
    throw std::domain_error("scalar inequalities need k >= 1 and n >= 2k+1 (n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) + ")");
  }
  const long long nn = n, kk = k;
  LemmaReport report;
  report.lemma = "scalar";
  report.n = n;
  report.k = k;
  report.require("n >= 2k + 1", str(n) + " vs " + str(2 * kk + 1), true);

  const Integer top = binomial(nn - kk - 1, kk - 1);
  const Integer full = binomial(nn - 1, kk - 1);
  report.check("C(n-k-1,k-1) - (k-1) C(n-k-1,k-2) = (1 - (k-1)^2/(n-2k+1)) C(n-k-1,k-1)", a1_coefficient(n, k),
               Relation::eq, one_minus((kk - 1) * (kk - 1), n, k) * top);

  const Rational ratio(top, full);
  Rational product = 1;
  for (long long i = 1; i <= kk - 1; ++i) product *= Rational(nn - kk - i, nn - i);
  report.check("C(n-k-1,k-1)/C(n-1,k-1) = prod_{i=1}^{k-1} (n-k-i)/(n-i)", ratio, Relation::eq, product);

  const Rational base = Rational(1) - Rational(kk, nn - kk + 1);
  Rational power = 1;
  for (long long i = 0; i < kk - 1; ++i) power *= base;
  report.check("C(n-k-1,k-1)/C(n-1,k-1) > (1 - k/(n-k+1))^{k-1}", ratio, Relation::gt, power);
  report.check("(1 - k/(n-k+1))^{k-1} > 1 - k(k-1)/(n-k+1)", power, Relation::gt,
               Rational(1) - Rational(kk * (kk - 1), nn - kk + 1));

  const Rational lhs_pretty = (Rational(1) - Rational(kk * (kk - 1), nn - kk + 1)) *
                                  (Rational(2) - Rational((2 * kk - 1) * (kk - 1), nn - 2 * kk + 1)) -
                              1;
  report.check("(1 - k(k-1)/(n-k+1))(2 - (2k-1)(k-1)/(n-2k+1)) - 1 >= 1 - (4k-1)(k-1)/(n-2k+1)", lhs_pretty,
               Relation::ge, one_minus((4 * kk - 1) * (kk - 1), n, k));

  const Integer coeff = a1_coefficient(n, k);
  if (nn >= kk * kk) {
    report.check("a1 coefficient >= 0 when n >= k^2", coeff, Relation::ge, 0);
  } else {
    report.check("a1 coefficient < 0 when n < k^2", coeff, Relation::lt, 0);
  }

  const Rational finale = Rational(2) - Rational((8 * kk - 4) * (kk - 1), nn - 2 * kk + 1);
  if (nn >= 8 * kk * kk) {
    report.check("2 - (8k-4)(k-1)/(n-2k+1) > 1", finale, Relation::gt, 1);
  } else {
    report.vacuous("2 - (8k-4)(k-1)/(n-2k+1) > 1", "only claimed for n >= 8k^2 (value " + to_string(finale) + ")");
  }
  report.finalize();
  return report;
}

LemmaReport verify_theorem(const WeightVector& weights, unsigned k, const ExecutionOptions& exec,
                           std::uint64_t witness_limit) {
  const unsigned n = weights.n();
  const long long nn = n, kk = k;
  LemmaReport report;
  report.lemma = "theorem";
  report.n = n;
  report.k = k;
  if (k < 1 || k > n || n > 64) {
    throw std::invalid_argument("theorem check needs 1 <= k <= n <= 64");
  }
  report.require("n >= 8k^2", str(n) + " vs " + str(8 * kk * kk), nn >= 8 * kk * kk);

  const CountReport counted = count_nonnegative(weights, k, {}, exec);
  const Integer bound = binomial(nn - 1, kk - 1);
  report.check("#nonnegative k-subsets >= C(n-1,k-1)", counted.nonnegative_count, Relation::ge, bound);
  if (counted.nonnegative_count == bound) {
    const Integer on_top = count_nonnegative_raw(weights, k, Restriction{}.contains(0), exec);
    report.check("equality: #nonnegative subsets through index 0 = C(n-1,k-1) (family is the star)", on_top,
                 Relation::eq, bound);
  } else {
    report.vacuous("equality case is the star on index 0", "no equality (count " +
                                                                to_string(counted.nonnegative_count) + ")");
  }
  if (counted.nonnegative_count <= witness_limit) {
    std::ostringstream family;
    const auto scaled = weights.scaled();
    bool first = true;
    std::vector<unsigned> s(k);
    for (unsigned i = 0; i < k; ++i) s[i] = i;
    do {
      Integer sum = 0;
      for (unsigned i : s) sum += scaled[i];
      if (sum >= 0) {
        if (!first) family << ' ';
        first = false;
        family << KSubset(n, s).to_string();
      }
    } while (next_colex(s, n));
    report.witness = family.str();
  }
  if (!report.preconditions_met()) report.notes.push_back("out of hypothesis: n < 8k^2; counts reported only");
  report.finalize();
  return report;
}

}  // namespace mms
