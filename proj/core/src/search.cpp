#include "mms/search.hpp"

#include <algorithm>
#include <numeric>

namespace mms {

namespace {

using Values = std::vector<std::int64_t>;
using Mults = std::vector<unsigned>;

struct Candidate {
  std::uint64_t count = std::numeric_limits<std::uint64_t>::max();
  Mults mults;
  Values values;  // coprime integers, strictly decreasing

  bool valid() const { return !mults.empty(); }
};

bool better(const Candidate& a, const Candidate& b) {
  if (!b.valid()) return a.valid();
  if (!a.valid()) return false;
  if (a.count != b.count) return a.count < b.count;
  if (a.mults != b.mults) return a.mults < b.mults;
  return a.values < b.values;
}

// Compositions of n into d positive parts, lexicographic.
void compositions(unsigned n, unsigned d, Mults& current, std::vector<Mults>& out) {
  if (current.size() + 1 == d) {
    const unsigned used = std::accumulate(current.begin(), current.end(), 0U);
    if (used < n) {
      current.push_back(n - used);
      out.push_back(current);
      current.pop_back();
    }
    return;
  }
  const unsigned used = std::accumulate(current.begin(), current.end(), 0U);
  const unsigned left_after = d - static_cast<unsigned>(current.size()) - 1;
  for (unsigned m = 1; used + m + left_after <= n; ++m) {
    current.push_back(m);
    compositions(n, d, current, out);
    current.pop_back();
  }
}

// Fast 64-bit composition count; the exact engine re-checks the winner.
class FastCounter {
 public:
  FastCounter(unsigned n, unsigned k) : k_(k), binom_(n + 1, std::vector<std::uint64_t>(n + 1, 0)) {
    for (unsigned a = 0; a <= n; ++a)
      for (unsigned b = 0; b <= a; ++b) binom_[a][b] = binomial_u64(a, b);
  }

  std::uint64_t count(const Mults& mults, const Values& values) const {
    tail_.assign(mults.size() + 1, 0);
    for (std::size_t i = mults.size(); i-- > 0;) tail_[i] = tail_[i + 1] + mults[i];
    return recurse(mults, values, 0, k_, 0);
  }

 private:
  std::uint64_t recurse(const Mults& mults, const Values& values, std::size_t i, unsigned remaining,
                        std::int64_t sum) const {
    if (i == mults.size()) return remaining == 0 && sum >= 0 ? 1 : 0;
    const unsigned hi = std::min(mults[i], remaining);
    const unsigned lo = remaining > tail_[i + 1] ? remaining - tail_[i + 1] : 0;
    std::uint64_t total = 0;
    for (unsigned c = lo; c <= hi; ++c) {
      const std::uint64_t ways = recurse(mults, values, i + 1, remaining - c, sum + values[i] * c);
      if (ways) total += binom_[mults[i]][c] * ways;
    }
    return total;
  }

  unsigned k_;
  std::vector<std::vector<std::uint64_t>> binom_;
  mutable std::vector<unsigned> tail_;
};

void canonicalize(Values& values) {
  std::int64_t g = 0;
  for (std::int64_t v : values) g = std::gcd(g, v < 0 ? -v : v);
  if (g > 1)
    for (std::int64_t& v : values) v /= g;
}

// Chooses v_1 > ... > v_{d-1} in [-R, R] (descending) and solves v_d.
template <typename Visit>
void for_each_value_choice(const Mults& mults, int range, Visit&& visit) {
  const std::size_t d = mults.size();
  if (d == 1) {
    visit(Values{0});
    return;
  }
  Values chosen(d - 1);
  const auto m_last = static_cast<std::int64_t>(mults.back());
  auto rec = [&](auto&& self, std::size_t pos, std::int64_t upper) -> void {
    if (pos == d - 1) {
      std::int64_t weighted = 0;
      for (std::size_t i = 0; i + 1 < d; ++i) weighted += static_cast<std::int64_t>(mults[i]) * chosen[i];
      Values scaled(d);
      for (std::size_t i = 0; i + 1 < d; ++i) scaled[i] = m_last * chosen[i];
      scaled[d - 1] = -weighted;
      if (scaled[d - 1] < scaled[d - 2]) visit(std::move(scaled));
      return;
    }
    for (std::int64_t v = upper; v >= -range; --v) {
      chosen[pos] = v;
      self(self, pos + 1, v - 1);
    }
  };
  rec(rec, 0, range);
}

void validate(const SearchSpace& space) {
  if (space.n < 1 || space.k < 1 || space.k > space.n) {
    throw std::invalid_argument("search needs 1 <= k <= n");
  }
  if (space.max_distinct < 1 || space.max_distinct > 4) {
    throw std::invalid_argument("search supports 1 <= max_distinct <= 4");
  }
  if (space.value_range < 0) throw std::invalid_argument("search value range must be >= 0");
  if (space.n > 62) throw std::invalid_argument("search supports n <= 62");
}

MultiplicityPattern to_pattern(const Candidate& c) {
  std::vector<MultiplicityPattern::Part> parts;
  for (std::size_t i = 0; i < c.mults.size(); ++i) parts.push_back({Rational(c.values[i]), c.mults[i]});
  return MultiplicityPattern::from_parts(std::move(parts));
}

}  // namespace

std::uint64_t estimate_grid(const SearchSpace& space) {
  unsigned __int128 total = 0;
  const unsigned width = 2 * static_cast<unsigned>(space.value_range) + 1;
  for (unsigned d = 1; d <= space.max_distinct && d <= space.n; ++d) {
    total += static_cast<unsigned __int128>(binomial_u64(space.n - 1, d - 1)) * binomial_u64(width, d - 1);
  }
  return total > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                           : static_cast<std::uint64_t>(total);
}

SearchReport sweep_patterns(const SearchSpace& space, const ExecutionOptions& exec) {
  validate(space);
  SearchReport report;
  report.space = space;
  report.grid_estimate = estimate_grid(space);
  if (report.grid_estimate > space.candidate_budget) {
    throw SearchBudgetExceeded("search grid has about " + std::to_string(report.grid_estimate) +
                               " candidates, budget is " + std::to_string(space.candidate_budget) +
                               "; lower max_distinct or value_range");
  }
  binomial_u64(space.n, space.k);  // throws when counts would not fit

  std::vector<Mults> shapes;
  for (unsigned d = 1; d <= space.max_distinct && d <= space.n; ++d) {
    Mults current;
    compositions(space.n, d, current, shapes);
  }

  std::vector<Candidate> bests(chunk_count(shapes.size(), exec.threads));
  std::vector<std::uint64_t> examined(bests.size(), 0);
  parallel_chunks(shapes.size(), exec.threads, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    const FastCounter counter(space.n, space.k);
    Candidate best;
    std::uint64_t seen = 0;
    for (std::uint64_t s = begin; s < end; ++s) {
      const Mults& mults = shapes[s];
      for_each_value_choice(mults, space.value_range, [&](Values values) {
        ++seen;
        const std::uint64_t count = counter.count(mults, values);
        if (count > best.count) return;
        Candidate c{count, mults, std::move(values)};
        canonicalize(c.values);
        if (better(c, best)) best = std::move(c);
      });
    }
    bests[chunk] = std::move(best);
    examined[chunk] = seen;
  });

  Candidate best;
  for (std::size_t i = 0; i < bests.size(); ++i) {
    if (better(bests[i], best)) best = bests[i];
    report.candidates_examined += examined[i];
  }
  if (!best.valid()) throw std::invalid_argument("search space is empty");

  report.best = to_pattern(best);
  report.best_count = count_nonnegative_dp(report.best, space.k, CompositionOrder::lexicographic);
  report.recount_dp_reverse = count_nonnegative_dp(report.best, space.k, CompositionOrder::reverse_lexicographic);
  if (space.n <= 16) {
    report.recount_enumeration = count_nonnegative_raw(report.best.expand(), space.k);
  }
  report.consistent = report.best_count == Integer(best.count) && report.recount_dp_reverse == report.best_count &&
                      (!report.recount_enumeration || *report.recount_enumeration == report.best_count);
  report.bound = binomial(static_cast<long long>(space.n) - 1, static_cast<long long>(space.k) - 1);
  report.violation = report.best_count < report.bound;
  report.outcome = "minimum";
  return report;
}

SearchReport find_counterexample(unsigned k, unsigned r, int value_range, const ExecutionOptions& exec) {
  if (k < 7) throw std::invalid_argument("counterexample search needs k >= 7");
  if (r < 1 || 7 * r > k) {
    throw std::invalid_argument("counterexample search needs 1 <= r <= k/7 (k=" + std::to_string(k) +
                                ", r=" + std::to_string(r) + ")");
  }
  if (value_range < 1) throw std::invalid_argument("counterexample search needs value_range >= 1");
  SearchSpace space;
  space.n = 3 * k + r;
  space.k = k;
  space.max_distinct = 3;
  space.value_range = value_range;
  SearchReport report = sweep_patterns(space, exec);
  report.outcome = report.violation ? "violation-found" : "inconclusive";
  return report;
}

}  // namespace mms
