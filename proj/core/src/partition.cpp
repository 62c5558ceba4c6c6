#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "mms/counting.hpp"
#include "mms/lemmas.hpp"
#include "mms/random.hpp"

namespace mms {

std::vector<unsigned> partition_residual_set(const WeightVector& weights, const KSubset& negative) {
  const unsigned n = weights.n();
  const unsigned k = negative.k();
  const unsigned r = n % k;
  std::vector<unsigned> u(negative.indices().begin(), negative.indices().end());
  // Sorted non-increasing, so scanning from the back yields the smallest values.
  for (unsigned i = n; i-- > 0 && u.size() < k + r;) {
    if (!negative.contains(i)) u.push_back(i);
  }
  std::sort(u.begin(), u.end());
  return u;
}

namespace {

struct TrialStats {
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;
  std::uint64_t zero = 0;
  std::uint64_t min_z = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t max_z = 0;
  std::optional<std::uint64_t> first_zero_trial;
  std::vector<unsigned> first_zero_order;
};

}  // namespace

PartitionReport simulate_partition(const WeightVector& weights, unsigned k, const KSubset& negative,
                                   std::uint64_t trials, std::uint64_t seed, const ExecutionOptions& exec) {
  const unsigned n = weights.n();
  if (k < 1 || negative.k() != k || negative.n() != n) {
    throw std::invalid_argument("partition simulation needs T to be a k-subset of [0,n)");
  }
  if (n > 64) throw std::invalid_argument("partition simulation supports n <= 64");
  const auto scaled = weights.scaled();
  Integer t_sum = 0;
  for (unsigned i : negative.indices()) t_sum += scaled[i];
  if (t_sum >= 0) throw std::invalid_argument("partition simulation needs b_T < 0");
  const unsigned m = n / k;
  const unsigned r = n % k;
  if (m < 2) throw std::invalid_argument("partition simulation needs n >= 2k (m >= 2 blocks)");
  if (trials == 0) throw std::invalid_argument("partition simulation needs at least one trial");

  PartitionReport report;
  report.n = n;
  report.k = k;
  report.m = m;
  report.r = r;
  report.trials = trials;
  report.seed = seed;
  report.u_indices = partition_residual_set(weights, negative);
  for (unsigned i : report.u_indices) report.u_sum += weights[i];

  std::vector<unsigned> rest;
  for (unsigned i = 0; i < n; ++i)
    if (!std::binary_search(report.u_indices.begin(), report.u_indices.end(), i)) rest.push_back(i);

  std::vector<TrialStats> parts(chunk_count(trials, exec.threads));
  parallel_chunks(trials, exec.threads, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    TrialStats st;
    std::vector<unsigned> order(rest.size());
    for (std::uint64_t t = begin; t < end; ++t) {
      std::copy(rest.begin(), rest.end(), order.begin());
      std::mt19937_64 rng(mix_seed(seed, t));
      shuffle(std::span<unsigned>(order), rng);
      std::uint64_t z = 0;
      for (std::size_t b = 0; b + k <= order.size(); b += k) {
        Integer block = 0;
        for (std::size_t i = b; i < b + k; ++i) block += scaled[order[i]];
        if (block >= 0) ++z;
      }
      st.sum += z;
      st.sum_sq += z * z;
      st.min_z = std::min(st.min_z, z);
      st.max_z = std::max(st.max_z, z);
      if (z == 0) {
        ++st.zero;
        if (!st.first_zero_trial) {
          st.first_zero_trial = t;
          st.first_zero_order = order;
        }
      }
    }
    parts[chunk] = std::move(st);
  });

  std::uint64_t sum = 0, sum_sq = 0;
  report.min_z = std::numeric_limits<std::uint64_t>::max();
  for (const TrialStats& st : parts) {
    sum += st.sum;
    sum_sq += st.sum_sq;
    report.zero_trials += st.zero;
    report.min_z = std::min(report.min_z, st.min_z);
    report.max_z = std::max(report.max_z, st.max_z);
    if (st.first_zero_trial && !report.first_zero_partition) report.first_zero_partition = st.first_zero_order;
  }
  report.empirical_mean = Rational(Integer(sum), Integer(trials));

  const double mean = static_cast<double>(sum) / static_cast<double>(trials);
  if (trials > 1) {
    const double variance =
        (static_cast<double>(sum_sq) - static_cast<double>(trials) * mean * mean) / static_cast<double>(trials - 1);
    report.standard_error = std::sqrt(std::max(0.0, variance) / static_cast<double>(trials));
  }

  report.family_size = count_nonnegative_raw(weights, k, Restriction{}.disjoint(report.u_indices));
  const Integer blocks_total = binomial(static_cast<long long>(n) - k - r, k);
  report.expected_z = Rational(Integer(m - 1) * report.family_size, blocks_total);

  const Rational gap = abs(report.empirical_mean - report.expected_z);
  if (report.standard_error == 0.0) {
    report.mean_within_tolerance = gap == 0;
  } else {
    report.mean_within_tolerance = gap.convert_to<double>() <= report.tolerance_sigmas * report.standard_error;
  }
  report.verdict = report.zero_trials == 0 && report.mean_within_tolerance ? Verdict::verified : Verdict::violated;
  return report;
}

}  // namespace mms
