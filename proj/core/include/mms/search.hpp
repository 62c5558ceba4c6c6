#ifndef MMS_SEARCH_HPP
#define MMS_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mms/counting.hpp"
#include "mms/exact.hpp"
#include "mms/execution.hpp"

namespace mms {

/// Grid of few-valued zero-sum configurations: every multiplicity vector
/// (m_1..m_d), d <= max_distinct, and every strictly decreasing choice of
/// v_1..v_{d-1} in [-value_range, value_range]; v_d is solved from the zero
/// sum and the candidate is dropped unless v_d < v_{d-1}.
struct SearchSpace {
  unsigned n = 0;
  unsigned k = 0;
  unsigned max_distinct = 2;
  int value_range = 0;
  std::uint64_t candidate_budget = 200'000'000;
};

class SearchBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchReport {
  SearchSpace space;
  MultiplicityPattern best;
  Integer best_count = 0;
  Integer bound = 0;  // C(n-1, k-1)
  bool violation = false;
  std::uint64_t candidates_examined = 0;
  std::uint64_t grid_estimate = 0;
  // Independent recounts of the best pattern.
  Integer recount_dp_reverse = 0;
  std::optional<Integer> recount_enumeration;  // n <= 16 only
  bool consistent = false;
  std::string outcome;  // "violation-found", "inconclusive", "minimum"
};

/// Number of grid points before the monotonicity filter; used for the
/// budget check.
std::uint64_t estimate_grid(const SearchSpace& space);

/// Exhaustive minimum of the nonnegative count over the space. Ties go to
/// the lexicographically smallest (multiplicities, values) after scaling
/// values to coprime integers. Throws SearchBudgetExceeded when the grid
/// exceeds the candidate budget, std::invalid_argument on an empty space.
SearchReport sweep_patterns(const SearchSpace& space, const ExecutionOptions& exec = {});

/// Sweep at n = 3k + r, d <= 3, looking for fewer than C(n-1,k-1)
/// nonnegative k-subsets. Needs k >= 7 and 1 <= r <= k/7.
SearchReport find_counterexample(unsigned k, unsigned r, int value_range, const ExecutionOptions& exec = {});

}  // namespace mms

#endif  // MMS_SEARCH_HPP
