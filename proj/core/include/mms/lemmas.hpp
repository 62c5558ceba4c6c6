#ifndef MMS_LEMMAS_HPP
#define MMS_LEMMAS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mms/combinatorics.hpp"
#include "mms/exact.hpp"
#include "mms/execution.hpp"
#include "mms/weights.hpp"

namespace mms {

enum class Relation { eq, ge, gt, le, lt };
enum class Verdict { verified, violated, preconditions_not_met };

std::string to_string(Relation relation);
std::string to_string(Verdict verdict);
bool holds(const Rational& lhs, Relation relation, const Rational& rhs);

struct Precondition {
  std::string name;
  std::string value;
  bool satisfied;
};

/// One checked statement lhs (relation) rhs. A conditional claim whose
/// hypothesis fails is recorded as vacuous and counts as satisfied.
struct Claim {
  std::string description;
  Rational lhs = 0;
  Rational rhs = 0;
  Relation relation = Relation::eq;
  bool satisfied = false;
  bool vacuous = false;
  std::string note;
};

struct LemmaReport {
  std::string lemma;
  unsigned n = 0;
  unsigned k = 0;
  std::vector<Precondition> preconditions;
  std::vector<Claim> claims;
  Verdict verdict = Verdict::verified;
  std::optional<std::string> witness;
  std::vector<std::string> notes;

  void require(std::string name, std::string value, bool satisfied);
  Claim& check(std::string description, Rational lhs, Relation relation, Rational rhs);
  Claim& vacuous(std::string description, std::string note);
  /// Sets `verdict` from the preconditions and claims.
  void finalize();
  bool preconditions_met() const;
};

/// A = {0..k-1} and C = {0, k, ..., 2k-2} in the sorted order.
std::vector<unsigned> top_set(unsigned k);
std::vector<unsigned> packing_set(unsigned k);

/// C(n-k-1,k-1) - (k-1) C(n-k-1,k-2); nonnegative exactly when n >= k^2.
Integer a1_coefficient(unsigned n, unsigned k);

/// Nonnegative subsets meeting A outnumber C(n-k-1,k-1); the sums over
/// subsets missing / meeting A equal -/+ C(n-k-1,k-1) b_A.
LemmaReport verify_lemma2(const WeightVector& weights, unsigned k, const ExecutionOptions& exec = {});

/// Identity for the sum over |S n A| = 1, and the lower bound on b_C
/// under n >= k^2 and at most C(n-1,k-1) nonnegative subsets.
LemmaReport verify_lemma3(const WeightVector& weights, unsigned k, const ExecutionOptions& exec = {});

/// Lower bound on nonnegative subsets through index 0 under n >= k^2 and at
/// most C(n-1,k-1) nonnegative subsets; also checks the exact identities
/// used along the way.
LemmaReport verify_lemma_lotson1(const WeightVector& weights, unsigned k, const ExecutionOptions& exec = {});

/// At least C(n-2k,k-1) nonnegative subsets avoid a negative subset T.
LemmaReport verify_lemma4(const WeightVector& weights, unsigned k, const KSubset& negative,
                          const ExecutionOptions& exec = {});

/// Numeric inequalities at fixed (n, k). Throws std::domain_error when
/// n <= 2k.
LemmaReport verify_scalar_inequalities(unsigned n, unsigned k);

/// At least C(n-1,k-1) nonnegative subsets, with the star on index 0 as the
/// only family attaining equality. Counts are reported even when n < 8k^2.
LemmaReport verify_theorem(const WeightVector& weights, unsigned k, const ExecutionOptions& exec = {},
                           std::uint64_t witness_limit = 4096);

/// Random-partition averaging run for a negative k-subset T.
struct PartitionReport {
  unsigned n = 0, k = 0, m = 0, r = 0;
  std::vector<unsigned> u_indices;  // U = T plus the r smallest outside T
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t zero_trials = 0;    // trials with Z = 0
  std::uint64_t min_z = 0;
  std::uint64_t max_z = 0;
  Rational empirical_mean = 0;      // exact sum(Z) / trials
  double standard_error = 0.0;
  Integer family_size = 0;          // |F|, nonnegative k-subsets of X \ U
  Rational expected_z = 0;          // (m-1) |F| / C(n-k-r, k)
  Rational u_sum = 0;
  double tolerance_sigmas = 5.0;
  bool mean_within_tolerance = false;
  Verdict verdict = Verdict::verified;
  std::optional<std::vector<unsigned>> first_zero_partition;  // first block order with Z = 0
};

/// Throws std::invalid_argument when b_T >= 0 or when n = mk + r has
/// m < 2. Trial t draws its permutation from mix_seed(seed, t), so results do
/// not depend on exec.threads.
PartitionReport simulate_partition(const WeightVector& weights, unsigned k, const KSubset& negative,
                                   std::uint64_t trials, std::uint64_t seed, const ExecutionOptions& exec = {});

/// U = T plus the r lowest-valued indices outside T (highest indices on ties).
std::vector<unsigned> partition_residual_set(const WeightVector& weights, const KSubset& negative);

}  // namespace mms

#endif  // MMS_LEMMAS_HPP
