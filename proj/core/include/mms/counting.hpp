#ifndef MMS_COUNTING_HPP
#define MMS_COUNTING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mms/combinatorics.hpp"
#include "mms/exact.hpp"
#include "mms/execution.hpp"
#include "mms/weights.hpp"

namespace mms {

/// Conjunction of index-set predicates on a k-subset S. An empty
/// restriction admits every subset.
class Restriction {
 public:
  enum class Kind { contains, intersects, disjoint };
  struct Atom {
    Kind kind;
    std::vector<unsigned> indices;
  };

  Restriction() = default;

  Restriction& contains(unsigned index);
  Restriction& intersects(std::vector<unsigned> indices);
  Restriction& disjoint(std::vector<unsigned> indices);

  /// "contains:i", "intersects:i,j,..." or "disjoint:i,j,...".
  static Atom parse_atom(std::string_view text);
  Restriction& add(Atom atom);

  bool empty() const noexcept { return atoms_.empty(); }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }

  /// Throws std::invalid_argument when an index is >= n.
  void validate(unsigned n) const;
  bool admits(std::uint64_t subset_mask) const;

  std::string describe() const;

 private:
  struct Compiled {
    Kind kind;
    std::uint64_t mask;
  };
  std::vector<Atom> atoms_;
  std::vector<Compiled> compiled_;
};

struct BoundComparison {
  std::string name;
  Integer value;
  bool satisfied;
};

struct StarEquality {
  bool is_star;
  std::string witness;
};

struct CountReport {
  unsigned n = 0;
  unsigned k = 0;
  Integer total_checked = 0;
  Integer nonnegative_count = 0;
  Restriction restriction;
  std::vector<BoundComparison> bound_comparisons;
  std::optional<StarEquality> star_equality;
};

/// Enumeration engine: walks every admitted k-subset and tests b_S >= 0 in
/// exact arithmetic. Requires n <= 64. With more than one thread the colex
/// rank range is split; the result does not depend on the split.
///
/// Without a restriction the report compares against C(n-1, k-1) and, on
/// equality, checks whether the nonnegative family is the star on index 0.
CountReport count_nonnegative(const WeightVector& weights, unsigned k,
                              const Restriction& restriction = {},
                              const ExecutionOptions& exec = {});

/// Number of admitted subsets with nonnegative sum, no report fields.
Integer count_nonnegative_raw(const WeightVector& weights, unsigned k,
                              const Restriction& restriction = {},
                              const ExecutionOptions& exec = {});

/// Compressed weight vector: strictly decreasing values with positive
/// multiplicities summing (with weights) to zero.
class MultiplicityPattern {
 public:
  struct Part {
    Rational value;
    unsigned multiplicity;
  };

  /// Empty placeholder; every other pattern comes from the factories.
  MultiplicityPattern() = default;

  static MultiplicityPattern from_parts(std::vector<Part> parts);
  static MultiplicityPattern from_weights(const WeightVector& weights);

  const std::vector<Part>& parts() const noexcept { return parts_; }
  std::size_t distinct() const noexcept { return parts_.size(); }
  unsigned n() const noexcept { return n_; }

  WeightVector expand() const;
  std::string to_string() const;

 private:
  std::vector<Part> parts_;
  unsigned n_ = 0;
};

enum class CompositionOrder { lexicographic, reverse_lexicographic };

/// Sums prod C(m_i, c_i) over compositions c of k with 0 <= c_i <= m_i and
/// sum c_i v_i >= 0. Throws std::invalid_argument when k > n.
Integer count_nonnegative_dp(const MultiplicityPattern& pattern, unsigned k,
                             CompositionOrder order = CompositionOrder::lexicographic);

/// |F_i| for 1-based i in [2, n]: k-subsets containing x_i, avoiding x_1,
/// meeting both A = {x_1..x_k} and C = {x_1, x_{k+1}..x_{2k-1}}.
/// Requires n >= 2k; throws std::domain_error otherwise.
Integer family_size_Fi(unsigned n, unsigned k, unsigned i);

}  // namespace mms

#endif  // MMS_COUNTING_HPP
