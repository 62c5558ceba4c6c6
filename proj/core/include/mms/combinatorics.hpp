#ifndef MMS_COMBINATORICS_HPP
#define MMS_COMBINATORICS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mms/exact.hpp"

namespace mms {

/// Exact C(a, b) for 0 <= a <= n_max, stored row by row. Lookups outside
/// 0 <= b <= a return 0.
class BinomialTable {
 public:
  explicit BinomialTable(unsigned n_max);

  unsigned n_max() const noexcept { return n_max_; }

  /// Throws std::out_of_range when a > n_max.
  const Integer& operator()(long long a, long long b) const;

 private:
  unsigned n_max_;
  std::vector<std::vector<Integer>> rows_;
};

/// C(a, b) computed on demand; 0 when b < 0, b > a or a < 0.
Integer binomial(long long a, long long b);

/// C(a, b) as u64; throws std::overflow_error if it does not fit.
std::uint64_t binomial_u64(unsigned a, unsigned b);

/// Sorted index set of cardinality k inside [0, n).
class KSubset {
 public:
  KSubset(unsigned n, std::vector<unsigned> indices);

  unsigned n() const noexcept { return n_; }
  unsigned k() const noexcept { return static_cast<unsigned>(indices_.size()); }
  std::span<const unsigned> indices() const noexcept { return indices_; }
  unsigned operator[](std::size_t i) const { return indices_[i]; }

  bool contains(unsigned index) const;
  unsigned intersection_size(const KSubset& other) const;
  /// Bit i set iff i is a member; requires n <= 64.
  std::uint64_t mask() const;

  std::string to_string() const;

  friend bool operator==(const KSubset&, const KSubset&) = default;
  friend auto operator<=>(const KSubset&, const KSubset&) = default;

 private:
  unsigned n_;
  std::vector<unsigned> indices_;
};

std::uint64_t rank_colex(std::span<const unsigned> sorted_indices);
std::uint64_t rank_colex(const KSubset& subset);
/// Throws std::out_of_range when rank >= C(n, k).
KSubset unrank_colex(std::uint64_t rank, unsigned k, unsigned n);

/// One revolving-door step: `removed` left the subset, `added` joined it.
struct Swap {
  unsigned removed;
  unsigned added;
};

/// Revolving-door (Gray code) generator over the k-subsets of [0, n):
/// consecutive subsets differ by exactly one swap.
class RevolvingDoor {
 public:
  RevolvingDoor(unsigned n, unsigned k);

  /// False when the stream is empty (k = 0 or k > n); see diagnostic().
  bool valid() const noexcept { return !done_; }
  const std::string& diagnostic() const noexcept { return diagnostic_; }

  /// Current subset in increasing order.
  std::span<const unsigned> current() const noexcept {
    return {c_.data() + 1, static_cast<std::size_t>(k_)};
  }
  std::uint64_t mask() const noexcept { return mask_; }

  /// Moves to the next subset and returns the swap, or nullopt when the
  /// stream is exhausted.
  std::optional<Swap> advance();

 private:
  std::optional<Swap> apply(unsigned removed, unsigned added);

  unsigned n_;
  unsigned k_;
  bool done_ = false;
  std::string diagnostic_;
  std::vector<unsigned> c_;  // 1-based, c_[k+1] = n sentinel
  std::uint64_t mask_ = 0;
};

/// Streams every k-subset with the swap that produced it (nullopt for the
/// first one). Returns the number emitted.
std::uint64_t iterate_ksubsets(
    unsigned n, unsigned k,
    const std::function<void(std::span<const unsigned>, const std::optional<Swap>&)>& visit);

/// Visits subsets with colex ranks in [begin, end), in colex order. Used to
/// split enumeration across workers.
void for_each_colex_range(
    unsigned n, unsigned k, std::uint64_t begin, std::uint64_t end,
    const std::function<void(std::span<const unsigned>)>& visit);

/// In-place successor in colex order; false after the last subset.
bool next_colex(std::span<unsigned> subset, unsigned n);

}  // namespace mms

#endif  // MMS_COMBINATORICS_HPP
