#ifndef MMS_WEIGHTS_HPP
#define MMS_WEIGHTS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mms/exact.hpp"

namespace mms {

enum class NormalizationMode { require_zero_sum, shift_to_zero };

std::string to_string(NormalizationMode mode);
NormalizationMode parse_normalization_mode(std::string_view text);

/// Raised when a weight list violates the zero-sum / nonnegative-sum
/// hypothesis. `residual` is the exact sum of the raw input.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, Rational residual)
      : std::runtime_error(what), residual_(std::move(residual)) {}
  const Rational& residual() const noexcept { return residual_; }

 private:
  Rational residual_;
};

/// How a WeightVector was obtained from its raw input.
struct Provenance {
  std::string source;               // "file:<path>", "star", "random", "inline", ...
  std::vector<std::string> echo;    // raw entries as given
  NormalizationMode mode = NormalizationMode::require_zero_sum;
  Rational shift = 0;               // subtracted from every raw entry
  std::vector<std::size_t> order;   // order[i] = raw position of sorted entry i
  std::optional<std::uint64_t> seed;
};

/// Exact weights x_1 >= ... >= x_n with sum 0. Construct through
/// normalize() or one of the generators; the invariants hold for every
/// live object.
class WeightVector {
 public:
  /// Validates an already sorted zero-sum list.
  static WeightVector from_sorted(std::vector<Rational> values, Provenance provenance = {});

  std::size_t size() const noexcept { return values_.size(); }
  unsigned n() const noexcept { return static_cast<unsigned>(values_.size()); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  std::span<const Rational> values() const noexcept { return values_; }
  const Provenance& provenance() const noexcept { return provenance_; }
  Provenance& provenance() noexcept { return provenance_; }

  bool is_zero() const;

  /// Smallest positive D with D * x_i integral for all i.
  const Integer& scale() const noexcept { return scale_; }
  /// D * x_i for every i.
  std::span<const Integer> scaled() const noexcept { return scaled_; }

  std::vector<std::string> to_strings() const;

 private:
  WeightVector() = default;

  std::vector<Rational> values_;
  std::vector<Integer> scaled_;
  Integer scale_ = 1;
  Provenance provenance_;
};

WeightVector normalize(std::span<const Rational> raw, NormalizationMode mode);

/// Parses a weight document: {"weights": [...], "mode": "..."}; entries are
/// JSON integers or "p/q" strings. Throws ParseError (with the 1-based
/// entry) or ValidationError.
WeightVector load_weights(std::string_view document, std::string source = "inline");
WeightVector load_weights_file(const std::string& path);

/// (n-1, -1, ..., -1).
WeightVector gen_star(unsigned n);

/// n-1 uniform draws from [-magnitude, magnitude], the last entry balancing
/// the sum, then sorted. Deterministic per seed.
WeightVector gen_random_zero_sum(unsigned n, std::uint64_t magnitude, std::uint64_t seed);

/// Weight document for `weights`, suitable for load_weights().
std::string to_weight_document(const WeightVector& weights);

/// b_S for every k-subset S, indexed by colex rank.
struct SubsetSumVector {
  unsigned n = 0;
  unsigned k = 0;
  std::vector<Rational> entries;
};

/// Builds b with running sums along the revolving-door stream.
SubsetSumVector subset_sums(const WeightVector& weights, unsigned k);

/// Scaled integer variant: entry S holds D * b_S with D = weights.scale().
std::vector<Integer> scaled_subset_sums(const WeightVector& weights, unsigned k);

}  // namespace mms

#endif  // MMS_WEIGHTS_HPP
