#ifndef MMS_TESTS_SUPPORT_HPP
#define MMS_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "mms/lemmas.hpp"
#include "mms/weights.hpp"

namespace mms::testing {

inline WeightVector weights_of(std::initializer_list<long long> raw) {
  std::vector<Rational> values;
  for (long long v : raw) values.emplace_back(v);
  return normalize(values, NormalizationMode::require_zero_sum);
}

inline WeightVector weights_of(const std::vector<Rational>& raw) {
  return normalize(raw, NormalizationMode::require_zero_sum);
}

inline WeightVector zero_vector(unsigned n) { return weights_of(std::vector<Rational>(n, Rational(0))); }

// First claim whose description starts with `prefix`.
inline const Claim& find_claim(const LemmaReport& report, const std::string& prefix) {
  for (const auto& c : report.claims)
    if (c.description.rfind(prefix, 0) == 0) return c;
  throw std::logic_error("no claim starting with: " + prefix);
}

// Reference b_S over an index mask, straight from the definition.
inline Rational naive_sum(const WeightVector& w, std::uint64_t mask) {
  Rational s = 0;
  for (unsigned i = 0; i < w.n(); ++i)
    if ((mask >> i) & 1U) s += w[i];
  return s;
}

inline unsigned popcount(std::uint64_t mask) { return static_cast<unsigned>(__builtin_popcountll(mask)); }

}  // namespace mms::testing

#endif  // MMS_TESTS_SUPPORT_HPP
