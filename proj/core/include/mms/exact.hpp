#ifndef MMS_EXACT_HPP
#define MMS_EXACT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mms {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Malformed textual rational; `position` is the 1-based entry index in
/// the input list (0 when parsing a lone value).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Accepts "p", "-p", "+p" and "p/q" with q > 0. Result is canonical.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline Integer numerator(const Rational& value) {
  return boost::multiprecision::numerator(value);
}
inline Integer denominator(const Rational& value) {
  return boost::multiprecision::denominator(value);
}

int sign(const Rational& value);
int sign(const Integer& value);

/// Least common multiple of all denominators (1 for an empty range).
template <typename Range>
Integer common_denominator(const Range& values) {
  Integer lcm = 1;
  for (const Rational& v : values) {
    lcm = boost::multiprecision::lcm(lcm, denominator(v));
  }
  return lcm;
}

/// True when `value` fits in a signed 64-bit integer.
bool fits_int64(const Integer& value);

}  // namespace mms

#endif  // MMS_EXACT_HPP
