#include "mms/exact.hpp"

#include <cctype>
#include <limits>

namespace mms {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  }
  Integer p{std::string(num)};
  Integer q{std::string(den)};
  if (q == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'", 0);
  }
  if (negative) p = -p;
  return Rational(p, q);
}

std::string to_string(const Rational& value) {
  const Integer q = denominator(value);
  if (q == 1) return numerator(value).str();
  return numerator(value).str() + "/" + q.str();
}

std::string to_string(const Integer& value) { return value.str(); }

int sign(const Rational& value) { return value.sign(); }
int sign(const Integer& value) { return value.sign(); }

bool fits_int64(const Integer& value) {
  return value >= std::numeric_limits<std::int64_t>::min() &&
         value <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace mms
