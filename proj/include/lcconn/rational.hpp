#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace lcconn {

// Exact costs and fractions. Never converted to floating point for
// comparisons.
using Rational = boost::rational<std::int64_t>;

// Parses "n", "n/d". Throws std::invalid_argument on malformed text or a
// zero denominator.
Rational parse_rational(std::string_view text);

// "n/d" with the denominator always present ("3/1").
std::string format_rational(const Rational& r);

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace lcconn
