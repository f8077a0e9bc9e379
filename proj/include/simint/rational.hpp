#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace simint {

// Always stored reduced with a positive denominator.
using Rational = boost::rational<std::int64_t>;

// Accepts "p", "p/q" and an optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& x);

}  // namespace simint
