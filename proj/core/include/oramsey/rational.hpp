#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace oramsey {

using Rational = boost::rational<std::int64_t>;

// "p/q" with q > 0 and gcd(p, q) = 1; integers print as "p/1".
std::string to_string(const Rational& r);

// Accepts "p/q", an integer "p", or a decimal such as "0.3" (converted
// exactly to 3/10). Throws ParameterError on anything else.
Rational parse_rational(std::string_view text);

long double to_long_double(const Rational& r);

}  // namespace oramsey
