#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace fanfree {

/// Exact weights, bounds and matching values. Denominators stay tiny (<= 24).
using Rational = boost::rational<std::int64_t>;

/// "p/q" with q >= 1, always including the denominator.
inline std::string to_fraction_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace fanfree
