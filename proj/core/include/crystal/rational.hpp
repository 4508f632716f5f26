#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace crystal {

/// Exact arbitrary-precision rational used by every affine form, half-space
/// and polynomial coefficient in the library.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace crystal
