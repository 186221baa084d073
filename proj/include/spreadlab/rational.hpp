#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace spreadlab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Render as "p/q" (denominator always present, e.g. "3/2", "1/1", "-5/3").
inline std::string rational_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace spreadlab
