#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace homni {

// Exact rational scalar. cpp_rational keeps values fully reduced with a
// positive denominator, and never overflows.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace homni
