#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "dualcore/errors.hpp"

namespace dualcore {

// Exact arbitrary-precision scalars. cpp_rational keeps values normalized
// (lowest terms, positive denominator), which the rest of the library relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

// "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rational& r);

// Accepts "p" or "p/q" with optional leading '-'. Throws parse_error.
Rational parse_rational(const std::string& s);

// base^e for integer e (negative allowed when base != 0).
Rational pow_rational(const Rational& base, long e);

} // namespace dualcore
