#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace toric {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }

inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Integer& z) { return z.str(); }

inline std::string to_string(const Rational& q) { return q.str(); }

/// Narrow an exact integer to int64. Throws std::overflow_error when it does not fit.
std::int64_t to_int64(const Integer& z);

Integer gcd_of(const Integer& a, const Integer& b);

}  // namespace toric
