#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace berge {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient with C(a, b) = 0 whenever a < b (or either is
/// negative) and C(0, 0) = 1.
Integer binom_zero(std::int64_t a, std::int64_t b);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

/// Exact conversion; throws BadParameters if the value does not fit.
std::int64_t to_int64(const Integer& v);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Inverse of to_string(Rational).
Rational parse_rational(const std::string& text);

} // namespace berge
