#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace swr {

using Integer = boost::multiprecision::cpp_int;

// Exact rational welfare level, always in lowest terms with positive
// denominator. Backed by boost multiprecision; no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or a plain integer string (optional leading '-').
Rational parse_rational(std::string_view s);

// "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& r);

inline int sign_of(const Rational& r) { return r.sign(); }

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

} // namespace swr
