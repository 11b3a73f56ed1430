#ifndef WTURAN_RATIONAL_HPP
#define WTURAN_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wturan {

// All objective values and weights are exact rationals; the optimizers compare
// values for strict ordering and ties, so floating point is never used.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", a plain integer, or a terminating decimal ("3.25").
/// Denominators must be positive. Throws ParseError on anything else.
Rational parse_rational(const std::string& text);

/// Formats as "p/q" in lowest terms, always with an explicit denominator.
std::string format_rational(const Rational& value);

} // namespace wturan

#endif
