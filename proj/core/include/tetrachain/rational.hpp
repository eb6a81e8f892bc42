#ifndef TETRACHAIN_RATIONAL_HPP
#define TETRACHAIN_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tetrachain {

/// Exact rational with arbitrary-size numerator and denominator, always kept
/// in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// "num/den", including "0/1" and "1/1".
std::string to_fraction_string(const Rational& r);
/// Parses "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_fraction(const std::string& s);
double to_double(const Rational& r);

}  // namespace tetrachain

#endif  // TETRACHAIN_RATIONAL_HPP
