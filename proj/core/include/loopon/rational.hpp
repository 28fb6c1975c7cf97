#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace loopon {

using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p/q" or a plain integer string into an exact rational.
Rational parse_rational(const std::string& s);

// "p/q" when the denominator is not 1, otherwise "p".
std::string rational_to_string(const Rational& r);

double to_double(const Rational& r);

}  // namespace loopon
