#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace pomo {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact parsing of "3", "-7/4" and decimal literals like "2.5" (= 5/2).
Rational parse_rational(const std::string& text);

// Canonical rendering: integers without denominator, otherwise "p/q".
std::string rational_string(const Rational& q);

std::string integer_string(const Integer& n);

}  // namespace pomo
