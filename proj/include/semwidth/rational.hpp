#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace semwidth {

// All width and cover values are exact rationals. The only floating-point
// surface in the whole library is the Ding-bound diagnostic, which is an
// inequality check and explicitly labeled approximate.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "2" for integral values, "3/2" otherwise.
std::string rational_display(const Rational& r);

// Always "p/q", including "2/1". Used in cover files.
std::string rational_fraction(const Rational& r);

// Accepts both of the forms above.
Rational parse_rational(const std::string& text);

double rational_approx(const Rational& r);

}  // namespace semwidth
