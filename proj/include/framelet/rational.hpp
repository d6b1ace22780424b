#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace framelet {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or "p"; throws on malformed input or zero denominator.
Rational parse_rational(const std::string& s);

// Renders in lowest terms, "p/q" or "p" when q == 1.
std::string rational_to_string(const Rational& r);

// Splits n = square * squarefree with squarefree >= 1. Requires n >= 1.
struct SquareSplit {
    Integer square_root;  // r with r^2 * squarefree == n
    Integer squarefree;
};
SquareSplit split_square(const Integer& n);

double to_double(const Rational& r);

}  // namespace framelet
