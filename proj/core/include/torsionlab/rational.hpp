#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace torsionlab {

/// Arbitrary-precision rational. Eigenvalues are stored as exact multiples of pi^2.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// The exact binary value of a finite double as a rational.
Rational exact_rational(double x);

/// Parses "p", "p/q" or a plain decimal literal ("1.25") exactly.
Rational parse_rational(std::string_view text);

/// Always "p/q", including q = 1.
std::string format_rational(const Rational& q);

double to_double(const Rational& q);

/// True when q is the square of a rational; the root is written to *root.
bool rational_sqrt(const Rational& q, Rational* root);

}  // namespace torsionlab
