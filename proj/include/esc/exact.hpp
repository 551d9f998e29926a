#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace esc {

// Arbitrary-precision substrate for the enumerative-combinatorics engine.
// Rationals are kept in lowest terms by the backend.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(int n);
Integer binomial(long long n, long long k);

// Exact rational value of a finite double (every finite double is a dyadic
// rational). Throws std::invalid_argument on NaN/inf.
Rational rational_from_double(double x);

double to_double(const Rational& q);

}  // namespace esc
