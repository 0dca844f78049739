#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tauforge {

// All scalar arithmetic in this library is exact. GMP supplies the
// arbitrary-precision integer and rational types; mpq_class arithmetic
// keeps values canonical (lowest terms, positive denominator), so only
// direct numerator/denominator construction needs canonicalize().
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer factorial(long n);

// binomial(n, k) with the convention that out-of-range k yields 0.
Integer binomial(long n, long k);

// n!! for n >= -1, with (-1)!! = 0!! = 1.
Integer double_factorial(long n);

// (2k-1)!! for k >= 0; the empty product (-1)!! is 1.
Integer odd_double_factorial(long k);

// "num" when the denominator is 1, otherwise "num/den".
std::string rational_to_string(const Rational& q);

// Inverse of rational_to_string; accepts optional "/den" part.
Rational rational_from_string(const std::string& s);

}  // namespace tauforge
