#pragma once

#include <gmpxx.h>

#include <string>

namespace emm {

// Arbitrary-precision exact rationals. GMP keeps them canonical
// (gcd(|num|, den) = 1, den > 0) through all arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

// n! for n >= 0.
Integer factorial(unsigned long n);

// Double factorial n!! with the empty-product conventions 0!! = (-1)!! = 1.
Integer double_factorial(long n);

// binomial(n, k) for integer n >= 0.
Integer binomial(unsigned long n, unsigned long k);

// Generalized binomial coefficient binom(x, k) = x(x-1)...(x-k+1)/k! for
// rational x; the workhorse of half-integer power series expansions.
Rational rational_binomial(const Rational& x, unsigned long k);

// Exact power q^e for integer e (negative e inverts; q must be nonzero then).
Rational rational_pow(const Rational& q, long e);

// num/den in canonical form. The two-argument mpq_class constructor does not
// reduce, so every non-trivially-coprime quotient must come through here.
Rational ratio(const Integer& num, const Integer& den);

// "n" or "n/d"; exact decimal-free rendering.
std::string to_string(const Rational& q);

}  // namespace emm
