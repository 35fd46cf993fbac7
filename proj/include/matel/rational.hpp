#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "matel/error.hpp"

namespace matel::exactnum {

// Exact rational arithmetic is delegated to GMP.  mpq_class keeps the value
// canonical (positive denominator, gcd-reduced) as long as every entry point
// goes through canonicalize(); the helpers below enforce that.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den as an exact rational; throws usage_error on den == 0.
Rational frac(long num, long den = 1);
Rational frac(const Integer& num, const Integer& den);

// Canonical text form: "-7/3", "5", "0".  A denominator of 1 is omitted.
std::string to_string(const Rational& value);

// Inverse of to_string.  Accepts optional leading '-', digits, optional
// "/digits".  Throws usage_error on anything else (including den == 0).
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& value);
bool is_nonpositive_integer(const Rational& value);
// Requires is_integer and magnitude within long range.
long to_long(const Rational& value);
double to_double(const Rational& value);

// value^exponent for any integer exponent; throws pole_error on 0^negative.
Rational pow_int(const Rational& value, long exponent);

Rational factorial(long n);
Rational binomial(long n, long k);

// Rising factorial (a)_n for any integer n, including the negative-n
// extension (a)_n = 1 / (a+n)_{-n}.  Throws pole_error when the extension
// divides by zero, e.g. (1)_{-2}.
Rational pochhammer(const Rational& a, long n);

// A product kept in "zero-stripped" form so that ratios with matching zero
// factors can be taken exactly instead of failing at 0/0.
struct TrackedProduct {
    long zero_count = 0;       // number of zero factors absorbed
    Rational nonzero_part = 1; // product of the nonzero factors

    void multiply_factor(const Rational& factor);
    TrackedProduct& operator*=(const TrackedProduct& other);
    // Collapses to a plain value: zero if any zero factor was seen.
    Rational collapse() const;
};

// (a)_n with zero factors tracked instead of absorbed; requires n >= 0.
TrackedProduct pochhammer_tracked(const Rational& a, long n);

// num/den with zero-count bookkeeping: an excess of zeros in the numerator
// gives exact 0, an excess in the denominator is a pole (throws pole_error),
// a tie divides the nonzero parts.
Rational tracked_ratio(const TrackedProduct& num, const TrackedProduct& den);

// Harmonic number h_r = 1 + 1/2 + ... + 1/r (r >= 1; h_0 = 0 also allowed).
// Memoized; thread-safe.
Rational harmonic(long r);

// Odd harmonic number 1 + 1/3 + ... + 1/(2n+1) for n >= 0.  Memoized.
Rational odd_harmonic(long n);

} // namespace matel::exactnum
