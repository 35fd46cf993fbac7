#pragma once

#include <optional>
#include <vector>

#include "matel/rational.hpp"

namespace matel::hyper {

using exactnum::Rational;

// Generalized hypergeometric series pFq(a_1..a_p; b_1..b_q; z).
struct HypSeries {
    std::vector<Rational> num_params;
    std::vector<Rational> den_params;
    Rational argument = 1;
};

// Truncation index r (series terminates after term r) if some numerator
// parameter is a nonpositive integer; nullopt otherwise.
std::optional<long> termination_index(const HypSeries& series);

// Exact finite sum of a terminating series.  Throws math_domain_error on a
// non-terminating input and pole_error when a denominator parameter hits a
// nonpositive integer before the series terminates.
Rational eval_terminating(const HypSeries& series);

// Plain double-precision partial sum of the first `terms` terms (term index
// 0 .. terms-1); used as the float referee for non-terminating identities.
double partial_sum(const std::vector<double>& num_params,
                   const std::vector<double>& den_params, double argument, long terms);

// 2F1(a, b; c; 1) in the terminating case (a or b a nonpositive integer),
// summed in closed form as (c-b)_n / (c)_n with tracked-product semantics.
Rational gauss_sum(const Rational& a, const Rational& b, const Rational& c);

struct ThomaeResult {
    Rational prefactor;
    HypSeries transformed;
};

// 3F2(a,b,c; e,f; 1) = prefactor * 3F2(e-a, f-a, s; s+b, s+c; 1) with
// s = e+f-a-b-c.  The Gamma-ratio prefactor is reduced exactly by pairing
// {e, f, s} with {a, s+b, s+c} at integer offsets; throws math_domain_error
// if no such pairing exists.  The pivot is always the first argument; when
// that hits a Gamma pole, callers reorder the upper parameters (the series
// is symmetric in them) and call again.
ThomaeResult thomae_transform(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& e, const Rational& f);

// The 3F2(a, 1-a, (b+c-1)/2; b, c; 1) series of the Whipple identity.
HypSeries whipple_series(const Rational& a, const Rational& b, const Rational& c);

// Closed form for the terminating Whipple sum (a = -n):
// 4^n ((b-n)/2)_n ((c-n)/2)_n / ((b)_n (c)_n).
Rational whipple_terminating(long n, const Rational& b, const Rational& c);

// Non-terminating Whipple identity right-hand side via log-Gamma:
// 4*pi*2^-(b+c) G(b)G(c) / (G((b+a)/2)G((b+a')/2)G((c+a)/2)G((c+a')/2)),
// a' = 1-a.  A Gamma pole in the denominator makes the value vanish
// (returns 0); a pole in a numerator Gamma throws.
double whipple_general(double a, double b, double c);

// Very-well-poised 5F4 at unit argument with parameter set completed from
// (a, c, d, e): numerators {a, (a+2)/2, c, d, e}, denominators
// {a/2, 1+a-c, 1+a-d, 1+a-e}.
HypSeries dougall_series(const Rational& a, const Rational& c, const Rational& d,
                         const Rational& e);

// Closed form of dougall_series when one of c, d, e is a nonpositive
// integer -j:  (1+a)_j (1+a-u-v)_j / ((1+a-u)_j (1+a-v)_j)  with {u,v} the
// two remaining parameters.  Throws on non-terminating input.
Rational dougall_5F4(const Rational& a, const Rational& c, const Rational& d,
                     const Rational& e);

// Reduction of 3F2(-b-n, b+n+1, d; b, c; 1) for positive integer b to a
// finite combination of Gauss-summable 2F1's.
Rational karlsson_reduce(long n, const Rational& b, const Rational& c, const Rational& d);

struct SignedLog {
    double log_abs = 0.0;
    int sign = 1;
};

// log |Gamma(x)| plus the sign of Gamma(x); reflection formula below 1/2.
// Throws pole_error at nonpositive integers.
SignedLog gamma_ln(double x);

} // namespace matel::hyper
