#pragma once

#include <utility>
#include <vector>

#include "matel/poly.hpp"
#include "matel/rational.hpp"

namespace matel::gegenbauer {

using exactnum::Rational;
using polyops::Poly;

struct GegenbauerFamily {
    Rational order; // nu
    std::vector<Poly> polys;
};

// C_0 = 1, C_1 = 2 nu x, n C_n = 2x(n+nu-1) C_{n-1} - (n+2nu-2) C_{n-2}.
GegenbauerFamily gegenbauer_family(const Rational& nu, int max_degree);

// Taylor coefficient of t^j in (1 - 2xt + t^2)^(-nu), assembled from the
// binomial double sum; the generating-function validator for the family.
Poly gegenbauer_gf_coeff(const Rational& nu, int j);

// lhs: exact integral over [-1,1] of C_j^(nu) P_{j-2s};
// rhs: (nu)_{j-s} (nu-1/2)_s / (s! (1/2)_{j-s+1}).
std::pair<Rational, Rational> gegleg_integral_check(const Rational& nu, int j, int s);

// M_1(alpha) * sum_{j=0..J} (1 + j/nu) C_j^(nu)(x) C_j^(nu)(y) with
// nu = -alpha/2 and M_1 = Gamma(1/2-nu) Gamma(1+nu) / Gamma(1/2);
// converges to |x-y|^alpha for alpha > 0.
double polya_szego_partial(double alpha, double x, double y, long terms);

// Full assembly of the standard-basis square power entry B_alpha(m,n)
// through the Gegenbauer expansion: M_1 M_2 times the Gamma-ratio limit of
// the well-poised 5F4; even m-n, non-integer alpha > 0.
double psint_route_B(double alpha, int m, int n);

// Chebyshev polynomials T_n (T_{n+1} = 2x T_n - T_{n-1}).
Poly chebyshev_T(int n);

// lhs: (2/j) * exact integral over [-1,1] of T_j P_{j-2s};
// rhs: -(s+1)_{j-2s-1} / (2 (s-1/2)_{j-2s+2}).
std::pair<Rational, Rational> cheb_leg_integral_check(int j, int s);

// -ln 2 - 2 sum_{j=1..J} T_j(x) T_j(y) / j; converges to ln|x-y|.
double cheb_log_expansion_check(double x, double y, long terms);

// d/d nu of C_n^(nu) at nu = 0, recovered exactly by polynomial
// interpolation in nu (each coefficient of C_n is a polynomial of degree
// <= n in nu); equals (2/n) T_n for n >= 1.
Poly nu_derivative_at_zero(int n);

} // namespace matel::gegenbauer
