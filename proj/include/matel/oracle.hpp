#pragma once

#include "matel/poly.hpp"
#include "matel/rational.hpp"

namespace matel::oracle {

using exactnum::Rational;

// Controls for the panel quadrature referee.
struct QuadConfig {
    int nodes_per_panel = 32;  // Gauss-Legendre order inside each panel
    int max_subdivisions = 12; // refinement rounds before giving up
    double target_abs_err = 1e-10;
};

// Quadrature value with the refinement-differencing error estimate attached.
struct QuadOutcome {
    double value = 0.0;
    double error_estimate = 0.0;
    int rounds = 0; // refinement rounds actually used
};

// Exact triangle integral of (x-y)^a p_m(x) p_n(y) over 0 < y < x < 1 for
// integer a >= 0, by binomial expansion and monomial integration.
Rational exact_power_L(int m, int n, long a);

// Exact triangle integral of ln(x-y) p_m(x) p_n(y), reduced to the
// ln-monomial table (integral of x^k ln x over [0,1] is -1/(k+1)^2) via
// the inner-integral identity  integral_0^x ln(x-y) g(y) dy
//   = ln(x) G(x) - (N g)(x),  G = antiderivative of g.
Rational exact_log_L(int m, int n);

// Float referees after the substitution y = x t, which maps the triangle to
// the unit square with singular edges x = 0 and t = 1; panels cluster
// dyadically toward those edges.
QuadOutcome quad_log_L_detail(int m, int n, const QuadConfig& cfg = {},
                              bool parallel = true);
QuadOutcome quad_power_L_detail(int m, int n, double alpha, const QuadConfig& cfg = {},
                                bool parallel = true);
double quad_log_L(int m, int n, const QuadConfig& cfg = {});
double quad_power_L(int m, int n, double alpha, const QuadConfig& cfg = {});

// Gauss-weighted Euler integral referee:
//   (1/B(b, c-b)) * integral_0^1 t^(b-1) (1-t)^(c-b-1) (1-zt)^(-a) dt,
// which matches the 2F1(a,b;c;z) series for c > b > 0, z < 1.
double euler_integral_quad(double a, double b, double c, double z,
                           const QuadConfig& cfg = {});

// Gauss-Legendre nodes/weights on [-1,1]; memoized per order.
void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights);

// Shifted Legendre value p_n(x) on [0,1] by the float three-term recurrence
// (the monomial form cancels catastrophically for large n).
double shifted_legendre_value(int n, double x);

// Deterministic pairwise (recursive-halving) sum; reduction order is
// independent of how the slots were filled, so parallel and serial fills
// agree bitwise.
double pairwise_sum(const std::vector<double>& terms);

} // namespace matel::oracle
