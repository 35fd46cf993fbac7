#include "matel/gegenbauer.hpp"

#include <cmath>

#include "matel/hyper.hpp"
#include "matel/oracle.hpp"

namespace matel::gegenbauer {

using exactnum::binomial;
using exactnum::factorial;
using exactnum::frac;
using exactnum::pochhammer;
using exactnum::pow_int;

GegenbauerFamily gegenbauer_family(const Rational& nu, int max_degree) {
    if (max_degree < 0) throw usage_error("gegenbauer_family requires max_degree >= 0");
    GegenbauerFamily family;
    family.order = nu;
    family.polys.reserve(static_cast<std::size_t>(max_degree) + 1);
    family.polys.push_back(Poly::constant(Rational(1)));
    if (max_degree >= 1) family.polys.push_back(Poly::monomial(1, 2 * nu));
    for (int n = 2; n <= max_degree; ++n) {
        const Poly& prev = family.polys[static_cast<std::size_t>(n - 1)];
        const Poly& prev2 = family.polys[static_cast<std::size_t>(n - 2)];
        Poly next = Poly::monomial(1, 2 * (nu + Rational(n) - 1)) * prev -
                    (Rational(n) + 2 * nu - 2) * prev2;
        next *= frac(1, n);
        family.polys.push_back(std::move(next));
    }
    return family;
}

Poly gegenbauer_gf_coeff(const Rational& nu, int j) {
    // (1 - t(2x - t))^(-nu) = sum_s (nu)_s/s! t^s (2x-t)^s; collecting t^j
    // gives sum over s >= ceil(j/2) of binom(s, j-s)(-1)^(j-s)(2x)^(2s-j).
    Poly coeff;
    for (int s = (j + 1) / 2; s <= j; ++s) {
        const int i = j - s; // power of the inner -t
        Rational scale = pochhammer(nu, s) / factorial(s) * binomial(s, i) *
                         pow_int(Rational(2), 2 * s - j);
        if (i % 2 != 0) scale = -scale;
        coeff += Poly::monomial(2 * s - j, scale);
    }
    return coeff;
}

std::pair<Rational, Rational> gegleg_integral_check(const Rational& nu, int j, int s) {
    if (j < 0 || s < 0 || j - 2 * s < 0)
        throw usage_error("gegleg_integral_check requires j - 2s >= 0");
    const GegenbauerFamily family = gegenbauer_family(nu, j);
    const Rational lhs = polyops::inner_product(family.polys[static_cast<std::size_t>(j)],
                                                polyops::legendre(j - 2 * s),
                                                polyops::Interval::symmetric);
    const Rational rhs = pochhammer(nu, j - s) * pochhammer(nu - frac(1, 2), s) /
                         (factorial(s) * pochhammer(frac(1, 2), j - s + 1));
    return {lhs, rhs};
}

namespace {

// Values C_j^(nu)(x) for j = 0..J by the three-term recurrence in doubles.
std::vector<double> gegenbauer_values(double nu, double x, long max_degree) {
    std::vector<double> values(static_cast<std::size_t>(max_degree) + 1);
    values[0] = 1.0;
    if (max_degree >= 1) values[1] = 2.0 * nu * x;
    for (long n = 2; n <= max_degree; ++n)
        values[static_cast<std::size_t>(n)] =
            (2.0 * x * (n + nu - 1.0) * values[static_cast<std::size_t>(n - 1)] -
             (n + 2.0 * nu - 2.0) * values[static_cast<std::size_t>(n - 2)]) /
            static_cast<double>(n);
    return values;
}

double m1_prefactor(double alpha) {
    const double nu = -alpha / 2.0;
    const hyper::SignedLog g1 = hyper::gamma_ln(0.5 - nu);
    const hyper::SignedLog g2 = hyper::gamma_ln(1.0 + nu);
    return g1.sign * g2.sign * std::exp(g1.log_abs + g2.log_abs - 0.5 * std::log(M_PI));
}

// Product x (x+1) ... (x+count-1) in doubles; sign-safe for negative x.
double poch_double(double x, long count) {
    double product = 1.0;
    for (long i = 0; i < count; ++i) product *= x + static_cast<double>(i);
    return product;
}

} // namespace

double polya_szego_partial(double alpha, double x, double y, long terms) {
    if (!(alpha > 0.0)) throw math_domain_error("polya_szego_partial requires alpha > 0");
    if (terms < 0) throw usage_error("polya_szego_partial requires terms >= 0");
    const double nu = -alpha / 2.0;
    const std::vector<double> cx = gegenbauer_values(nu, x, terms);
    const std::vector<double> cy = gegenbauer_values(nu, y, terms);
    std::vector<double> series(static_cast<std::size_t>(terms) + 1);
    for (long j = 0; j <= terms; ++j)
        series[static_cast<std::size_t>(j)] = (1.0 + static_cast<double>(j) / nu) *
                                              cx[static_cast<std::size_t>(j)] *
                                              cy[static_cast<std::size_t>(j)];
    return m1_prefactor(alpha) * oracle::pairwise_sum(series);
}

double psint_route_B(double alpha, int m, int n) {
    if (m < n || (m - n) % 2 != 0)
        throw usage_error("psint_route_B requires m >= n with even m - n");
    if (!(alpha > 0.0) || alpha == std::floor(alpha))
        throw math_domain_error("psint_route_B requires non-integer alpha > 0");
    const double nu = -alpha / 2.0;
    const long d = m - n;

    const double m2 = (1.0 + m / nu) * poch_double(nu, m) * poch_double(nu, m - d / 2) *
                      poch_double(nu - 0.5, d / 2) /
                      (poch_double(0.5, m + 1) * poch_double(1.0, d / 2) *
                       poch_double(0.5, m - d / 2 + 1));

    // Gamma-ratio limit of the well-poised 5F4 with parameters
    // (nu+m, 1+(m+nu)/2, nu-1/2, nu+m-d/2, nu+(d-1)/2).
    const double upper[4] = {m + 1.5, d / 2.0 + 1.0, m + (3.0 - d) / 2.0, alpha + 2.0};
    const double lower[4] = {m + 1.0 - alpha / 2.0, (3.0 + alpha) / 2.0,
                             m + 2.0 + (alpha - d) / 2.0, (3.0 + alpha + d) / 2.0};
    double log_ratio = 0.0;
    int sign = 1;
    for (double arg : upper) {
        const hyper::SignedLog g = hyper::gamma_ln(arg);
        log_ratio += g.log_abs;
        sign *= g.sign;
    }
    for (double arg : lower) {
        const hyper::SignedLog g = hyper::gamma_ln(arg);
        log_ratio -= g.log_abs;
        sign *= g.sign;
    }
    return m1_prefactor(alpha) * m2 * sign * std::exp(log_ratio);
}

Poly chebyshev_T(int n) {
    if (n < 0) throw usage_error("chebyshev_T requires n >= 0");
    Poly t0 = Poly::constant(Rational(1));
    if (n == 0) return t0;
    Poly t1 = Poly::monomial(1);
    for (int k = 2; k <= n; ++k) {
        Poly t2 = Poly::monomial(1, Rational(2)) * t1 - t0;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return t1;
}

std::pair<Rational, Rational> cheb_leg_integral_check(int j, int s) {
    if (j < 1 || s < 0 || j - 2 * s < 0)
        throw usage_error("cheb_leg_integral_check requires j >= 1 and j - 2s >= 0");
    const Rational lhs = frac(2, j) * polyops::inner_product(chebyshev_T(j),
                                                             polyops::legendre(j - 2 * s),
                                                             polyops::Interval::symmetric);
    const Rational rhs = -pochhammer(Rational(s) + 1, j - 2 * s - 1) /
                         (2 * pochhammer(Rational(s) - frac(1, 2), j - 2 * s + 2));
    return {lhs, rhs};
}

double cheb_log_expansion_check(double x, double y, long terms) {
    if (terms < 1) throw usage_error("cheb_log_expansion_check requires terms >= 1");
    // T_j values by recurrence at both arguments.
    double tx0 = 1.0, tx1 = x, ty0 = 1.0, ty1 = y;
    std::vector<double> series(static_cast<std::size_t>(terms));
    series[0] = tx1 * ty1;
    for (long j = 2; j <= terms; ++j) {
        const double tx2 = 2.0 * x * tx1 - tx0;
        const double ty2 = 2.0 * y * ty1 - ty0;
        tx0 = tx1;
        tx1 = tx2;
        ty0 = ty1;
        ty1 = ty2;
        series[static_cast<std::size_t>(j - 1)] = tx1 * ty1 / static_cast<double>(j);
    }
    return -M_LN2 - 2.0 * oracle::pairwise_sum(series);
}

Poly nu_derivative_at_zero(int n) {
    if (n < 0) throw usage_error("nu_derivative_at_zero requires n >= 0");
    if (n == 0) return Poly(); // C_0 = 1 independently of nu
    // Sample nu = 1..n+1; each coefficient of C_n^(nu) is a polynomial of
    // degree <= n in nu, so Lagrange interpolation recovers it exactly and
    // the derivative at 0 is sum_t value_t * L_t'(0).
    const int samples = n + 1;
    std::vector<Poly> sampled;
    sampled.reserve(static_cast<std::size_t>(samples));
    for (int t = 1; t <= samples; ++t)
        sampled.push_back(gegenbauer_family(Rational(t), n).polys[static_cast<std::size_t>(n)]);

    Poly result;
    for (int t = 1; t <= samples; ++t) {
        // L_t'(0) = sum_{u != t} prod_{s != t,u} (-nu_s) / prod_{s != t} (nu_t - nu_s)
        Rational denominator = 1;
        for (int s = 1; s <= samples; ++s)
            if (s != t) denominator *= Rational(t) - Rational(s);
        Rational numerator = 0;
        for (int u = 1; u <= samples; ++u) {
            if (u == t) continue;
            Rational partial = 1;
            for (int s = 1; s <= samples; ++s)
                if (s != t && s != u) partial *= Rational(-s);
            numerator += partial;
        }
        result += (numerator / denominator) * sampled[static_cast<std::size_t>(t - 1)];
    }
    return result;
}

} // namespace matel::gegenbauer
