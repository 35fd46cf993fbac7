#include "matel/oracle.hpp"

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace matel::oracle {

using exactnum::binomial;
using exactnum::frac;
using polyops::Interval;
using polyops::Poly;

Rational exact_power_L(int m, int n, long a) {
    if (m < 0 || n < 0 || a < 0)
        throw usage_error("exact_power_L requires m, n, a >= 0");
    const Poly pm = polyops::legendre_shifted(m);
    const Poly pn = polyops::legendre_shifted(n);
    // (x-y)^a = sum_j C(a,j) x^(a-j) (-y)^j; each inner y-integral is the
    // antiderivative of y^j p_n(y) evaluated at x.
    Rational total = 0;
    for (long j = 0; j <= a; ++j) {
        const Poly inner = (Poly::monomial(j) * pn).antiderivative();
        const Poly integrand = pm * Poly::monomial(a - j) * inner;
        const Rational term = binomial(a, j) * polyops::integrate(integrand, Interval::unit);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

Rational exact_log_L(int m, int n) {
    if (m < 0 || n < 0) throw usage_error("exact_log_L requires m, n >= 0");
    const Poly pm = polyops::legendre_shifted(m);
    const Poly pn = polyops::legendre_shifted(n);
    const Poly product = pm * polyops::q_poly(n);
    Rational ln_part = 0;
    for (long k = 0; k <= product.degree(); ++k)
        ln_part -= product.coefficient(k) * frac(1, (k + 1) * (k + 1));
    return ln_part - polyops::inner_product(pm, polyops::op_N(pn), Interval::unit);
}

namespace {

std::mutex gl_mutex;

void legendre_pair(int order, double x, double& value, double& derivative) {
    double p0 = 1.0, p1 = x;
    for (int k = 1; k < order; ++k) {
        const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    value = p1;
    derivative = order * (x * p1 - p0) / (x * x - 1.0);
}

} // namespace

void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
    if (order < 1) throw usage_error("gauss_legendre order must be positive");
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    std::lock_guard<std::mutex> lock(gl_mutex);
    auto it = cache.find(order);
    if (it == cache.end()) {
        std::vector<double> xs(static_cast<std::size_t>(order));
        std::vector<double> ws(static_cast<std::size_t>(order));
        for (int i = 0; i < (order + 1) / 2; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
            double value = 0.0, derivative = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                legendre_pair(order, x, value, derivative);
                const double step = value / derivative;
                x -= step;
                if (std::abs(step) < 1e-15) break;
            }
            legendre_pair(order, x, value, derivative);
            const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
            xs[static_cast<std::size_t>(order - 1 - i)] = x;
            ws[static_cast<std::size_t>(order - 1 - i)] = w;
            xs[static_cast<std::size_t>(i)] = -x;
            ws[static_cast<std::size_t>(i)] = w;
        }
        it = cache.emplace(order, std::make_pair(std::move(xs), std::move(ws))).first;
    }
    nodes = it->second.first;
    weights = it->second.second;
}

double shifted_legendre_value(int n, double x) {
    const double t = 2.0 * x - 1.0;
    if (n == 0) return 1.0;
    double p0 = 1.0, p1 = t;
    for (int k = 1; k < n; ++k) {
        const double p2 = ((2.0 * k + 1.0) * t * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

namespace {

double pairwise_range(const double* data, std::size_t count) {
    if (count <= 8) {
        double sum = 0.0;
        for (std::size_t i = 0; i < count; ++i) sum += data[i];
        return sum;
    }
    const std::size_t half = count / 2;
    return pairwise_range(data, half) + pairwise_range(data + half, count - half);
}

} // namespace

double pairwise_sum(const std::vector<double>& terms) {
    return pairwise_range(terms.data(), terms.size());
}

namespace {

struct Panel {
    double lo, hi;
};

// [0, 2^-depth], [2^-depth, 2^-(depth-1)], ..., [1/2, 1].
std::vector<Panel> dyadic_panels(int depth) {
    std::vector<Panel> panels;
    panels.reserve(static_cast<std::size_t>(depth) + 1);
    panels.push_back({0.0, std::ldexp(1.0, -depth)});
    for (int k = depth; k >= 1; --k)
        panels.push_back({std::ldexp(1.0, -k), std::ldexp(1.0, -(k - 1))});
    return panels;
}

// Tensor-product panel quadrature over the unit square for an integrand
// given in coordinates (x, u) that are both singular at 0.
double square_pass(const std::function<double(double, double)>& integrand, int depth,
                   int order, bool parallel) {
    std::vector<double> nodes, weights;
    gauss_legendre(order, nodes, weights);
    const std::vector<Panel> panels = dyadic_panels(depth);
    const std::size_t per_axis = panels.size();
    std::vector<double> cells(per_axis * per_axis, 0.0);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long cell = 0; cell < static_cast<long>(per_axis * per_axis); ++cell) {
        const Panel px = panels[static_cast<std::size_t>(cell) / per_axis];
        const Panel pu = panels[static_cast<std::size_t>(cell) % per_axis];
        const double cx = 0.5 * (px.lo + px.hi), hx = 0.5 * (px.hi - px.lo);
        const double cu = 0.5 * (pu.lo + pu.hi), hu = 0.5 * (pu.hi - pu.lo);
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const double x = cx + hx * nodes[i];
            double row = 0.0;
            for (std::size_t j = 0; j < nodes.size(); ++j)
                row += weights[j] * integrand(x, cu + hu * nodes[j]);
            acc += weights[i] * row;
        }
        cells[static_cast<std::size_t>(cell)] = acc * hx * hu;
    }
    (void)parallel;
    return pairwise_sum(cells);
}

QuadOutcome refine(const std::function<double(int)>& pass_at_depth, const QuadConfig& cfg,
                   const char* label) {
    if (cfg.nodes_per_panel < 8 || cfg.nodes_per_panel > 64)
        throw usage_error("nodes_per_panel must lie in [8, 64]");
    if (cfg.target_abs_err < 1e-13)
        throw usage_error("target_abs_err must be at least 1e-13");
    double previous = pass_at_depth(6);
    double error = 0.0;
    for (int round = 1; round <= cfg.max_subdivisions; ++round) {
        const double current = pass_at_depth(6 + 4 * round);
        error = std::abs(current - previous);
        if (error <= cfg.target_abs_err) return {current, error, round};
        previous = current;
    }
    std::ostringstream message;
    message << label << ": quadrature reached error " << error << " after "
            << cfg.max_subdivisions << " refinement rounds (target " << cfg.target_abs_err
            << ")";
    throw quadrature_error(message.str());
}

} // namespace

QuadOutcome quad_log_L_detail(int m, int n, const QuadConfig& cfg, bool parallel) {
    if (m < 0 || n < 0 || m > 16 || n > 16)
        throw usage_error("quad_log_L supports 0 <= m, n <= 16");
    // After y = x t and u = 1 - t the triangle integral becomes
    // int_0^1 int_0^1 x p_m(x) p_n(x(1-u)) (ln x + ln u) du dx.
    auto integrand = [m, n](double x, double u) {
        return x * shifted_legendre_value(m, x) * shifted_legendre_value(n, x * (1.0 - u)) *
               (std::log(x) + std::log(u));
    };
    auto pass = [&](int depth) { return square_pass(integrand, depth, cfg.nodes_per_panel, parallel); };
    return refine(pass, cfg, "quad_log_L");
}

QuadOutcome quad_power_L_detail(int m, int n, double alpha, const QuadConfig& cfg,
                                bool parallel) {
    if (m < 0 || n < 0 || m > 16 || n > 16)
        throw usage_error("quad_power_L supports 0 <= m, n <= 16");
    if (!(alpha > -1.0)) throw math_domain_error("quad_power_L requires alpha > -1");
    auto integrand = [m, n, alpha](double x, double u) {
        return std::pow(x, alpha + 1.0) * std::pow(u, alpha) * shifted_legendre_value(m, x) *
               shifted_legendre_value(n, x * (1.0 - u));
    };
    auto pass = [&](int depth) { return square_pass(integrand, depth, cfg.nodes_per_panel, parallel); };
    return refine(pass, cfg, "quad_power_L");
}

double quad_log_L(int m, int n, const QuadConfig& cfg) {
    return quad_log_L_detail(m, n, cfg).value;
}

double quad_power_L(int m, int n, double alpha, const QuadConfig& cfg) {
    return quad_power_L_detail(m, n, alpha, cfg).value;
}

namespace {

// One refinement pass of the Euler integral in the cubic variable
// t = u^2 (3 - 2u), for which 1 - t = (1-u)^2 (1 + 2u) exactly.
double euler_pass(double a, double b, double c, double z, int depth, int order) {
    std::vector<double> nodes, weights;
    gauss_legendre(order, nodes, weights);
    const std::vector<Panel> base = dyadic_panels(depth);
    // Panels on [0,1] graded toward both endpoints: halves of the dyadic
    // layout toward 0, mirrored onto (1/2, 1].
    std::vector<Panel> panels;
    panels.reserve(2 * base.size());
    for (const Panel& p : base) panels.push_back({0.5 * p.lo, 0.5 * p.hi});
    for (std::size_t i = base.size(); i-- > 0;)
        panels.push_back({1.0 - 0.5 * base[i].hi, 1.0 - 0.5 * base[i].lo});

    std::vector<double> cells(panels.size(), 0.0);
    for (std::size_t idx = 0; idx < panels.size(); ++idx) {
        const Panel p = panels[idx];
        const double center = 0.5 * (p.lo + p.hi), half = 0.5 * (p.hi - p.lo);
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const double u = center + half * nodes[i];
            const double one_minus_u = 1.0 - u;
            const double t = u * u * (3.0 - 2.0 * u);
            const double one_minus_t = one_minus_u * one_minus_u * (1.0 + 2.0 * u);
            const double jacobian = 6.0 * u * one_minus_u;
            const double value = std::pow(t, b - 1.0) * std::pow(one_minus_t, c - b - 1.0) *
                                 std::pow(1.0 - z * t, -a) * jacobian;
            acc += weights[i] * value;
        }
        cells[idx] = acc * half;
    }
    return pairwise_sum(cells);
}

} // namespace

double euler_integral_quad(double a, double b, double c, double z, const QuadConfig& cfg) {
    if (!(c > b) || !(b > 0.0))
        throw math_domain_error("euler_integral_quad requires c > b > 0");
    if (z >= 1.0) throw math_domain_error("euler_integral_quad requires z < 1");
    auto pass = [&](int depth) { return euler_pass(a, b, c, z, depth, cfg.nodes_per_panel); };
    const QuadOutcome raw = refine(pass, cfg, "euler_integral_quad");
    // Normalize by B(b, c-b) so the value matches the 2F1 series.
    const double log_beta = std::lgamma(b) + std::lgamma(c - b) - std::lgamma(c);
    return raw.value * std::exp(-log_beta);
}

} // namespace matel::oracle
