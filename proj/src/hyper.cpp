#include "matel/hyper.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace matel::hyper {

using exactnum::frac;
using exactnum::is_nonpositive_integer;
using exactnum::pochhammer_tracked;
using exactnum::to_long;
using exactnum::to_string;
using exactnum::TrackedProduct;
using exactnum::tracked_ratio;

std::optional<long> termination_index(const HypSeries& series) {
    std::optional<long> index;
    for (const auto& a : series.num_params) {
        if (!is_nonpositive_integer(a)) continue;
        const long r = -to_long(a);
        if (!index || r < *index) index = r;
    }
    return index;
}

Rational eval_terminating(const HypSeries& series) {
    const auto index = termination_index(series);
    if (!index)
        throw math_domain_error("eval_terminating on a non-terminating series");
    const long r = *index;
    Rational sum = 1;
    Rational term = 1;
    for (long k = 0; k < r; ++k) {
        Rational ratio = series.argument / Rational(k + 1);
        for (const auto& a : series.num_params) ratio *= a + Rational(k);
        for (const auto& b : series.den_params) {
            const Rational factor = b + Rational(k);
            if (factor == 0)
                throw pole_error("denominator parameter " + to_string(b) +
                                 " hits a nonpositive integer before termination");
            ratio /= factor;
        }
        term *= ratio;
        sum += term;
    }
    return sum;
}

double partial_sum(const std::vector<double>& num_params,
                   const std::vector<double>& den_params, double argument, long terms) {
    double sum = 0.0;
    double term = 1.0;
    for (long k = 0; k < terms; ++k) {
        sum += term;
        double ratio = argument / static_cast<double>(k + 1);
        for (double a : num_params) ratio *= a + static_cast<double>(k);
        for (double b : den_params) ratio /= b + static_cast<double>(k);
        term *= ratio;
    }
    return sum;
}

Rational gauss_sum(const Rational& a, const Rational& b, const Rational& c) {
    // Pick the terminating upper parameter; with two candidates the smaller
    // truncation index governs the sum.
    std::optional<long> n;
    Rational other;
    if (is_nonpositive_integer(a)) {
        n = -to_long(a);
        other = b;
    }
    if (is_nonpositive_integer(b) && (!n || -to_long(b) < *n)) {
        n = -to_long(b);
        other = a;
    }
    if (!n) throw math_domain_error("gauss_sum requires a terminating 2F1");
    return tracked_ratio(pochhammer_tracked(c - other, *n), pochhammer_tracked(c, *n));
}

namespace {

// Exact ratio Gamma(x)/Gamma(y) for integer x-y, as a tracked product pair:
// k >= 0 contributes (y)_k upstairs, k < 0 contributes (x)_{-k} downstairs.
void absorb_gamma_ratio(const Rational& x, const Rational& y, TrackedProduct& up,
                        TrackedProduct& down) {
    const long k = to_long(x - y);
    if (k >= 0)
        up *= pochhammer_tracked(y, k);
    else
        down *= pochhammer_tracked(x, -k);
}

} // namespace

ThomaeResult thomae_transform(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& e, const Rational& f) {
    const Rational s = e + f - a - b - c;
    ThomaeResult result;
    result.transformed.num_params = {e - a, f - a, s};
    result.transformed.den_params = {s + b, s + c};
    result.transformed.argument = 1;

    const std::array<Rational, 3> uppers = {e, f, s};
    const std::array<Rational, 3> lowers = {a, s + b, s + c};
    std::array<int, 3> perm = {0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
        bool reducible = true;
        for (int i = 0; i < 3 && reducible; ++i)
            reducible = exactnum::is_integer(uppers[static_cast<std::size_t>(i)] -
                                             lowers[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
        if (!reducible) continue;
        TrackedProduct up, down;
        for (int i = 0; i < 3; ++i)
            absorb_gamma_ratio(uppers[static_cast<std::size_t>(i)],
                               lowers[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])], up, down);
        result.prefactor = tracked_ratio(up, down);
        return result;
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw math_domain_error("thomae_transform: Gamma ratio is not an integer-shift product");
}

HypSeries whipple_series(const Rational& a, const Rational& b, const Rational& c) {
    HypSeries series;
    series.num_params = {a, Rational(1) - a, (b + c - 1) / 2};
    series.den_params = {b, c};
    series.argument = 1;
    return series;
}

Rational whipple_terminating(long n, const Rational& b, const Rational& c) {
    if (n < 0) throw usage_error("whipple_terminating requires n >= 0");
    TrackedProduct up = pochhammer_tracked((b - Rational(n)) / 2, n);
    up *= pochhammer_tracked((c - Rational(n)) / 2, n);
    up.nonzero_part *= exactnum::pow_int(Rational(4), n);
    TrackedProduct down = pochhammer_tracked(b, n);
    down *= pochhammer_tracked(c, n);
    return tracked_ratio(up, down);
}

namespace {

bool near_nonpositive_integer(double x) {
    const double rounded = std::nearbyint(x);
    return rounded <= 0.0 && std::abs(x - rounded) < 1e-12;
}

} // namespace

double whipple_general(double a, double b, double c) {
    const double a_mirror = 1.0 - a;
    const std::array<double, 4> lower_args = {(b + a) / 2, (b + a_mirror) / 2,
                                              (c + a) / 2, (c + a_mirror) / 2};
    for (double arg : lower_args)
        if (near_nonpositive_integer(arg)) return 0.0;

    const SignedLog gb = gamma_ln(b); // numerator poles propagate as pole_error
    const SignedLog gc = gamma_ln(c);
    double log_value = std::log(4.0 * M_PI) - (b + c) * std::log(2.0) + gb.log_abs + gc.log_abs;
    int sign = gb.sign * gc.sign;
    for (double arg : lower_args) {
        const SignedLog g = gamma_ln(arg);
        log_value -= g.log_abs;
        sign *= g.sign;
    }
    return sign * std::exp(log_value);
}

HypSeries dougall_series(const Rational& a, const Rational& c, const Rational& d,
                         const Rational& e) {
    HypSeries series;
    series.num_params = {a, (a + 2) / 2, c, d, e};
    series.den_params = {a / 2, 1 + a - c, 1 + a - d, 1 + a - e};
    series.argument = 1;
    return series;
}

Rational dougall_5F4(const Rational& a, const Rational& c, const Rational& d,
                     const Rational& e) {
    // The closed form is symmetric in (c, d, e); reduce against whichever
    // slot terminates first.
    const std::array<Rational, 3> slots = {c, d, e};
    std::optional<int> chosen;
    long j = 0;
    for (int i = 0; i < 3; ++i) {
        const auto& p = slots[static_cast<std::size_t>(i)];
        if (!is_nonpositive_integer(p)) continue;
        const long candidate = -to_long(p);
        if (!chosen || candidate < j) {
            chosen = i;
            j = candidate;
        }
    }
    if (!chosen) throw math_domain_error("dougall_5F4 requires a terminating parameter");
    const Rational u = slots[static_cast<std::size_t>((*chosen + 1) % 3)];
    const Rational v = slots[static_cast<std::size_t>((*chosen + 2) % 3)];
    TrackedProduct up = pochhammer_tracked(1 + a, j);
    up *= pochhammer_tracked(1 + a - u - v, j);
    TrackedProduct down = pochhammer_tracked(1 + a - u, j);
    down *= pochhammer_tracked(1 + a - v, j);
    return tracked_ratio(up, down);
}

Rational karlsson_reduce(long n, const Rational& b, const Rational& c, const Rational& d) {
    if (n < 0) throw usage_error("karlsson_reduce requires n >= 0");
    if (!exactnum::is_integer(b) || b <= 0)
        throw math_domain_error("karlsson_reduce requires a positive integer b");
    Rational sum = 0;
    for (long k = 0; k <= n + 1; ++k) {
        Rational weight = exactnum::binomial(n + 1, k) *
                          exactnum::pochhammer(-b - Rational(n), k) * exactnum::pochhammer(d, k);
        const Rational denom = exactnum::pochhammer(b, k) * exactnum::pochhammer(c, k);
        if (denom == 0) throw pole_error("karlsson_reduce denominator Pochhammer vanishes");
        sum += weight / denom * gauss_sum(-b - Rational(n) + Rational(k), d + Rational(k),
                                          c + Rational(k));
    }
    return sum;
}

SignedLog gamma_ln(double x) {
    if (x >= 0.5) return {std::lgamma(x), 1};
    if (x == std::floor(x)) // nonpositive integer
        throw pole_error("gamma_ln pole at " + std::to_string(x));
    // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x)); Gamma(1-x) > 0 here.
    const double sin_term = std::sin(M_PI * x);
    SignedLog result;
    result.log_abs = std::log(M_PI) - std::log(std::abs(sin_term)) - std::lgamma(1.0 - x);
    result.sign = sin_term > 0 ? 1 : -1;
    return result;
}

} // namespace matel::hyper
