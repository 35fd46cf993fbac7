#include "matel/matelem.hpp"

#include <cmath>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "matel/hyper.hpp"

namespace matel::matelem {

using exactnum::frac;
using exactnum::is_integer;
using exactnum::odd_harmonic;
using exactnum::pochhammer;
using exactnum::pow_int;
using exactnum::to_double;
using exactnum::to_long;

double LogValue::to_double() const {
    return exactnum::to_double(q0) + exactnum::to_double(q1) * M_LN2;
}

void validate_query(const KernelQuery& query) {
    if (query.m < 0 || query.n < 0) throw usage_error("indices must be nonnegative");
    if (query.region == Region::triangle && query.basis == Basis::standard)
        throw usage_error("standard-basis triangle integrals are not defined");
    if (query.kernel == Kernel::power && !(query.alpha > -1))
        throw math_domain_error("power kernel requires alpha > -1");
}

Rational r_power_printed(int m, int n, const Rational& alpha) {
    if (m < n) throw usage_error("r_power_printed requires m >= n");
    if (alpha == -1) throw pole_error("r_power_printed pole at alpha = -1");
    const long d = m - n;
    exactnum::TrackedProduct up = exactnum::pochhammer_tracked((Rational(d) - alpha) / 2, n);
    up *= exactnum::pochhammer_tracked(-alpha - 1, d);
    exactnum::TrackedProduct down = exactnum::pochhammer_tracked((alpha + Rational(d) + 4) / 2, n);
    down *= exactnum::pochhammer_tracked(alpha + 2, d + 1);
    return -exactnum::tracked_ratio(up, down) / (alpha + 1);
}

Rational tilde_L_power(int m, int n, const Rational& alpha) {
    if (!(alpha > -1)) throw math_domain_error("tilde_L_power requires alpha > -1");
    if (m < n) {
        const Rational swapped = tilde_L_power(n, m, alpha);
        return ((n - m) % 2 == 0) ? swapped : -swapped;
    }
    const long d = m - n;
    // For alpha > -1 every denominator factor is positive, so the value is a
    // plain rational; numerator zeros are the genuine zero locus.
    Rational numerator = pochhammer((Rational(d) - alpha) / 2, n) * pochhammer(-alpha - 1, d);
    Rational denominator =
        (alpha + 1) * pochhammer((alpha + Rational(d) + 4) / 2, n) * pochhammer(alpha + 2, d + 1);
    Rational value = numerator / denominator;
    return (d % 2 == 0) ? value : -value;
}

Rational tilde_L_exact_sum(int m, int n, const Rational& alpha) {
    if (!(alpha > -1)) throw math_domain_error("tilde_L_exact_sum requires alpha > -1");
    Rational sum = 0;
    for (long j = 0; j <= n; ++j) {
        const Rational term = pochhammer(Rational(-n), j) * pochhammer(Rational(n) + 1, j) /
                              (exactnum::factorial(j) * pochhammer(alpha + 1, j + 1)) *
                              pochhammer(-alpha - 1 - Rational(j), m) /
                              pochhammer(alpha + 2 + Rational(j), m + 1);
        sum += term;
    }
    return ((m + n) % 2 == 0) ? sum : -sum;
}

Rational tilde_L_via_3F2(int m, int n, const Rational& alpha) {
    if (!(alpha > -1)) throw math_domain_error("tilde_L_via_3F2 requires alpha > -1");
    if (m < n) {
        const Rational swapped = tilde_L_via_3F2(n, m, alpha);
        return ((n - m) % 2 == 0) ? swapped : -swapped;
    }
    hyper::HypSeries series;
    series.num_params = {Rational(-n), Rational(n) + 1, alpha + 2};
    series.den_params = {alpha + Rational(m) + 3, alpha + 2 - Rational(m)};
    series.argument = 1;
    const Rational value = pochhammer(-alpha - 1, m) / pochhammer(alpha + 1, m + 2) *
                           hyper::eval_terminating(series);
    return ((m + n) % 2 == 0) ? value : -value;
}

Rational A_alpha(int n, const Rational& alpha, const Rational& x) {
    if (!(alpha > -1)) throw math_domain_error("A_alpha requires alpha > -1");
    if (x < 0 || x > 1) throw usage_error("A_alpha requires x in [0, 1]");
    if (x == 0) return 0;
    Rational power;
    if (is_integer(alpha))
        power = pow_int(x, to_long(alpha) + 1);
    else if (x == 1)
        power = 1;
    else
        throw math_domain_error("A_alpha: x^(alpha+1) is irrational for non-integer alpha");
    hyper::HypSeries series;
    series.num_params = {Rational(-n), Rational(n) + 1};
    series.den_params = {alpha + 2};
    series.argument = x;
    return power / (alpha + 1) * hyper::eval_terminating(series);
}

Rational r_log(int m, int n) {
    if (m < n) throw usage_error("r_log requires m >= n");
    if (m == 0 && n == 0) throw math_domain_error("r_log undefined at (0,0)");
    const long d = m - n;
    if (d == 1) throw math_domain_error("r_log pole at m - n = 1");
    const long mn = static_cast<long>(m) + n;
    return frac(1, mn * (mn + 2) * (d * d - 1));
}

Rational tilde_L_log(int m, int n) {
    if (m < n) {
        const Rational swapped = tilde_L_log(n, m);
        return ((n - m) % 2 == 0) ? swapped : -swapped;
    }
    const long d = m - n;
    if (d == 0) {
        if (n == 0) return frac(-3, 4);
        return r_log(n, n);
    }
    if (d == 1) {
        const Rational q = Rational((2 * static_cast<long>(n) + 1) * (2 * static_cast<long>(n) + 3));
        return -(odd_harmonic(n) - frac(1, 4) - 1 / q) / q;
    }
    const Rational base = r_log(m, n);
    return (d % 2 == 0) ? base : -base;
}

Rational tilde_B_power(int m, int n, const Rational& alpha) {
    if ((m - n) % 2 != 0) return 0;
    return 2 * tilde_L_power(m, n, alpha);
}

Rational tilde_B_log(int m, int n) {
    if ((m - n) % 2 != 0) return 0;
    return 2 * tilde_L_log(m, n);
}

Rational B_power(int m, int n, const Rational& alpha) {
    if (!is_integer(alpha))
        throw math_domain_error("exact standard-basis power values require integer alpha");
    return pow_int(Rational(2), to_long(alpha) + 2) * tilde_B_power(m, n, alpha);
}

double B_power_float(int m, int n, const Rational& alpha) {
    return std::pow(2.0, to_double(alpha) + 2.0) * to_double(tilde_B_power(m, n, alpha));
}

LogValue B_log(int m, int n) {
    if (m == 0 && n == 0) return {Rational(-6), Rational(4)};
    if ((m - n) % 2 != 0) return {Rational(0), Rational(0)};
    return {4 * tilde_B_log(m, n), Rational(0)};
}

Rational I_legendre_Q(int m, int k) {
    if (m < 0 || k < -1) throw usage_error("I_legendre_Q requires m >= 0 and k >= -1");
    const long diff = static_cast<long>(m) - k;
    if (diff % 2 == 0) return 0;
    const long product = diff * (static_cast<long>(k) + m + 1);
    if (product == 0) throw math_domain_error("I_legendre_Q undefined at (0,-1)");
    return frac(2, product);
}

Rational rahman_B_log(int m, int n) {
    if ((m - n) % 2 != 0) throw usage_error("rahman_B_log requires even m - n");
    if (m == 0 && n == 0) throw math_domain_error("rahman_B_log excludes (0,0)");
    return frac(2, 2 * static_cast<long>(n) + 1) *
           (I_legendre_Q(m, n + 1) - I_legendre_Q(m, n - 1));
}

std::pair<Rational, Rational> log_limit_check(int m, int n) {
    if ((m - n) % 2 != 0) throw usage_error("log_limit_check requires even m - n");
    if (m == 0 && n == 0) throw math_domain_error("log_limit_check excludes (0,0)");
    const int hi = std::max(m, n), lo = std::min(m, n);
    const long d = hi - lo;
    Rational lhs;
    if (d == 0) {
        lhs = -pochhammer(Rational(1), lo - 1) / (2 * pochhammer(Rational(2), lo));
    } else {
        lhs = 2 * pochhammer(frac(d, 2), lo) * pochhammer(Rational(1), d - 2) /
              (pochhammer(frac(d, 2) + 2, lo) * pochhammer(Rational(2), d + 1));
    }
    return {lhs, 2 * r_log(hi, lo)};
}

double entry_to_double(const EntryValue& value) {
    if (const auto* rational = std::get_if<Rational>(&value)) return to_double(*rational);
    if (const auto* logval = std::get_if<LogValue>(&value)) return logval->to_double();
    return std::get<double>(value);
}

namespace {

EntryValue compute_entry(const KernelQuery& query, int m, int n, Mode mode) {
    EntryValue exact;
    if (query.region == Region::triangle) {
        exact = query.kernel == Kernel::power ? tilde_L_power(m, n, query.alpha)
                                              : tilde_L_log(m, n);
    } else if (query.basis == Basis::shifted) {
        exact = query.kernel == Kernel::power ? tilde_B_power(m, n, query.alpha)
                                              : tilde_B_log(m, n);
    } else if (query.kernel == Kernel::log) {
        exact = B_log(m, n);
    } else if (is_integer(query.alpha)) {
        exact = B_power(m, n, query.alpha);
    } else {
        if (mode == Mode::exact)
            throw math_domain_error("exact standard-basis power values require integer alpha");
        return B_power_float(m, n, query.alpha);
    }
    if (mode == Mode::floating) return entry_to_double(exact);
    return exact;
}

} // namespace

MatrixResult assemble_matrix(const KernelQuery& query, int size, Mode mode, bool parallel) {
    validate_query(query);
    if (size < 1) throw usage_error("matrix size must be positive");

    // Prewarm the write-once memo tables touched by entry formulas so the
    // parallel loop never races on first initialization.
    exactnum::odd_harmonic(2L * size + 3);
    exactnum::harmonic(2L * size + 3);

    MatrixResult result;
    result.query = query;
    result.size = size;
    result.mode = mode;
    result.entries.assign(static_cast<std::size_t>(size),
                          std::vector<EntryValue>(static_cast<std::size_t>(size)));

    std::exception_ptr failure = nullptr;
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(dynamic) if (parallel)
#endif
    for (int m = 0; m < size; ++m) {
        for (int n = 0; n < size; ++n) {
            try {
                result.entries[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] =
                    compute_entry(query, m, n, mode);
            } catch (...) {
#ifdef _OPENMP
#pragma omp critical(matel_assemble_failure)
#endif
                if (!failure) failure = std::current_exception();
            }
        }
    }
    (void)parallel;
    if (failure) std::rethrow_exception(failure);
    return result;
}

} // namespace matel::matelem
